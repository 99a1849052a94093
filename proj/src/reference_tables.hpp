// Pinned reference data reproduced by the table commands: the supersolution
// sweep, the certified exponent examples, and the subsolution exponent
// ledger, plus the shared row-matching tolerance.
#pragma once

#include <cstddef>
#include <span>

namespace capcone {

inline constexpr int reference_tables_version = 1;

// One certified supersolution row: the sign gap r̄ − A and the four
// extremal quantities whose signs close the argument. The maxima were
// tabulated on uniform right-open grids (1000 t points on [0, tau),
// 10 xi points on [0, 0.9]); min_p is a continuum minimum over [0, 1].
struct SupersolutionRow {
  int n;
  int k;
  double beta;
  double rbar_minus_A;
  double max_qhat;
  double max_k0;
  double max_k1;
  double min_p;
};

std::span<const SupersolutionRow> appendix_rows();

// (n, k) with one admissible supersolution exponent each.
struct BetaExampleRow {
  int n;
  int k;
  double beta;
};

std::span<const BetaExampleRow> quadratics_rows();

// Subsolution exponent per pair with the margin floor its stability gap
// is recorded to exceed.
struct AlphaRow {
  int n;
  int k;
  double alpha;
  double margin_floor;
};

std::span<const AlphaRow> alpha_rows();

// Row values are quoted to two or three digits; match within 0.02 absolute
// or 2% relative, whichever is looser.
bool within_table_tolerance(double got, double ref);

}  // namespace capcone

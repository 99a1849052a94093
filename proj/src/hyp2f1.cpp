#include "hyp2f1.hpp"

#include <cmath>

#include "errors.hpp"

namespace capcone {
namespace {

bool is_nonpositive_integer(double v) {
  return v <= 0.0 && std::abs(v - std::round(v)) < 1e-12;
}

// Direct power series. Safe for x in [0, 1/2]; also used after the Euler
// transform, where a negative-integer numerator parameter terminates it.
double series_2f1(double a, double b, double c, double x) {
  constexpr int max_terms = 100000;
  double term = 1.0;
  double sum = 1.0;
  int small_run = 0;
  for (int j = 0; j < max_terms; ++j) {
    term *= (a + j) * (b + j) / ((c + j) * (j + 1.0)) * x;
    sum += term;
    if (std::abs(term) <= 1e-15 * std::abs(sum)) {
      // Two consecutive negligible terms, so a single zero coefficient
      // cannot end the sum early.
      if (++small_run >= 2) return sum;
    } else {
      small_run = 0;
    }
    if (!std::isfinite(sum)) break;
  }
  fail(errc::non_convergence, "2F1 series exhausted its term budget");
}

}  // namespace

double gauss_2f1(double a, double b, double c, double x) {
  if (is_nonpositive_integer(c))
    fail(errc::invalid_input, "2F1: c must not be a non-positive integer");
  if (!(x >= 0.0 && x < 1.0)) fail(errc::invalid_input, "2F1: need 0 <= x < 1");
  if (x <= 0.5) return series_2f1(a, b, c, x);
  // Euler transform: the reflected parameters keep the series well
  // conditioned up to x -> 1 for the families in use.
  return std::pow(1.0 - x, c - a - b) * series_2f1(c - a, c - b, c, x);
}

double gauss_2f1_deriv(double a, double b, double c, double x, int order) {
  switch (order) {
    case 0:
      return gauss_2f1(a, b, c, x);
    case 1:
      return a * b / c * gauss_2f1(a + 1.0, b + 1.0, c + 1.0, x);
    case 2:
      return a * b / c * (a + 1.0) * (b + 1.0) / (c + 1.0) *
             gauss_2f1(a + 2.0, b + 2.0, c + 2.0, x);
    default:
      fail(errc::invalid_input, "2F1 derivative order must be 0, 1 or 2");
  }
}

}  // namespace capcone

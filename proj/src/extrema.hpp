#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "errors.hpp"

namespace capcone {

struct Extremum {
  double x = 0.0;
  double value = 0.0;
};

// Dense scan followed by golden-section refinement around the three best
// samples. Robust against multiple local maxima at the grid scale; extrema
// at the interval ends are kept as-is.
inline Extremum maximize_on(double lo, double hi, const std::function<double(double)>& f,
                            int grid = 2001, double xtol = 1e-10) {
  if (!(hi > lo) || grid < 4) fail(errc::invalid_input, "maximize_on: bad interval or grid");
  std::vector<double> xs(grid), vs(grid);
  for (int i = 0; i < grid; ++i) {
    xs[i] = lo + (hi - lo) * i / (grid - 1.0);
    vs[i] = f(xs[i]);
  }
  std::array<int, 3> best = {0, 0, 0};
  {
    std::vector<int> idx(grid);
    for (int i = 0; i < grid; ++i) idx[i] = i;
    std::partial_sort(idx.begin(), idx.begin() + 3, idx.end(),
                      [&](int a, int b) { return vs[a] > vs[b]; });
    best = {idx[0], idx[1], idx[2]};
  }
  Extremum out{xs[best[0]], vs[best[0]]};
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int b : best) {
    double a = xs[std::max(0, b - 1)];
    double d = xs[std::min(grid - 1, b + 1)];
    double x1 = d - gr * (d - a), x2 = a + gr * (d - a);
    double f1 = f(x1), f2 = f(x2);
    while (d - a > xtol) {
      if (f1 > f2) {
        d = x2;
        x2 = x1;
        f2 = f1;
        x1 = d - gr * (d - a);
        f1 = f(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + gr * (d - a);
        f2 = f(x2);
      }
      if (f1 > out.value) out = {x1, f1};
      if (f2 > out.value) out = {x2, f2};
    }
  }
  return out;
}

inline Extremum minimize_on(double lo, double hi, const std::function<double(double)>& f,
                            int grid = 2001, double xtol = 1e-10) {
  Extremum m = maximize_on(lo, hi, [&](double x) { return -f(x); }, grid, xtol);
  return {m.x, -m.value};
}

// Bisection on a sign change of f over [lo, hi], to interval width xtol.
inline double bisect(double lo, double hi, const std::function<double(double)>& f,
                     double xtol, int max_iter = 200) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) fail(errc::invalid_input, "bisect: no sign change");
  for (int i = 0; i < max_iter && hi - lo > xtol; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace capcone

#include "families.hpp"

#include <cmath>

#include "hyp2f1.hpp"

namespace capcone {
namespace {

constexpr double zero_scan_top = 1.0 - 1e-9;

}  // namespace

ProfileFamily ProfileFamily::linear(const ConePair& pair) {
  ProfileFamily f;
  f.pair_ = pair;
  f.kind_ = FamilyKind::Linear;
  return f;
}

ProfileFamily ProfileFamily::barrier(const ConePair& pair, double exponent) {
  ProfileFamily f;
  f.pair_ = pair;
  f.kind_ = FamilyKind::Barrier;
  f.exponent_ = exponent;
  return f;
}

double ProfileFamily::eigenvalue() const {
  if (kind_ == FamilyKind::Linear) return pair_.n - 1.0;
  return exponent_ * (exponent_ + pair_.n - 2.0);
}

double ProfileFamily::eval(double t, int deriv) const {
  if (!(t >= 0.0 && t < 1.0)) fail(errc::invalid_input, "family eval: need 0 <= t < 1");
  double p, q;
  if (kind_ == FamilyKind::Linear) {
    p = (pair_.n - 1.0) / 2.0;
    q = -0.5;
  } else {
    p = (pair_.n + exponent_ - 2.0) / 2.0;
    q = -exponent_ / 2.0;
  }
  const double c = pair_.k / 2.0;
  const double x = t * t;
  switch (deriv) {
    case 0:
      return gauss_2f1(p, q, c, x);
    case 1:
      return 2.0 * t * gauss_2f1_deriv(p, q, c, x, 1);
    case 2:
      return 2.0 * gauss_2f1_deriv(p, q, c, x, 1) +
             4.0 * x * gauss_2f1_deriv(p, q, c, x, 2);
    default:
      fail(errc::invalid_input, "family eval: derivative order must be 0, 1 or 2");
  }
}

double ProfileFamily::second_deriv_from_ode(double t) const {
  if (!(t > 0.0 && t < 1.0)) fail(errc::invalid_input, "second_deriv_from_ode: need 0 < t < 1");
  const double f = eval(t, 0);
  const double fp = eval(t, 1);
  const double coeff = (pair_.k - 1.0) / t - (pair_.n - 1.0) * t;
  return -(coeff * fp + eigenvalue() * f) / (1.0 - t * t);
}

double ProfileFamily::zero() const {
  if (zero_) return *zero_;
  // Chebyshev-spaced scan: clusters nodes near both endpoints, where the
  // families change fastest.
  constexpr int nodes = 2001;
  const double pi = std::acos(-1.0);
  double t_prev = 0.0;
  double v_prev = eval(0.0, 0);
  for (int j = 1; j < nodes; ++j) {
    double t = zero_scan_top * 0.5 * (1.0 - std::cos(pi * j / (nodes - 1.0)));
    double v = eval(t, 0);
    if (v_prev > 0.0 && v <= 0.0) {
      double lo = t_prev, hi = t;
      while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        (eval(mid, 0) > 0.0 ? lo : hi) = mid;
      }
      zero_ = 0.5 * (lo + hi);
      return *zero_;
    }
    t_prev = t;
    v_prev = v;
  }
  fail(errc::no_zero, "profile family stays positive on [0, 1-1e-9]");
}

double legendre_residual(const ConePair& pair, double t, double f, double fp, double fpp) {
  if (!(t > 0.0 && t < 1.0)) fail(errc::invalid_input, "legendre_residual: need 0 < t < 1");
  return (1.0 - t * t) * fpp + ((pair.k - 1.0) / t - (pair.n - 1.0) * t) * fp +
         (pair.n - 1.0) * f;
}

}  // namespace capcone

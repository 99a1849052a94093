#pragma once

#include <optional>

#include "pair.hpp"

namespace capcone {

enum class FamilyKind { Linear, Barrier };

// Closed-form profile families F(t) = 2F1(p, q; k/2; t^2):
//   Linear   (p,q) = ((n-1)/2, -1/2),        eigenvalue n-1
//   Barrier  (p,q) = ((n+e-2)/2, -e/2),      eigenvalue e(e+n-2), exponent e
// Both satisfy (1-t^2) F'' + ((k-1)/t - (n-1) t) F' + eigenvalue * F = 0
// with F(0) = 1 and F'(0) = 0.
class ProfileFamily {
 public:
  static ProfileFamily linear(const ConePair& pair);
  static ProfileFamily barrier(const ConePair& pair, double exponent);

  const ConePair& pair() const { return pair_; }
  FamilyKind kind() const { return kind_; }
  double exponent() const { return exponent_; }
  double eigenvalue() const;

  // F and derivatives in t, deriv <= 2. Valid on [0,1).
  double eval(double t, int deriv = 0) const;

  // F'' recovered from the defining equation; needs t in (0,1).
  double second_deriv_from_ode(double t) const;

  // First zero in (0,1), located by a sign scan plus bisection to 1e-12 and
  // cached. Fails with no_zero when F stays positive on [0, 1-1e-9].
  double zero() const;

 private:
  ConePair pair_;
  FamilyKind kind_ = FamilyKind::Linear;
  double exponent_ = 0.0;
  mutable std::optional<double> zero_;
};

// (1-t^2) f'' + ((k-1)/t - (n-1) t) f' + (n-1) f for an arbitrary jet.
// Vanishes identically on the Linear family.
double legendre_residual(const ConePair& pair, double t, double f, double fp, double fpp);

}  // namespace capcone

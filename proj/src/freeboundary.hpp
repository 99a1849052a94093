// Vertical-contact-regime kernels: indicial exponents of the radial stability
// operator, the small-gap parametrization of near-vertical cones, and the
// explicit cap potentials with their normalizing constants and sampled
// divergence positivity.
#pragma once

#include <utility>

#include "pair.hpp"
#include "shooting.hpp"

namespace capcone {

// Roots gamma_low <= gamma_high of g^2 - (n-2)g + (n-1) = 0, the decay
// exponents R^{-gamma} admitted by r^2 u'' + (n-1) r u' + (n-1) u = 0.
// Real iff n >= 7; complex pairs are reported with real_roots=false and
// NaN root fields rather than an error.
struct IndicialData {
  int n = 0;
  bool real_roots = false;
  double gamma_low = 0;
  double gamma_high = 0;

  // Negated-exponent interval (-gamma_high, -gamma_low).
  double interval_lo() const { return -gamma_high; }
  double interval_hi() const { return -gamma_low; }
};

IndicialData indicial_roots(int n);  // n >= 3

// Applies r^2 u'' + (n-1) r u' + (n-1) u to u(r) = r^{-gamma} at r = R.
// Vanishes (to rounding) exactly at the indicial roots.
double indicial_residual(int n, double gamma, double R);

// Exponent window that must sit inside (-gamma_high, -gamma_low) for the
// comparison arguments to close: (-29/10, -21/10) for n = 7 and
// (-22/5, -8/5) for n >= 8.  n <= 6 has no real window.
std::pair<double, double> model_exponent_interval(int n);

bool model_interval_contained(const IndicialData& data);

// Quantities attached to one near-vertical solve at gap eps plus a second
// solve at 2*eps used for the slope estimate.  Defects measure the three
// first-order relations: eps*tan(theta) ~ a, theta ~ pi/2 - sqrt((n-k-1)/k)
// * eps, and that t_hat - t_eps shrinks like eps^2.
struct NearHalfPiData {
  ConePair pair;
  double eps = 0;
  double theta = 0;
  double t_eps = 0;
  double t_hat_eps = 0;
  double aperture = 0;  // t_eps / sqrt(1 - t_eps^2)
  double tan_defect = 0;
  double theta_defect = 0;
  double gap_defect = 0;
  double kappa_estimate = 0;  // first-order aperture growth rate, > 0 expected
};

// pre: 0 < eps <= 0.05 * lawson_height (the internal 2*eps solve must stay
// within the near-vertical solver's bracket).
NearHalfPiData near_half_pi_relations(ConePair pair, double eps);

// Sides of the cone {s^2 + z^2 = b r^2} in the (r, s, z) chart, r = |x'|,
// s = |y'|: Plus is the region containing the s/z axis (m > b r^2).
enum class CapSide { Plus, Minus };

// Which explicit potential applies.  For n = 7 cases I and II cover the
// admitted k; n in [8,12] with k = 1 uses III; every other n >= 8 uses IV.
enum class CapCase { I, II, III, IV };

struct CapJet {
  double value = 0;
  double grad_r = 0;
  double grad_s = 0;
  double grad_z = 0;
};

// One homogeneous potential F(r, s^2 + z_sh^2) vanishing on the (shifted)
// cone, with the side it certifies.  shift >= 0 translates z by +shift on
// the Plus side and -shift on the Minus side before evaluation.
class CapPotential {
 public:
  static CapPotential create(ConePair pair, CapSide side, double shift = 0.0);

  ConePair pair() const { return pair_; }
  CapSide side() const { return side_; }
  CapCase cap_case() const { return case_; }
  double degree() const { return degree_; }
  double shift() const { return shift_; }
  double cone_slope_sq() const { return b_; }  // b with cone m = b r^2

  // Gradient-normalizing constant from the stated convention: on the Plus
  // side R^{degree-1}/|grad| at the cone point (1, a, 0); on the Minus side
  // additionally scaled by -value(1,0,0).  Both use the unshifted potential.
  double normalization_constant() const;
  // Tabulated value for the same constant.  Disagreement is surfaced, not
  // silently reconciled; see matches_reference().
  double reference_constant() const;
  bool matches_reference(double tol = 1e-9) const;

 private:
  CapPotential() = default;

  ConePair pair_{};
  CapSide side_ = CapSide::Plus;
  CapCase case_ = CapCase::I;
  double degree_ = 0;
  double shift_ = 0;
  double b_ = 0;
};

// Shifted potential value and analytic gradient.  Cases I and III are
// side-specific formulas: evaluation off the declared side (beyond a
// 1e-9 * R^2 tolerance) fails with wrong_side.  Cases II and IV share one
// formula across both sides and evaluate anywhere with r, s >= 0.
CapJet cap_eval(const CapPotential& pot, double r, double s, double z);

// div(grad phi / |grad phi|) from closed-form second derivatives via
// (|grad|^2 Lap - D^2(grad, grad)) / |grad|^3 in the cylindrical chart.
double cap_divergence(const CapPotential& pot, double r, double s, double z);

// Degree-0 combination R^{1+degree} * div(grad phi/|grad phi|) / phi,
// positive on both sides where the divergence bound holds (value and
// divergence share their sign flip across Plus/Minus).
double cap_scaled_divergence(const CapPotential& pot, double r, double s,
                             double z);

// Reference level of the cap construction: the shifted value at (0, 1, 0)
// on the Plus side and at (1, 0, 0) on the Minus side.
double cap_level(const CapPotential& pot);

struct CapDivergenceReport {
  double min_scaled = 0;
  double argmin[3] = {0, 0, 0};  // (r, s, z)
  bool side_signed_ok = false;   // +div > 0 (Plus) resp. -div > 0 (Minus)
  int points = 0;
};

// Samples the side's open wedge on 10 log-spaced radii in [1, 10], 20
// aperture angles strictly between the cone and the side's axis, and 5
// rotations in the (s, z) plane; 1000 points total.
CapDivergenceReport cap_divergence_check(const CapPotential& pot);

struct CubicMin {
  double argmin = 0;
  double value = 0;
};

// Minimum over [0, 1] of t^3 - 3 sqrt(5) t^2 - 15 t + 25, the quantity
// whose positivity calibrates the (7,1) cap; equals 11 - 3 sqrt(5) at t=1.
CubicMin lawlor_cubic_min();

}  // namespace capcone

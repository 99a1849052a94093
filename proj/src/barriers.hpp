#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "families.hpp"

namespace capcone {

// ---- Gradient barrier from below (subsolution side) ----
//
// G(alpha, t) = (1-alpha)^2 f0^2 + (1-t^2) (f0' - f0 g'/g)^2 with g the
// exponent-alpha comparison profile. The construction works when G attains
// its minimum over [0, t0] at the endpoint t0.

double subsolution_G(const ConePair& pair, double alpha, double t);
double subsolution_G_deriv(const ConePair& pair, double alpha, double t);

// g'(t0)/g(t0) - ((n-2) t0 - (k-1)/t0)/(1 - t0^2); positive iff G' < 0 at t0.
double stability_margin(const ConePair& pair, double alpha);

// Exponent choices that make the endpoint-minimum property hold, n >= 7.
double reference_alpha(const ConePair& pair);

struct SubsolutionCheck {
  double alpha = 0.0;
  double margin = 0.0;
  double min_t = 0.0;       // argmin of G over [0, t0]
  double min_value = 0.0;
  bool endpoint_min = false;  // argmin within 1e-9 of t0
  bool strictly_decreasing = false;  // max of G' on the grid is negative
};
SubsolutionCheck check_subsolution(const ConePair& pair, double alpha);

// ---- Gradient barrier from above (supersolution side) ----
//
// One-phase model W1 = rho f0(t) + Lambda rho^beta ghat(t) matched at the
// profile angle tau to a spherical-cap continuation; validity reduces to the
// three sign conditions reported in VerificationReport.

struct SupersolutionParams {
  ConePair pair;
  double beta = 0.0;
  double t0 = 0.0;
  double tau = 0.0;
  double rbar = 0.0;      // sqrt(1-tau^2)/tau
  double A = 0.0;         // cap slope parameter
  double a1 = 0.0, a0 = 0.0;
  double lambda_coef = 0.0;  // -f0(tau) / (tau^{1-beta} ghat(tau))
  ProfileFamily f0;
  ProfileFamily ghat;
  double u_ratio = 0.0;       // f0(tau)/ghat(tau) * (1-tau^2)^{-(1-beta)/2}
  double up_tau = 0.0;        // u'(tau)
};

SupersolutionParams build_supersolution(const ConePair& pair, double beta);

struct Jet2 {
  double v = 0.0, d1 = 0.0, d2 = 0.0;
};

// u = f0 - (f0(tau)/ghat(tau)) ((1-t^2)/(1-tau^2))^{(1-beta)/2} ghat, with
// second derivatives pulled from the defining equations of f0 and ghat.
Jet2 eval_u(const SupersolutionParams& P, double t);

// H(xi) = rbar u(t)/sqrt(1-t^2) under t = tau xi / sqrt(1-tau^2+tau^2 xi^2).
Jet2 eval_H(const SupersolutionParams& P, double xi);

// Slope-matching functional; negative on [0, tau) is the matching condition.
double eval_W(const SupersolutionParams& P, double t);

// W = (1 - rbar/A) u Qhat; Qhat stays finite at tau where u vanishes.
double eval_Qhat(const SupersolutionParams& P, double t);
double W_prime_at_tau(const SupersolutionParams& P);

// Curvature functional of the cap region over (x, xi) in [0,1]^2.
double eval_K(const SupersolutionParams& P, double x, double xi);

// Coefficients of the cubic (A^2+x)^2 K(x, .) in x, plus the tabulated
// concavity margin (p2 with the axis term sign-flipped) + p3 + min(p3, 0).
struct CubicCoeffs {
  double p0 = 0.0, p1 = 0.0, p2 = 0.0, p3 = 0.0;
  double script_p = 0.0;
};
CubicCoeffs eval_P(const SupersolutionParams& P, double xi);

// (S'1) in the sharp form A - rbar = (1-beta) / (tau sqrt(1-tau^2)
// [tau (f0'/f0 - ghat'/ghat)(tau) - (1-beta)]).
double a_minus_rbar_identity(const SupersolutionParams& P);

// Reported extrema reproduce the embedded reference tables' sampling: Qhat is
// maximized over the right-open uniform 1000-point t-grid on [0, tau), the K
// slices over the right-open 10-point xi-grid on [0, 0.9], and script-P is
// minimized over the full closed interval [0, 1].
struct VerificationReport {
  SupersolutionParams params;
  double rbar_minus_A = 0.0;
  double max_qhat = 0.0;
  double max_k0 = 0.0;
  double max_k1 = 0.0;
  double min_script_p = 0.0;
  double w_prime_tau = 0.0;
  bool s1_ok = false, s2_ok = false, s3_ok = false;
  bool all_ok() const { return s1_ok && s2_ok && s3_ok; }
};
VerificationReport verify_supersolution(const ConePair& pair, double beta);

// Scan a beta interval; build/verification failures count as invalid.
struct BetaScanResult {
  std::vector<double> betas;
  std::vector<bool> valid;
  std::vector<std::pair<double, double>> runs;  // maximal valid subintervals
};
BetaScanResult scan_beta(const ConePair& pair, double beta_lo, double beta_hi, int count);

}  // namespace capcone

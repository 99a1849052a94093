#pragma once

#include <optional>
#include <vector>

#include "pair.hpp"

namespace capcone {

// Shooting data for the rescaled profile equation
//   (1-t^2) f'' + (f - t f') + (n-2) (1 + (1-t^2) lambda f'^2 / (1 + lambda f^2)) (f - A f') = 0
// with even initial data f(0) = a, f'(0) = 0. lambda = 0 is the linear
// problem; lambda = 1 is the unscaled geometric equation.
struct ShootRequest {
  ConePair pair;
  double lambda = 1.0;
  double a = 1.0;
};

enum class TerminalKind { ZeroCrossing, Blowup, LawsonExact };

struct TerminalEvent {
  TerminalKind kind = TerminalKind::ZeroCrossing;
  double t = 0.0;      // crossing time, or the blow-up time b
  double value = 0.1;  // f'(t) at a crossing, f(b) at a blow-up
};

struct Sample {
  double t = 0.0, f = 0.0, fp = 0.0;
};

// Dense shooting output: accepted integrator steps plus refined event points,
// strictly increasing in t. eval interpolates with cubic Hermite pieces.
struct ProfileTrajectory {
  std::vector<Sample> samples;
  TerminalEvent terminal;
  std::optional<Sample> zero_crossing;  // set when the run continues past f = 0
  double eval(double t) const;
  double eval_slope(double t) const;
  double t_end() const { return samples.back().t; }
};

enum class HeightClass { ReachesZero, Lawson, BlowsUpPositive };

struct IntegrateOptions {
  // true: return at the first zero of f. false: continue through the zero
  // and stop only when the slope blows up.
  bool stop_at_zero = true;
};

// f'' isolated from the profile equation. Needs 0 < t < 1.
double ode_rhs(const ShootRequest& req, double t, double f, double fp);

// Residual of the unscaled equation (1+f^2) L f + (n-2)(1-t^2) f'^2 (f - A f')
// for an arbitrary jet, where L is the Legendre operator.
double capillary_residual(const ConePair& pair, double t, double f, double fp, double fpp);

// Even Taylor state a + c2 t^2 + c4 t^4 at t_seed in (0, 1e-3]; error O(t^6).
Sample taylor_seed(const ShootRequest& req, double t_seed);
double fourth_deriv_at_zero(const ShootRequest& req);
double h_at_zero(const ShootRequest& req);

ProfileTrajectory integrate_profile(const ShootRequest& req, const IntegrateOptions& opt = {});

// Exact cone profile sqrt((k - (n-1) t^2)/(n-k-1)) and its slope, defined up
// to the root sqrt(k/(n-1)).
double lawson_profile(const ConePair& pair, double t);
double lawson_profile_slope(const ConePair& pair, double t);

// Conserved-sign quantity f (f - A f') - 1/(n-2): vanishes identically on the
// exact cone, and otherwise keeps the strict sign of a - a_{n,k} along the
// whole trajectory (it is not pointwise monotone).
double psi_eval(const ConePair& pair, double t, double f, double fp);
double psi_at_zero(const ConePair& pair, double a);

// Decide crossing versus positive blow-up from the initial height alone,
// cross-checked against an actual integration away from the exact height.
HeightClass classify_by_height(const ConePair& pair, double a);

// Low-order data at t = 0 of the Riccati pair q = f'/f, w = lambda f^2/(1+lambda f^2).
struct RiccatiSeed {
  double q1;  // q'(0)
  double w2;  // w''(0)
  double q3;  // q'''(0)
  double w4;  // w''''(0)
};
RiccatiSeed riccati_seed(const ConePair& pair, double w0);

}  // namespace capcone

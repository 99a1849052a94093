#pragma once

#include <optional>
#include <vector>

#include "profile_ode.hpp"

namespace capcone {

// A profile whose graph meets the axis at contact angle theta:
// tan(theta) = sqrt(1 - t_a^2) |f'(t_a)| at the first root t_a.
struct ConeSolution {
  ConePair pair;
  double a = 0.0;
  double theta = 0.0;
  double t_a = 0.0;
  ProfileTrajectory trajectory;
  // Near-vertical solves carry the overshoot data: the slope blows up at
  // t_hat with terminal depth -eps.
  std::optional<double> t_hat;
  std::optional<double> eps;
};

// Contact angle of the height-a profile. Fails with not_reaching_zero when
// the profile blows up before its root (a above the exact cone height).
double terminal_angle(const ConePair& pair, double a);

// Height 1/(sqrt(1 - t_0^2) |f_0'(t_0)|) of the linearized solve at unit
// angle; a(theta) ~ c_{n,k} theta as theta -> 0.
double linear_theta_coefficient(const ConePair& pair);

// Shooting solve for theta in (0, pi/2]. theta at pi/2 (within 1e-9) returns
// the exact cone; angles within 0.05 of pi/2 are solved through the
// overshoot parameter, the rest by bisection on the height.
ConeSolution solve_cone(const ConePair& pair, double theta);

// Find the height whose continued profile overshoots to exactly -eps at its
// blow-up time. Requires 0 < eps <= 0.1 * lawson_height.
ConeSolution solve_near_half_pi(const ConePair& pair, double eps);

struct SweepMember {
  double parameter = 0.0;  // height a, or scaling lambda
  bool lawson = false;
  ProfileTrajectory trajectory;
};

struct FamilySweepResult {
  std::vector<SweepMember> members;
  // Height sweeps: pairwise sign-change counts of f_i - f_j on the common
  // domain, resampled at 4096 points.
  std::vector<std::vector<int>> crossings;
  // Scaling sweeps: strict pointwise ordering (larger lambda below) away
  // from t = 0, with the smallest pairwise gap found. The leading 5% of the
  // common domain is excluded: members separate only at fourth order there.
  bool ordered = false;
  double min_gap = 0.0;
};

FamilySweepResult family_sweep_heights(const ConePair& pair, std::vector<double> heights);
FamilySweepResult family_sweep_lambda(const ConePair& pair, double a, std::vector<double> lambdas);

int crossing_count(const ProfileTrajectory& a, const ProfileTrajectory& b);

// Scaling identity for the height/lambda variations: 2 lambda v_lambda =
// a v_a - f, with v_* central differences at relative step 1e-5.
struct VariationCheck {
  double defect = 0.0;      // sup-norm of the identity residual
  double va_at_zero = 0.0;  // 1 by construction
  double vl_at_zero = 0.0;  // 0 by construction
};
VariationCheck variation_identity(const ConePair& pair, double lambda, double a);

// Distance of the theta-solve from its linearization c_{n,k} theta f_0.
struct SmallThetaDeviation {
  double theta = 0.0;
  double a = 0.0;
  double sup_deviation = 0.0;  // sup |f_theta - c theta f_0| on [0, t_a], O(theta^3)
  double root_gap = 0.0;       // |t_a - t_0|, O(theta^2)
};
SmallThetaDeviation small_theta_deviation(const ConePair& pair, double theta);

}  // namespace capcone

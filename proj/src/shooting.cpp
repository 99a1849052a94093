#include "shooting.hpp"

#include <algorithm>
#include <cmath>

#include "families.hpp"

namespace capcone {
namespace {

constexpr double theta_tol = 1e-10;
constexpr double half_pi_snap = 1e-9;
constexpr double near_vertical_band = 0.05;

double angle_of(double t, double fp) {
  return std::atan(std::sqrt(1.0 - t * t) * std::abs(fp));
}

struct AngleShot {
  double theta;
  ProfileTrajectory traj;
};

AngleShot shoot_angle(const ConePair& pair, double a) {
  AngleShot shot{0.0, integrate_profile({pair, 1.0, a})};
  if (shot.traj.terminal.kind != TerminalKind::ZeroCrossing)
    fail(errc::not_reaching_zero, "terminal_angle: profile blows up before reaching zero");
  shot.theta = angle_of(shot.traj.terminal.t, shot.traj.terminal.value);
  return shot;
}

// Exact cone profile packaged as a trajectory. Samples cluster toward the
// root, where the closed form turns vertical; the terminal event carries the
// exact root.
ConeSolution exact_lawson_solution(const ConePair& pair) {
  ConeSolution sol;
  sol.pair = pair;
  sol.a = pair.lawson_height();
  sol.theta = std::acos(-1.0) / 2.0;
  sol.t_a = pair.lawson_root();
  const int nodes = 2001;
  const double pi = std::acos(-1.0);
  sol.trajectory.samples.reserve(nodes);
  for (int j = 0; j < nodes; ++j) {
    const double t = sol.t_a * std::sin(0.5 * pi * j / double(nodes));
    sol.trajectory.samples.push_back(
        {t, lawson_profile(pair, t), j == 0 ? 0.0 : lawson_profile_slope(pair, t)});
  }
  sol.trajectory.terminal = {TerminalKind::LawsonExact, sol.t_a, 0.0};
  return sol;
}

ProfileTrajectory truncate_at_crossing(const ProfileTrajectory& full) {
  ProfileTrajectory out;
  const Sample cross = *full.zero_crossing;
  for (const Sample& s : full.samples) {
    if (s.t >= cross.t) break;
    out.samples.push_back(s);
  }
  out.samples.push_back(cross);
  out.terminal = {TerminalKind::ZeroCrossing, cross.t, cross.fp};
  return out;
}

}  // namespace

double terminal_angle(const ConePair& pair, double a) { return shoot_angle(pair, a).theta; }

double linear_theta_coefficient(const ConePair& pair) {
  const ProfileFamily f0 = ProfileFamily::linear(pair);
  const double t0 = f0.zero();
  return 1.0 / (std::sqrt(1.0 - t0 * t0) * std::abs(f0.eval(t0, 1)));
}

ConeSolution solve_near_half_pi(const ConePair& pair, double eps) {
  const double astar = pair.lawson_height();
  if (!(eps > 0.0 && eps <= 0.1 * astar))
    fail(errc::invalid_input, "solve_near_half_pi: need 0 < eps <= 0.1 * lawson height");

  // Overshoot depth f(b_a) + eps, increasing in a with limit eps at the
  // exact height.
  auto depth = [&](double a) {
    ProfileTrajectory tr = integrate_profile({pair, 1.0, a}, {.stop_at_zero = false});
    if (tr.terminal.kind != TerminalKind::Blowup || !tr.zero_crossing)
      fail(errc::numerical_failure, "solve_near_half_pi: expected a crossing then a blow-up");
    return std::make_pair(tr.terminal.value + eps, std::move(tr));
  };

  double hi = astar * (1.0 - 1e-12);
  double lo = 0.0;
  double gap = 1e-6;
  for (; gap < 0.7; gap *= 2.0) {
    lo = astar * (1.0 - gap);
    if (depth(lo).first < 0.0) break;
  }
  if (gap >= 0.7)
    fail(errc::non_convergence, "solve_near_half_pi: no bracket for the overshoot depth");

  ProfileTrajectory best;
  double a_mid = 0.5 * (lo + hi);
  bool converged = false;
  for (int i = 0; i < 300; ++i) {
    a_mid = 0.5 * (lo + hi);
    auto [g, tr] = depth(a_mid);
    if (std::abs(g) <= 1e-10) {
      best = std::move(tr);
      converged = true;
      break;
    }
    (g > 0.0 ? hi : lo) = a_mid;
  }
  if (!converged)
    fail(errc::non_convergence, "solve_near_half_pi: overshoot depth did not settle");

  ConeSolution sol;
  sol.pair = pair;
  sol.a = a_mid;
  sol.t_hat = best.terminal.t;
  sol.eps = -best.terminal.value;
  const Sample cross = *best.zero_crossing;
  sol.t_a = cross.t;
  sol.theta = angle_of(cross.t, cross.fp);
  sol.trajectory = truncate_at_crossing(best);
  return sol;
}

ConeSolution solve_cone(const ConePair& pair, double theta) {
  const double half_pi = std::acos(-1.0) / 2.0;
  if (!(theta > 0.0 && theta <= half_pi + half_pi_snap))
    fail(errc::invalid_input, "solve_cone: need theta in (0, pi/2]");
  if (std::abs(theta - half_pi) <= half_pi_snap) return exact_lawson_solution(pair);

  const double astar = pair.lawson_height();
  if (theta > half_pi - near_vertical_band) {
    // The height becomes numerically degenerate against theta here, so
    // bisect the overshoot depth instead. theta(eps) decreases in eps.
    double eps_mid = astar / std::tan(theta);
    double lo = eps_mid / 8.0, hi = std::min(8.0 * eps_mid, 0.1 * astar);
    auto angle_at = [&](double e) { return solve_near_half_pi(pair, e).theta; };
    while (angle_at(hi) > theta) {
      lo = hi;
      hi *= 2.0;
      if (hi > 0.1 * astar) {
        hi = 0.1 * astar;
        break;
      }
    }
    while (angle_at(lo) < theta) {
      hi = lo;
      lo /= 2.0;
      if (lo < 1e-12 * astar)
        fail(errc::non_convergence, "solve_cone: no overshoot bracket near pi/2");
    }
    for (int i = 0; i < 100; ++i) {
      eps_mid = 0.5 * (lo + hi);
      ConeSolution sol = solve_near_half_pi(pair, eps_mid);
      if (std::abs(sol.theta - theta) <= theta_tol) return sol;
      (sol.theta > theta ? lo : hi) = eps_mid;
    }
    fail(errc::non_convergence, "solve_cone: angle did not settle near pi/2");
  }

  double lo = 1e-8, hi = astar - 1e-12 * astar;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    AngleShot shot = shoot_angle(pair, mid);
    if (std::abs(shot.theta - theta) <= theta_tol) {
      ConeSolution sol;
      sol.pair = pair;
      sol.a = mid;
      sol.theta = shot.theta;
      sol.t_a = shot.traj.terminal.t;
      sol.trajectory = std::move(shot.traj);
      return sol;
    }
    (shot.theta > theta ? hi : lo) = mid;
  }
  fail(errc::non_convergence, "solve_cone: angle did not settle within 200 bisections");
}

int crossing_count(const ProfileTrajectory& a, const ProfileTrajectory& b) {
  const double T = std::min(a.t_end(), b.t_end());
  constexpr int grid = 4096;
  int count = 0, last = 0;
  for (int j = 0; j < grid; ++j) {
    const double t = T * (j + 1) / double(grid);
    const double d = a.eval(t) - b.eval(t);
    const int s = (d > 0.0) - (d < 0.0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

FamilySweepResult family_sweep_heights(const ConePair& pair, std::vector<double> heights) {
  if (heights.empty()) fail(errc::invalid_input, "family_sweep: need at least one height");
  std::sort(heights.begin(), heights.end());
  const double astar = pair.lawson_height();
  FamilySweepResult out;
  for (double a : heights) {
    SweepMember m;
    m.parameter = a;
    m.lawson = std::abs(a - astar) <= 1e-9 * astar;
    m.trajectory = m.lawson ? exact_lawson_solution(pair).trajectory
                            : integrate_profile({pair, 1.0, a});
    out.members.push_back(std::move(m));
  }
  const size_t n = out.members.size();
  out.crossings.assign(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      out.crossings[i][j] = out.crossings[j][i] =
          crossing_count(out.members[i].trajectory, out.members[j].trajectory);
  return out;
}

FamilySweepResult family_sweep_lambda(const ConePair& pair, double a, std::vector<double> lambdas) {
  if (lambdas.empty()) fail(errc::invalid_input, "family_sweep: need at least one lambda");
  std::sort(lambdas.begin(), lambdas.end());
  FamilySweepResult out;
  const double astar = pair.lawson_height();
  for (double lam : lambdas) {
    SweepMember m;
    m.parameter = lam;
    m.lawson = lam == 1.0 && std::abs(a - astar) <= 1e-9 * astar;
    m.trajectory = integrate_profile({pair, lam, a});
    out.members.push_back(std::move(m));
  }
  out.ordered = true;
  out.min_gap = std::numeric_limits<double>::infinity();
  constexpr int grid = 4096;
  for (size_t i = 0; i + 1 < out.members.size(); ++i) {
    const auto& lo = out.members[i].trajectory;   // smaller lambda, higher graph
    const auto& hi = out.members[i + 1].trajectory;
    const double T = std::min(lo.t_end(), hi.t_end());
    // All members share the axis jet through t^2 (the scaling enters with
    // f'^2), so the gap opens like t^4: skip the leading 5% of the common
    // domain, where it sits below roundoff.
    for (int j = grid / 20; j < grid; ++j) {
      const double t = T * (j + 1) / double(grid);
      const double gap = lo.eval(t) - hi.eval(t);
      out.min_gap = std::min(out.min_gap, gap);
      if (gap <= 0.0) out.ordered = false;
    }
  }
  return out;
}

VariationCheck variation_identity(const ConePair& pair, double lambda, double a) {
  if (!(a > 0.0) || !(lambda >= 0.0))
    fail(errc::invalid_input, "variation_identity: need a > 0 and lambda >= 0");
  const double ha = 1e-5 * a;
  const ProfileTrajectory base = integrate_profile({pair, lambda, a});
  const ProfileTrajectory ap = integrate_profile({pair, lambda, a + ha});
  const ProfileTrajectory am = integrate_profile({pair, lambda, a - ha});
  double T = std::min({base.t_end(), ap.t_end(), am.t_end()});

  std::optional<ProfileTrajectory> lp, lm;
  double hl = 0.0;
  if (lambda > 0.0) {
    hl = 1e-5 * lambda;
    lp = integrate_profile({pair, lambda + hl, a});
    lm = integrate_profile({pair, lambda - hl, a});
    T = std::min({T, lp->t_end(), lm->t_end()});
  }
  T *= 0.995;

  VariationCheck out;
  constexpr int grid = 201;
  for (int j = 0; j < grid; ++j) {
    const double t = T * j / (grid - 1.0);
    const double va = (ap.eval(t) - am.eval(t)) / (2.0 * ha);
    const double vl = lambda > 0.0 ? (lp->eval(t) - lm->eval(t)) / (2.0 * hl) : 0.0;
    out.defect = std::max(out.defect,
                          std::abs(2.0 * lambda * vl - (a * va - base.eval(t))));
    if (j == 0) {
      out.va_at_zero = va;
      out.vl_at_zero = vl;
    }
  }
  return out;
}

SmallThetaDeviation small_theta_deviation(const ConePair& pair, double theta) {
  const ConeSolution sol = solve_cone(pair, theta);
  const ProfileFamily f0 = ProfileFamily::linear(pair);
  const double c = linear_theta_coefficient(pair);
  SmallThetaDeviation out;
  out.theta = theta;
  out.a = sol.a;
  out.root_gap = std::abs(sol.t_a - f0.zero());
  constexpr int grid = 2001;
  for (int j = 0; j < grid; ++j) {
    const double t = sol.t_a * j / (grid - 1.0);
    out.sup_deviation =
        std::max(out.sup_deviation, std::abs(sol.trajectory.eval(t) - c * theta * f0.eval(t)));
  }
  return out;
}

}  // namespace capcone

#include "profile_ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <boost/numeric/odeint.hpp>

namespace capcone {
namespace {

namespace ode = boost::numeric::odeint;
using state2 = std::array<double, 2>;

constexpr double seed_time = 1e-4;
constexpr double slope_chart_switch = 1e3;   // leave the graph chart here
constexpr double inv_slope_stop = 1e-14;     // blow-up once |1/f'| drops below
constexpr long step_budget = 2000000;

void validate(const ShootRequest& req) {
  if (!(req.a > 0.0)) fail(errc::invalid_input, "shoot: need a > 0");
  if (!(req.lambda >= 0.0)) fail(errc::invalid_input, "shoot: need lambda >= 0");
}

double hermite(double t, const Sample& l, const Sample& r, bool slope) {
  const double dt = r.t - l.t;
  const double s = (t - l.t) / dt;
  if (!slope) {
    const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
    const double h10 = s * (1.0 - s) * (1.0 - s);
    const double h01 = s * s * (3.0 - 2.0 * s);
    const double h11 = s * s * (s - 1.0);
    return h00 * l.f + h10 * dt * l.fp + h01 * r.f + h11 * dt * r.fp;
  }
  const double g00 = 6.0 * s * (s - 1.0) / dt;
  const double g10 = 3.0 * s * s - 4.0 * s + 1.0;
  const double g01 = -6.0 * s * (s - 1.0) / dt;
  const double g11 = 3.0 * s * s - 2.0 * s;
  return g00 * l.f + g10 * l.fp + g01 * r.f + g11 * r.fp;
}

double trajectory_eval(const ProfileTrajectory& tr, double t, bool slope) {
  const auto& s = tr.samples;
  if (s.size() < 2 || t < s.front().t || t > s.back().t)
    fail(errc::out_of_domain, "trajectory eval: t outside the sampled range");
  auto it = std::upper_bound(s.begin(), s.end(), t,
                             [](double v, const Sample& smp) { return v < smp.t; });
  if (it == s.end()) --it;
  if (it == s.begin()) ++it;
  return hermite(t, *(it - 1), *it, slope);
}

}  // namespace

double ProfileTrajectory::eval(double t) const { return trajectory_eval(*this, t, false); }
double ProfileTrajectory::eval_slope(double t) const { return trajectory_eval(*this, t, true); }

double ode_rhs(const ShootRequest& req, double t, double f, double fp) {
  if (t >= 1.0) fail(errc::out_of_domain, "ode_rhs: the equation is singular at t >= 1");
  if (!(t > 0.0)) fail(errc::out_of_domain, "ode_rhs: need t > 0, the axis is a regular-singular point");
  const int n = req.pair.n;
  const double one_mt2 = 1.0 - t * t;
  const double h = f - req.pair.A(t) * fp;
  const double gradient_factor =
      1.0 + one_mt2 * req.lambda * fp * fp / (1.0 + req.lambda * f * f);
  return -((f - t * fp) + (n - 2.0) * gradient_factor * h) / one_mt2;
}

double capillary_residual(const ConePair& pair, double t, double f, double fp, double fpp) {
  const double one_mt2 = 1.0 - t * t;
  const double h = f - pair.A(t) * fp;
  const double lf = one_mt2 * fpp + (f - t * fp) + (pair.n - 2.0) * h;
  return (1.0 + f * f) * lf + (pair.n - 2.0) * one_mt2 * fp * fp * h;
}

double fourth_deriv_at_zero(const ShootRequest& req) {
  validate(req);
  const double n = req.pair.n, k = req.pair.k, a = req.a, lambda = req.lambda;
  const double denom = k * k * k * (k + 2.0);
  return -3.0 * (n - 1.0) * a / denom * (k * k * (n + 1.0) + 2.0 * (n - 1.0) * (n - k - 1.0)) +
         6.0 * (n - 1.0) * (n - 1.0) * (n - k - 1.0) / denom * a / (1.0 + lambda * a * a);
}

double h_at_zero(const ShootRequest& req) {
  validate(req);
  return (req.pair.n - req.pair.k - 1.0) / (req.pair.k * (req.pair.n - 2.0)) * req.a;
}

Sample taylor_seed(const ShootRequest& req, double t_seed) {
  validate(req);
  if (!(t_seed > 0.0 && t_seed <= 1e-3))
    fail(errc::invalid_input, "taylor_seed: need 0 < t_seed <= 1e-3");
  const double c2 = -(req.pair.n - 1.0) * req.a / (2.0 * req.pair.k);
  const double c4 = fourth_deriv_at_zero(req) / 24.0;
  const double t2 = t_seed * t_seed;
  return {t_seed, req.a + c2 * t2 + c4 * t2 * t2,
          2.0 * c2 * t_seed + 4.0 * c4 * t2 * t_seed};
}

ProfileTrajectory integrate_profile(const ShootRequest& req, const IntegrateOptions& opt) {
  validate(req);
  ProfileTrajectory out;
  const Sample seed = taylor_seed(req, seed_time);
  out.samples.push_back({0.0, req.a, 0.0});
  out.samples.push_back(seed);

  auto sys = [&](const state2& y, state2& dy, double t) {
    dy[0] = y[1];
    dy[1] = ode_rhs(req, t, y[0], y[1]);
  };

  auto stepper = ode::make_dense_output(1e-12, 1e-14, ode::runge_kutta_dopri5<state2>());
  stepper.initialize(state2{seed.f, seed.fp}, seed_time, 1e-5);

  bool crossed = false;
  long steps = 0;
  double switch_t = 0.0, switch_f = 0.0, switch_p = 0.0;
  bool switched = false;

  while (!switched) {
    if (++steps > step_budget) fail(errc::numerical_failure, "profile integration stalled");
    const auto span = stepper.do_step(sys);
    const double t1 = stepper.current_time();
    const state2& y1 = stepper.current_state();
    if (t1 > 1.0 - 1e-12)
      fail(errc::numerical_failure, "profile ran into the coordinate singularity t = 1");

    if (!crossed && y1[0] <= 0.0) {
      double lo = span.first, hi = t1;
      state2 yz{};
      for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        stepper.calc_state(mid, yz);
        (yz[0] > 0.0 ? lo : hi) = mid;
      }
      const double tz = 0.5 * (lo + hi);
      stepper.calc_state(tz, yz);
      out.samples.push_back({tz, yz[0], yz[1]});
      if (opt.stop_at_zero) {
        out.terminal = {TerminalKind::ZeroCrossing, tz, yz[1]};
        return out;
      }
      out.zero_crossing = Sample{tz, yz[0], yz[1]};
      crossed = true;
      if (t1 <= tz) continue;
    }
    out.samples.push_back({t1, y1[0], y1[1]});
    if (std::abs(y1[1]) >= slope_chart_switch) {
      switch_t = t1;
      switch_f = y1[0];
      switch_p = y1[1];
      switched = true;
    }
  }

  // Inverse chart: the graph is steep, so parametrize by f and track (t, f').
  // f decreases and t keeps increasing since dt/df = 1/f' with f' < 0.
  auto sys_inv = [&](const state2& s, state2& ds, double fval) {
    ds[0] = 1.0 / s[1];
    ds[1] = ode_rhs(req, s[0], fval, s[1]) / s[1];
  };
  auto inv = ode::make_dense_output(1e-12, 1e-14, ode::runge_kutta_dopri5<state2>());
  inv.initialize(state2{switch_t, switch_p}, switch_f, -1e-6 * (std::abs(switch_f) + 1e-6));

  while (true) {
    if (++steps > step_budget) fail(errc::numerical_failure, "profile integration stalled");
    inv.do_step(sys_inv);
    const double f1 = inv.current_time();
    const state2& s1 = inv.current_state();
    if (s1[0] > 1.0 - 1e-12)
      fail(errc::numerical_failure, "profile ran into the coordinate singularity t = 1");

    if (!crossed && f1 <= 0.0) {
      state2 sz{};
      inv.calc_state(0.0, sz);
      out.samples.push_back({sz[0], 0.0, sz[1]});
      if (opt.stop_at_zero) {
        out.terminal = {TerminalKind::ZeroCrossing, sz[0], sz[1]};
        return out;
      }
      out.zero_crossing = Sample{sz[0], 0.0, sz[1]};
      crossed = true;
    }
    out.samples.push_back({s1[0], f1, s1[1]});
    if (std::abs(1.0 / s1[1]) < inv_slope_stop) {
      out.terminal = {TerminalKind::Blowup, s1[0], f1};
      return out;
    }
  }
}

double lawson_profile(const ConePair& pair, double t) {
  double num = pair.k - (pair.n - 1.0) * t * t;
  // Evaluation at the root lands on either side of zero in roundoff; clamp
  // the hairline and reject only genuinely past-root arguments.
  if (num < 0.0) {
    if (num < -1e-12 * pair.k)
      fail(errc::out_of_domain, "lawson_profile: past the profile root");
    num = 0.0;
  }
  return std::sqrt(num / (pair.n - pair.k - 1.0));
}

double lawson_profile_slope(const ConePair& pair, double t) {
  const double f = lawson_profile(pair, t);
  if (f == 0.0) fail(errc::out_of_domain, "lawson_profile_slope: vertical at the root");
  return -(pair.n - 1.0) * t / ((pair.n - pair.k - 1.0) * f);
}

double psi_eval(const ConePair& pair, double t, double f, double fp) {
  if (!(t > 0.0)) fail(errc::invalid_input, "psi_eval: need t > 0, use psi_at_zero on the axis");
  return f * (f - pair.A(t) * fp) - 1.0 / (pair.n - 2.0);
}

double psi_at_zero(const ConePair& pair, double a) {
  return (pair.n - pair.k - 1.0) / (pair.k * (pair.n - 2.0)) * a * a - 1.0 / (pair.n - 2.0);
}

HeightClass classify_by_height(const ConePair& pair, double a) {
  if (!(a > 0.0)) fail(errc::invalid_input, "classify_by_height: need a > 0");
  const double astar = pair.lawson_height();
  if (std::abs(a - astar) <= 1e-9 * astar) return HeightClass::Lawson;
  const auto traj = integrate_profile({pair, 1.0, a});
  const bool below = a < astar;
  if (below && traj.terminal.kind == TerminalKind::ZeroCrossing) return HeightClass::ReachesZero;
  if (!below && traj.terminal.kind == TerminalKind::Blowup && traj.terminal.value > 0.0)
    return HeightClass::BlowsUpPositive;
  fail(errc::ambiguous_near_lawson,
       "classify_by_height: integration outcome contradicts the height comparison");
}

RiccatiSeed riccati_seed(const ConePair& pair, double w0) {
  if (!(w0 > 0.0 && w0 < 1.0)) fail(errc::invalid_input, "riccati_seed: need w0 in (0,1)");
  const double n = pair.n, k = pair.k;
  const double denom = k * k * k * (k + 2.0);
  RiccatiSeed s{};
  s.q1 = -(n - 1.0) / k;
  s.w2 = -2.0 * (n - 1.0) / k * w0 * (1.0 - w0);
  s.q3 = -6.0 * (n - 1.0) / denom *
         (k * k * n + (n - 1.0) * ((n - k - 1.0) * w0 + k));
  s.w4 = 12.0 * (n - 1.0) * (n - 1.0) * w0 * (1.0 - w0) / denom *
         (k * (k + 2.0) * (1.0 - 2.0 * w0) -
          (k * k * n / (n - 1.0) + (n - k - 1.0) * w0 + k));
  return s;
}

}  // namespace capcone

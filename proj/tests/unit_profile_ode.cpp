#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "errors.hpp"
#include "families.hpp"
#include "pair.hpp"
#include "profile_ode.hpp"

using namespace capcone;

namespace {

// Fits the even expansion v(0) + (v''(0)/2) h^2 + (v''''(0)/24) h^4 + c6 h^6
// through three sampled heights and returns v''''(0). Error O(h^4).
double fourth_deriv_fit(double v0, const std::array<double, 3>& h,
                        const std::array<double, 3>& v) {
  // Solve the 3x3 Vandermonde system in h^2 for (c2, c4, c6) by elimination.
  double m[3][4];
  for (int i = 0; i < 3; ++i) {
    const double x = h[i] * h[i];
    m[i][0] = x;
    m[i][1] = x * x;
    m[i][2] = x * x * x;
    m[i][3] = v[i] - v0;
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    for (int c = 0; c < 4; ++c) std::swap(m[piv][c], m[col][c]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return 24.0 * m[1][3] / m[1][1];
}

double lawson_second_deriv(const ConePair& p, double t) {
  const double c = (p.n - 1.0) / (p.n - p.k - 1.0);
  const double f = lawson_profile(p, t);
  return -c / f - c * c * t * t / (f * f * f);
}

}  // namespace

TEST_CASE("axis jet of the unit-height profile") {
  const ShootRequest req{ConePair::create(7, 1), 1.0, 1.0};
  CHECK(fourth_deriv_at_zero(req) == -228.0);
  // Independent recovery from integrated values: fit the even expansion
  // through three small heights, avoiding the Taylor-seed code path.
  const auto traj = integrate_profile(req, {false});
  const std::array<double, 3> h = {0.005, 0.01, 0.02};
  const std::array<double, 3> v = {traj.eval(h[0]), traj.eval(h[1]), traj.eval(h[2])};
  // The three-point even fit truncates at h^6; at these steps that limits
  // agreement to about a part in a thousand.
  CHECK(fourth_deriv_fit(1.0, h, v) == doctest::Approx(-228.0).epsilon(2e-3));
}

TEST_CASE("taylor seed agrees with the integrated solution just past it") {
  const ShootRequest req{ConePair::create(7, 2), 1.0, 0.6};
  const auto traj = integrate_profile(req);
  const Sample s = taylor_seed(req, 9e-4);
  CHECK(traj.eval(s.t) == doctest::Approx(s.f).epsilon(1e-10));
  CHECK(traj.eval_slope(s.t) == doctest::Approx(s.fp).epsilon(1e-7));
  CHECK_THROWS_AS(taylor_seed(req, 0.0), error);
  CHECK_THROWS_AS(taylor_seed(req, 2e-3), error);
}

TEST_CASE("riccati axis data") {
  const ConePair p = ConePair::create(7, 1);
  const RiccatiSeed s = riccati_seed(p, 0.9);
  CHECK(s.q1 == doctest::Approx(-6.0));
  CHECK(s.w2 == doctest::Approx(-1.08));
  CHECK(s.w4 == doctest::Approx(-117.504).epsilon(1e-12));
  // Independent recovery of w''''(0): w = f^2/(1+f^2) along the profile whose
  // height realizes w(0) = 0.9, i.e. a = 3.
  const auto traj = integrate_profile({p, 1.0, 3.0}, {false});
  const std::array<double, 3> h = {0.004, 0.008, 0.016};
  std::array<double, 3> w{};
  for (int i = 0; i < 3; ++i) {
    const double f = traj.eval(h[i]);
    w[i] = f * f / (1.0 + f * f);
  }
  CHECK(fourth_deriv_fit(0.9, h, w) == doctest::Approx(-117.504).epsilon(1e-2));
  CHECK_THROWS_AS(riccati_seed(p, 0.0), error);
  CHECK_THROWS_AS(riccati_seed(p, 1.0), error);
}

TEST_CASE("exact cone profile satisfies the equation with vanishing invariant") {
  for (auto [n, k] : {std::pair{7, 1}, {9, 4}, {12, 10}}) {
    const ConePair p = ConePair::create(n, k);
    CHECK(lawson_profile(p, 0.0) == doctest::Approx(p.lawson_height()));
    // The profile reaches the axis at the root; the slope is vertical there.
    CHECK(lawson_profile(p, p.lawson_root()) == doctest::Approx(0.0).scale(1.0));
    const double r = p.lawson_root();
    for (int i = 1; i <= 12; ++i) {
      const double t = 0.97 * r * i / 12.0;
      const double f = lawson_profile(p, t);
      const double fp = lawson_profile_slope(p, t);
      const double fpp = lawson_second_deriv(p, t);
      const double scale = 1.0 + std::abs(fpp);
      CHECK(std::abs(capillary_residual(p, t, f, fp, fpp)) <= 1e-9 * scale);
      CHECK(std::abs(psi_eval(p, t, f, fp)) <= 1e-12);
    }
    CHECK_THROWS_AS(lawson_profile(p, r * 1.01), error);
    CHECK_THROWS_AS(lawson_profile_slope(p, r * 1.01), error);
  }
}

TEST_CASE("axis values of the invariant and the curvature-like combination") {
  const ConePair p71 = ConePair::create(7, 1);
  CHECK(psi_at_zero(p71, 1.0) == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(psi_at_zero(p71, p71.lawson_height()) == doctest::Approx(0.0).scale(1.0));
  // h(0) is the axis limit of f - A f'.
  const ConePair p72 = ConePair::create(7, 2);
  const ShootRequest req{p72, 1.0, 0.9};
  const auto traj = integrate_profile(req);
  const double t = 1e-3;
  const double lim = traj.eval(t) - p72.A(t) * traj.eval_slope(t);
  CHECK(h_at_zero(req) == doctest::Approx(0.36));
  CHECK(lim == doctest::Approx(h_at_zero(req)).epsilon(1e-4));
  CHECK_THROWS_AS(psi_eval(p72, 0.0, 1.0, 0.0), error);
}

TEST_CASE("sign of the invariant classifies the trajectory") {
  const ConePair p = ConePair::create(7, 2);
  const double astar = p.lawson_height();
  for (double fac : {0.8, 1.2}) {
    const double a = fac * astar;
    const auto traj = integrate_profile({p, 1.0, a});
    const double expected_sign = fac < 1.0 ? -1.0 : 1.0;
    CHECK(psi_at_zero(p, a) * expected_sign > 0.0);
    for (size_t i = 1; i < traj.samples.size(); i += 7) {
      const auto& s = traj.samples[i];
      CHECK(psi_eval(p, s.t, s.f, s.fp) * expected_sign > 0.0);
    }
  }
}

TEST_CASE("height classification around the exact cone") {
  const ConePair p = ConePair::create(7, 1);
  const double astar = p.lawson_height();
  CHECK(classify_by_height(p, 0.95 * astar) == HeightClass::ReachesZero);
  CHECK(classify_by_height(p, 1.05 * astar) == HeightClass::BlowsUpPositive);
  CHECK(classify_by_height(p, astar) == HeightClass::Lawson);
  CHECK(classify_by_height(p, astar * (1.0 + 5e-10)) == HeightClass::Lawson);
  CHECK_THROWS_AS(classify_by_height(p, 0.0), error);
}

TEST_CASE("height scaling transfers to the nonlinearity parameter") {
  // f(t; lambda=1, a) = a f(t; lambda=a^2, 1), an exact symmetry of the
  // rescaled equation.
  const ConePair p = ConePair::create(7, 2);
  const double a = 0.7;
  const auto t1 = integrate_profile({p, 1.0, a});
  const auto t2 = integrate_profile({p, a * a, 1.0});
  CHECK(t1.terminal.t == doctest::Approx(t2.terminal.t).epsilon(1e-9));
  const double top = 0.995 * std::min(t1.t_end(), t2.t_end());
  for (int i = 1; i <= 40; ++i) {
    const double t = 2e-4 + (top - 2e-4) * i / 40.0;
    CHECK(t1.eval(t) == doctest::Approx(a * t2.eval(t)).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("switching off the nonlinearity reproduces the linear profile") {
  const ConePair p = ConePair::create(7, 1);
  const auto f0 = ProfileFamily::linear(p);
  const double a = 0.3;
  const auto traj = integrate_profile({p, 0.0, a});
  CHECK(traj.terminal.kind == TerminalKind::ZeroCrossing);
  CHECK(traj.terminal.t == doctest::Approx(f0.zero()).epsilon(1e-8));
  for (int i = 1; i <= 30; ++i) {
    const double t = 2e-4 + (0.99 * traj.t_end() - 2e-4) * i / 30.0;
    CHECK(traj.eval(t) == doctest::Approx(a * f0.eval(t)).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("square-root steepening at a blow-up time") {
  const ConePair p = ConePair::create(7, 1);
  const auto traj = integrate_profile({p, 1.0, 1.1 * p.lawson_height()});
  REQUIRE(traj.terminal.kind == TerminalKind::Blowup);
  CHECK(traj.terminal.value > 0.0);
  const double b = traj.terminal.t;
  // log|f'| against log(b - t) should be linear with slope -1/2.
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  int m = 0;
  for (const Sample& s : traj.samples) {
    const double gap = b - s.t;
    if (gap < 1e-10 || gap > 1e-4 || std::abs(s.fp) < 1.0) continue;
    const double x = std::log(gap), y = std::log(std::abs(s.fp));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
    ++m;
  }
  REQUIRE(m >= 20);
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double r2 = (m * sxy - sx * sy) * (m * sxy - sx * sy) /
                    ((m * sxx - sx * sx) * (m * syy - sy * sy));
  CHECK(slope == doctest::Approx(-0.5).epsilon(0.05));
  CHECK(r2 >= 0.999);
}

TEST_CASE("continuing past the root keeps the crossing data") {
  const ConePair p = ConePair::create(7, 1);
  const auto traj = integrate_profile({p, 1.0, 0.3}, {false});
  REQUIRE(traj.zero_crossing.has_value());
  CHECK(traj.zero_crossing->fp < 0.0);
  CHECK(std::abs(traj.zero_crossing->f) <= 1e-10);
  CHECK(traj.terminal.kind == TerminalKind::Blowup);
  CHECK(traj.terminal.value < 0.0);  // overshoots below zero before steepening
  CHECK(traj.terminal.t > traj.zero_crossing->t);
}

TEST_CASE("trajectory bookkeeping") {
  const ConePair p = ConePair::create(7, 2);
  const auto traj = integrate_profile({p, 1.0, 0.5 * p.lawson_height()});
  REQUIRE(traj.terminal.kind == TerminalKind::ZeroCrossing);
  CHECK(traj.terminal.t == traj.samples.back().t);
  CHECK(std::abs(traj.eval(traj.terminal.t)) <= 1e-10);
  CHECK(traj.terminal.value < 0.0);
  for (size_t i = 1; i < traj.samples.size(); ++i)
    CHECK(traj.samples[i].t > traj.samples[i - 1].t);
  // Interpolated slope is consistent with the interpolated value.
  const double t = 0.5 * traj.t_end();
  const double h2 = 1e-5;
  const double fd = (traj.eval(t + h2) - traj.eval(t - h2)) / (2.0 * h2);
  CHECK(traj.eval_slope(t) == doctest::Approx(fd).epsilon(1e-6));
  CHECK_THROWS_AS(traj.eval(traj.t_end() * 1.5), error);
  // The axis sample is part of the trajectory.
  CHECK(traj.samples.front().t == 0.0);
  CHECK(traj.eval(0.0) == 0.5 * p.lawson_height());
  CHECK(traj.eval_slope(0.0) == 0.0);
}

TEST_CASE("request validation") {
  const ConePair p = ConePair::create(7, 1);
  CHECK_THROWS_AS(integrate_profile({p, 1.0, 0.0}), error);
  CHECK_THROWS_AS(integrate_profile({p, -1.0, 0.5}), error);
  CHECK_THROWS_AS(ode_rhs({p, 1.0, 0.5}, 0.0, 0.5, 0.0), error);
  CHECK_THROWS_AS(ode_rhs({p, 1.0, 0.5}, 1.0, 0.5, 0.0), error);
}

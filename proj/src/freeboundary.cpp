#include "freeboundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"
#include "extrema.hpp"

namespace capcone {

IndicialData indicial_roots(int n) {
  if (n < 3) fail(errc::invalid_input, "indicial_roots: need n >= 3");
  IndicialData data;
  data.n = n;
  const double disc = static_cast<double>(n) * n - 8.0 * n + 8.0;
  if (disc < 0) {
    data.real_roots = false;
    data.gamma_low = std::numeric_limits<double>::quiet_NaN();
    data.gamma_high = std::numeric_limits<double>::quiet_NaN();
    return data;
  }
  const double sq = std::sqrt(disc);
  data.real_roots = true;
  data.gamma_low = ((n - 2) - sq) / 2.0;
  data.gamma_high = ((n - 2) + sq) / 2.0;
  return data;
}

double indicial_residual(int n, double gamma, double R) {
  if (n < 3 || !(R > 0)) fail(errc::invalid_input, "indicial_residual: need n >= 3, R > 0");
  const double u = std::pow(R, -gamma);
  const double up = -gamma * std::pow(R, -gamma - 1);
  const double upp = gamma * (gamma + 1) * std::pow(R, -gamma - 2);
  return R * R * upp + (n - 1) * R * up + (n - 1) * u;
}

std::pair<double, double> model_exponent_interval(int n) {
  if (n == 7) return {-29.0 / 10.0, -21.0 / 10.0};
  if (n >= 8) return {-22.0 / 5.0, -8.0 / 5.0};
  fail(errc::invalid_input, "model_exponent_interval: no real window for n <= 6");
}

bool model_interval_contained(const IndicialData& data) {
  if (!data.real_roots) return false;
  const auto [lo, hi] = model_exponent_interval(data.n);
  return data.interval_lo() <= lo && hi <= data.interval_hi();
}

NearHalfPiData near_half_pi_relations(ConePair pair, double eps) {
  const double astar = pair.lawson_height();
  if (!(eps > 0) || eps > 0.05 * astar)
    fail(errc::invalid_input, "near_half_pi_relations: need 0 < eps <= 0.05 * lawson height");
  const ConeSolution sol = solve_near_half_pi(pair, eps);
  const ConeSolution sol2 = solve_near_half_pi(pair, 2 * eps);

  const int n = pair.n, k = pair.k;
  NearHalfPiData out;
  out.pair = pair;
  out.eps = eps;
  out.theta = sol.theta;
  out.t_eps = sol.t_a;
  out.t_hat_eps = sol.t_hat.value();
  out.aperture = out.t_eps / std::sqrt(1.0 - out.t_eps * out.t_eps);
  out.tan_defect = std::abs(eps * std::tan(sol.theta) - astar);
  const double half_pi = std::acos(-1.0) / 2.0;
  out.theta_defect =
      std::abs(sol.theta - (half_pi - std::sqrt((n - k - 1) / static_cast<double>(k)) * eps));
  const double gap_model = (n - k - 1) * eps * eps / (2.0 * std::sqrt(static_cast<double>(k) * (n - 1)));
  out.gap_defect = std::abs((out.t_hat_eps - out.t_eps) - gap_model);
  const double c_est = (sol2.t_a - sol.t_a) / eps;
  out.kappa_estimate = (static_cast<double>(n - 1) / (n - k - 1)) *
                       std::sqrt(static_cast<double>(n - 1) / k) * c_est;
  return out;
}

namespace {

struct Partials {
  double F = 0;
  double Fr = 0;
  double Fr_over_r = 0;
  double Fm = 0;
  double Frr = 0;
  double Frm = 0;
  double Fmm = 0;
};

// F(r, m) with m standing for s^2 + z_sh^2.  Fr_over_r is supplied in
// closed form so the cylindrical Laplacian term stays regular where the
// quotient is.
Partials partials(CapCase c, CapSide side, double b, double r, double m) {
  Partials p;
  const double r2 = r * r;
  switch (c) {
    case CapCase::I:
      if (side == CapSide::Plus) {
        const double mp34 = std::pow(m, 0.75);
        const double mm14 = std::pow(m, -0.25);
        const double mm54 = std::pow(m, -1.25);
        p.F = (m - b * r2) * mp34;
        p.Fm = 1.75 * mp34 - 0.75 * b * r2 * mm14;
        p.Fr = -2.0 * b * r * mp34;
        p.Fr_over_r = -2.0 * b * mp34;
        p.Frr = -2.0 * b * mp34;
        p.Frm = -1.5 * b * r * mm14;
        p.Fmm = (21.0 / 16.0) * mm14 + (3.0 / 16.0) * b * r2 * mm54;
      } else {
        const double r12 = std::sqrt(r);
        const double r32 = r * r12;
        const double r52 = r2 * r12;
        p.F = m * r32 - b * r52 * r;  // m r^{3/2} - b r^{7/2}
        p.Fm = r32;
        p.Fr = 1.5 * m * r12 - 3.5 * b * r52;
        p.Fr_over_r = 1.5 * m / r12 - 3.5 * b * r32;
        p.Frr = 0.75 * m / r12 - 8.75 * b * r32;
        p.Frm = 1.5 * r12;
        p.Fmm = 0;
      }
      break;
    case CapCase::II: {
      const double r32 = std::pow(r, 1.5);
      p.F = std::pow(m, 1.75) - std::pow(r, 3.5);
      p.Fm = 1.75 * std::pow(m, 0.75);
      p.Fr = -3.5 * r * r32;
      p.Fr_over_r = -3.5 * r32;
      p.Frr = -8.75 * r32;
      p.Frm = 0;
      p.Fmm = (21.0 / 16.0) * std::pow(m, -0.25);
      break;
    }
    case CapCase::III:
      if (side == CapSide::Plus) {
        p.F = (m - b * r2) * m;
        p.Fm = 2.0 * m - b * r2;
        p.Fr = -2.0 * b * r * m;
        p.Fr_over_r = -2.0 * b * m;
        p.Frr = -2.0 * b * m;
        p.Frm = -2.0 * b * r;
        p.Fmm = 2.0;
      } else {
        const double r3 = r2 * r;
        p.F = m * r3 - b * r3 * r2;
        p.Fm = r3;
        p.Fr = 3.0 * m * r2 - 5.0 * b * r2 * r2;
        p.Fr_over_r = 3.0 * m * r - 5.0 * b * r3;
        p.Frr = 6.0 * m * r - 20.0 * b * r3;
        p.Frm = 3.0 * r2;
        p.Fmm = 0;
      }
      break;
    case CapCase::IV:
      p.F = m * m - b * b * r2 * r2;
      p.Fm = 2.0 * m;
      p.Fr = -4.0 * b * b * r * r2;
      p.Fr_over_r = -4.0 * b * b * r2;
      p.Frr = -12.0 * b * b * r2;
      p.Frm = 0;
      p.Fmm = 2.0;
      break;
  }
  return p;
}

bool fractional_powers(CapCase c) { return c == CapCase::I || c == CapCase::II; }

struct EvalPoint {
  double z_sh = 0;
  double m = 0;
};

EvalPoint shifted_point(const CapPotential& pot, double r, double s, double z) {
  if (!(r >= 0) || !(s >= 0) || !std::isfinite(z))
    fail(errc::invalid_input, "cap potential: need r >= 0, s >= 0 finite");
  EvalPoint pt;
  pt.z_sh = pot.side() == CapSide::Plus ? z + pot.shift() : z - pot.shift();
  pt.m = s * s + pt.z_sh * pt.z_sh;
  // Cases I and III only define the declared side; the others share one
  // formula across the cone.
  if (pot.cap_case() == CapCase::I || pot.cap_case() == CapCase::III) {
    const double scale = r * r + pt.m;
    const double excess = pt.m - pot.cone_slope_sq() * r * r;
    if (pot.side() == CapSide::Plus && excess < -1e-9 * scale)
      fail(errc::wrong_side, "cap potential: point lies on the outer side");
    if (pot.side() == CapSide::Minus && excess > 1e-9 * scale)
      fail(errc::wrong_side, "cap potential: point lies on the inner side");
  }
  return pt;
}

}  // namespace

CapPotential CapPotential::create(ConePair pair, CapSide side, double shift) {
  if (pair.n < 7)
    fail(errc::invalid_input, "cap potential: defined for n >= 7 only");
  if (!(shift >= 0)) fail(errc::invalid_input, "cap potential: shift must be >= 0");
  if (side == CapSide::Plus && pair.n == 7 && pair.k == 5)
    fail(errc::invalid_input, "cap potential: (7,5) has no outer-side potential");
  if (side == CapSide::Minus && pair.n == 7 && pair.k == 1)
    fail(errc::invalid_input, "cap potential: (7,1) has no inner-side potential");

  CapPotential pot;
  pot.pair_ = pair;
  pot.side_ = side;
  pot.shift_ = shift;
  if (pair.n == 7) {
    pot.case_ = pair.k == 3 ? CapCase::II : CapCase::I;
    pot.degree_ = 3.5;
  } else if (pair.n <= 12 && pair.k == 1) {
    pot.case_ = CapCase::III;
    pot.degree_ = side == CapSide::Plus ? 4.0 : 5.0;
  } else {
    pot.case_ = CapCase::IV;
    pot.degree_ = 4.0;
  }
  pot.b_ = pot.case_ == CapCase::III
               ? 1.0 / (pair.n - 2)
               : static_cast<double>(pair.k) / (pair.n - pair.k - 1);
  return pot;
}

double CapPotential::normalization_constant() const {
  const double R = std::sqrt(1.0 + b_);
  const Partials cone_pt = partials(case_, side_, b_, 1.0, b_);
  const double grad =
      std::sqrt(cone_pt.Fr * cone_pt.Fr + 4.0 * b_ * cone_pt.Fm * cone_pt.Fm);
  const double c = std::pow(R, degree_ - 1.0) / grad;
  if (side_ == CapSide::Plus) return c;
  const double axis_value = partials(case_, side_, b_, 1.0, 0.0).F;
  return -axis_value * c;
}

double CapPotential::reference_constant() const {
  const int n = pair_.n;
  const double a = std::sqrt(static_cast<double>(pair_.k) / (n - pair_.k - 1));
  const double a2 = a * a;
  if (side_ == CapSide::Plus) {
    switch (case_) {
      case CapCase::I:
        return std::pow(1.0 + a2, 0.75) / (2.0 * std::pow(a, 2.5));
      case CapCase::II:
        return std::pow(2.0, 1.75) / 7.0;
      case CapCase::III:
        return (n - 1) * std::sqrt(static_cast<double>(n - 2)) / 2.0;
      case CapCase::IV:
        return (1.0 + a2) / (4.0 * a2 * a);
    }
  } else {
    switch (case_) {
      case CapCase::I:
        return a * std::pow(1.0 + a2, 0.75) / 2.0;
      case CapCase::II:
        return std::pow(2.0, 1.75) / 7.0;
      case CapCase::III:
        return std::pow(static_cast<double>(n - 1), 1.5) / (2.0 * (n - 2.0) * (n - 2.0));
      case CapCase::IV:
        return a * (1.0 + a2) * (1.0 + a2) / 4.0;
    }
  }
  fail(errc::invalid_input, "cap potential: unknown case");
}

bool CapPotential::matches_reference(double tol) const {
  const double ref = reference_constant();
  return std::abs(normalization_constant() - ref) <= tol * std::max(1.0, std::abs(ref));
}

CapJet cap_eval(const CapPotential& pot, double r, double s, double z) {
  const EvalPoint pt = shifted_point(pot, r, s, z);
  CapJet jet;
  if (r == 0 && pt.m == 0) return jet;  // degree > 1, so the jet vanishes
  const Partials p = partials(pot.cap_case(), pot.side(), pot.cone_slope_sq(), r, pt.m);
  jet.value = p.F;
  jet.grad_r = p.Fr;
  jet.grad_s = 2.0 * s * p.Fm;
  jet.grad_z = 2.0 * pt.z_sh * p.Fm;
  return jet;
}

double cap_divergence(const CapPotential& pot, double r, double s, double z) {
  const EvalPoint pt = shifted_point(pot, r, s, z);
  if (fractional_powers(pot.cap_case()) && (!(pt.m > 0) || !(r > 0)))
    fail(errc::out_of_domain, "cap divergence: fractional-power case needs r > 0 and s^2 + z^2 > 0");
  const int n = pot.pair().n, k = pot.pair().k;
  const Partials p = partials(pot.cap_case(), pot.side(), pot.cone_slope_sq(), r, pt.m);
  const double m = pt.m;
  const double g2 = p.Fr * p.Fr + 4.0 * m * p.Fm * p.Fm;
  if (!(g2 > 1e-280)) fail(errc::numerical_failure, "cap divergence: vanishing gradient");
  const double lap = p.Frr + (n - k - 1) * p.Fr_over_r + 2.0 * (k + 1) * p.Fm + 4.0 * m * p.Fmm;
  const double d2 = p.Frr * p.Fr * p.Fr + 8.0 * m * p.Frm * p.Fr * p.Fm +
                    8.0 * m * p.Fm * p.Fm * p.Fm + 16.0 * m * m * p.Fmm * p.Fm * p.Fm;
  return (g2 * lap - d2) / (g2 * std::sqrt(g2));
}

double cap_scaled_divergence(const CapPotential& pot, double r, double s, double z) {
  const double v = cap_eval(pot, r, s, z).value;
  if (v == 0) fail(errc::out_of_domain, "cap scaled divergence: point lies on the zero level set");
  const double R = std::sqrt(r * r + s * s + z * z);
  return std::pow(R, 1.0 + pot.degree()) * cap_divergence(pot, r, s, z) / v;
}

double cap_level(const CapPotential& pot) {
  return pot.side() == CapSide::Plus ? cap_eval(pot, 0.0, 1.0, 0.0).value
                                     : cap_eval(pot, 1.0, 0.0, 0.0).value;
}

CapDivergenceReport cap_divergence_check(const CapPotential& pot) {
  const double psi_cone = std::atan(std::sqrt(pot.cone_slope_sq()));
  const double half_pi = std::acos(-1.0) / 2.0;
  CapDivergenceReport rep;
  rep.side_signed_ok = true;
  rep.min_scaled = std::numeric_limits<double>::infinity();
  const int nR = 10, nPsi = 20, nChi = 5;
  for (int i = 0; i < nR; ++i) {
    const double R = std::pow(10.0, i / static_cast<double>(nR - 1));
    for (int j = 1; j <= nPsi; ++j) {
      const double frac = j / static_cast<double>(nPsi + 1);
      const double psi = pot.side() == CapSide::Plus
                             ? psi_cone + frac * (half_pi - psi_cone)
                             : frac * psi_cone;
      const double r = R * std::cos(psi);
      const double rho = R * std::sin(psi);  // sqrt(s^2 + z^2)
      for (int l = 0; l < nChi; ++l) {
        const double chi = l * half_pi / nChi;
        const double s = rho * std::cos(chi);
        const double z = rho * std::sin(chi);
        const double div = cap_divergence(pot, r, s, z);
        if (pot.side() == CapSide::Plus ? !(div > 0) : !(div < 0)) rep.side_signed_ok = false;
        const double scaled = cap_scaled_divergence(pot, r, s, z);
        if (scaled < rep.min_scaled) {
          rep.min_scaled = scaled;
          rep.argmin[0] = r;
          rep.argmin[1] = s;
          rep.argmin[2] = z;
        }
        ++rep.points;
      }
    }
  }
  return rep;
}

CubicMin lawlor_cubic_min() {
  const double sq5 = std::sqrt(5.0);
  const auto cubic = [sq5](double t) { return t * t * t - 3.0 * sq5 * t * t - 15.0 * t + 25.0; };
  Extremum interior = minimize_on(0.0, 1.0, cubic);
  CubicMin out{interior.x, interior.value};
  // A monotone cubic bottoms out at an endpoint; report that exactly
  // instead of the golden-section approximant next to it.
  for (double t : {0.0, 1.0}) {
    const double v = cubic(t);
    if (v < out.value) {
      out.argmin = t;
      out.value = v;
    }
  }
  return out;
}

}  // namespace capcone

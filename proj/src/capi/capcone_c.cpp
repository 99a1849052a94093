#include "capcone/capcone.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <string>
#include <vector>

#include "barriers.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "freeboundary.hpp"
#include "hyp2f1.hpp"
#include "profile_ode.hpp"
#include "reference_tables.hpp"
#include "shooting.hpp"

namespace {

thread_local std::string g_last_error;

capcone_status map_code(capcone::errc code) {
  using capcone::errc;
  switch (code) {
    case errc::ok: return CAPCONE_OK;
    case errc::invalid_input: return CAPCONE_INVALID_INPUT;
    case errc::non_convergence: return CAPCONE_NON_CONVERGENCE;
    case errc::numerical_failure: return CAPCONE_NUMERICAL_FAILURE;
    case errc::no_zero: return CAPCONE_NO_ZERO;
    case errc::not_reaching_zero: return CAPCONE_NOT_REACHING_ZERO;
    case errc::out_of_domain: return CAPCONE_OUT_OF_DOMAIN;
    case errc::ambiguous_near_lawson: return CAPCONE_AMBIGUOUS_NEAR_LAWSON;
    case errc::condition_failed: return CAPCONE_CONDITION_FAILED;
    case errc::no_tau: return CAPCONE_NO_TAU;
    case errc::wrong_side: return CAPCONE_WRONG_SIDE;
  }
  return CAPCONE_INTERNAL;
}

template <typename Fn>
capcone_status wrap(Fn&& fn) {
  try {
    fn();
    return CAPCONE_OK;
  } catch (const capcone::error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CAPCONE_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return CAPCONE_INTERNAL;
  }
}

capcone_status fail_input(const char* msg) {
  g_last_error = msg;
  return CAPCONE_INVALID_INPUT;
}

capcone::ConePair make_pair_checked(int n, int k) { return capcone::ConePair::create(n, k); }

capcone::ProfileFamily make_family(int n, int k, int kind, double exponent) {
  const auto pair = make_pair_checked(n, k);
  if (kind == CAPCONE_FAMILY_LINEAR) return capcone::ProfileFamily::linear(pair);
  if (kind == CAPCONE_FAMILY_BARRIER) return capcone::ProfileFamily::barrier(pair, exponent);
  capcone::fail(capcone::errc::invalid_input, "unknown family kind");
}

capcone::CapSide make_side(int side) {
  if (side == CAPCONE_SIDE_PLUS) return capcone::CapSide::Plus;
  if (side == CAPCONE_SIDE_MINUS) return capcone::CapSide::Minus;
  capcone::fail(capcone::errc::invalid_input, "unknown cap side");
}

double quiet_nan() { return std::numeric_limits<double>::quiet_NaN(); }

}  // namespace

struct capcone_solution {
  capcone::ConeSolution impl;
};

struct capcone_sweep {
  bool heights_mode = true;
  capcone::FamilySweepResult impl;
};

extern "C" {

const char* capcone_last_error(void) { return g_last_error.c_str(); }

const char* capcone_version(void) { return "1.0.0"; }

capcone_status capcone_hyp2f1(double a, double b, double c, double x, int order,
                              double* out) {
  if (!out) return fail_input("out must not be null");
  return wrap([&] { *out = capcone::gauss_2f1_deriv(a, b, c, x, order); });
}

capcone_status capcone_family_eval(int n, int k, int kind, double exponent, double t,
                                   int order, double* out) {
  if (!out) return fail_input("out must not be null");
  return wrap([&] { *out = make_family(n, k, kind, exponent).eval(t, order); });
}

capcone_status capcone_family_zero(int n, int k, int kind, double exponent,
                                   double* t_zero) {
  if (!t_zero) return fail_input("t_zero must not be null");
  return wrap([&] { *t_zero = make_family(n, k, kind, exponent).zero(); });
}

capcone_status capcone_solve_cone(int n, int k, double theta, capcone_solution** out) {
  if (!out) return fail_input("out must not be null");
  *out = nullptr;
  return wrap([&] {
    auto sol = capcone::solve_cone(make_pair_checked(n, k), theta);
    *out = new capcone_solution{std::move(sol)};
  });
}

capcone_status capcone_solve_near_half_pi(int n, int k, double eps,
                                          capcone_solution** out) {
  if (!out) return fail_input("out must not be null");
  *out = nullptr;
  return wrap([&] {
    auto sol = capcone::solve_near_half_pi(make_pair_checked(n, k), eps);
    *out = new capcone_solution{std::move(sol)};
  });
}

capcone_status capcone_solution_info_get(const capcone_solution* sol,
                                         capcone_solution_info* out) {
  if (!sol || !out) return fail_input("sol and out must not be null");
  const auto& s = sol->impl;
  out->n = s.pair.n;
  out->k = s.pair.k;
  out->a = s.a;
  out->theta = s.theta;
  out->t_a = s.t_a;
  out->t_hat = s.t_hat ? *s.t_hat : quiet_nan();
  out->eps = s.eps ? *s.eps : quiet_nan();
  out->terminal_kind = static_cast<int>(s.trajectory.terminal.kind);
  out->terminal_t = s.trajectory.terminal.t;
  out->terminal_value = s.trajectory.terminal.value;
  out->n_samples = s.trajectory.samples.size();
  return CAPCONE_OK;
}

capcone_status capcone_solution_sample(const capcone_solution* sol, size_t i, double* t,
                                       double* f, double* fp) {
  if (!sol || !t || !f || !fp) return fail_input("sol and outputs must not be null");
  if (i >= sol->impl.trajectory.samples.size()) return fail_input("sample index out of range");
  const auto& smp = sol->impl.trajectory.samples[i];
  *t = smp.t;
  *f = smp.f;
  *fp = smp.fp;
  return CAPCONE_OK;
}

capcone_status capcone_solution_eval(const capcone_solution* sol, double t, double* f,
                                     double* fp) {
  if (!sol || !f || !fp) return fail_input("sol and outputs must not be null");
  return wrap([&] {
    *f = sol->impl.trajectory.eval(t);
    *fp = sol->impl.trajectory.eval_slope(t);
  });
}

void capcone_solution_free(capcone_solution* sol) { delete sol; }

capcone_status capcone_lawson_height(int n, int k, double* a) {
  if (!a) return fail_input("a must not be null");
  return wrap([&] { *a = make_pair_checked(n, k).lawson_height(); });
}

capcone_status capcone_terminal_angle(int n, int k, double a, double* theta) {
  if (!theta) return fail_input("theta must not be null");
  return wrap([&] { *theta = capcone::terminal_angle(make_pair_checked(n, k), a); });
}

capcone_status capcone_classify_height(int n, int k, double a, int* cls) {
  if (!cls) return fail_input("cls must not be null");
  return wrap([&] {
    *cls = static_cast<int>(capcone::classify_by_height(make_pair_checked(n, k), a));
  });
}

capcone_status capcone_small_theta(int n, int k, double theta, double* sup_deviation,
                                   double* root_gap) {
  if (!sup_deviation || !root_gap) return fail_input("outputs must not be null");
  return wrap([&] {
    const auto dev = capcone::small_theta_deviation(make_pair_checked(n, k), theta);
    *sup_deviation = dev.sup_deviation;
    *root_gap = dev.root_gap;
  });
}

capcone_status capcone_variation_defect(int n, int k, double lambda, double a,
                                        double* defect) {
  if (!defect) return fail_input("defect must not be null");
  return wrap([&] {
    *defect = capcone::variation_identity(make_pair_checked(n, k), lambda, a).defect;
  });
}

capcone_status capcone_sweep_heights(int n, int k, const double* heights, size_t count,
                                     capcone_sweep** out) {
  if (!out || (!heights && count)) return fail_input("heights and out must not be null");
  *out = nullptr;
  return wrap([&] {
    std::vector<double> h(heights, heights + count);
    auto sweep = capcone::family_sweep_heights(make_pair_checked(n, k), std::move(h));
    *out = new capcone_sweep{true, std::move(sweep)};
  });
}

capcone_status capcone_sweep_lambda(int n, int k, double a, const double* lambdas,
                                    size_t count, capcone_sweep** out) {
  if (!out || (!lambdas && count)) return fail_input("lambdas and out must not be null");
  *out = nullptr;
  return wrap([&] {
    std::vector<double> l(lambdas, lambdas + count);
    auto sweep = capcone::family_sweep_lambda(make_pair_checked(n, k), a, std::move(l));
    *out = new capcone_sweep{false, std::move(sweep)};
  });
}

capcone_status capcone_sweep_size(const capcone_sweep* sweep, size_t* count) {
  if (!sweep || !count) return fail_input("sweep and count must not be null");
  *count = sweep->impl.members.size();
  return CAPCONE_OK;
}

capcone_status capcone_sweep_member(const capcone_sweep* sweep, size_t i, double* parameter,
                                    int* lawson, int* terminal_kind, size_t* n_samples) {
  if (!sweep || !parameter || !lawson || !terminal_kind || !n_samples)
    return fail_input("sweep and outputs must not be null");
  if (i >= sweep->impl.members.size()) return fail_input("member index out of range");
  const auto& m = sweep->impl.members[i];
  *parameter = m.parameter;
  *lawson = m.lawson ? 1 : 0;
  *terminal_kind = static_cast<int>(m.trajectory.terminal.kind);
  *n_samples = m.trajectory.samples.size();
  return CAPCONE_OK;
}

capcone_status capcone_sweep_sample(const capcone_sweep* sweep, size_t i, size_t j,
                                    double* t, double* f, double* fp) {
  if (!sweep || !t || !f || !fp) return fail_input("sweep and outputs must not be null");
  if (i >= sweep->impl.members.size()) return fail_input("member index out of range");
  const auto& samples = sweep->impl.members[i].trajectory.samples;
  if (j >= samples.size()) return fail_input("sample index out of range");
  *t = samples[j].t;
  *f = samples[j].f;
  *fp = samples[j].fp;
  return CAPCONE_OK;
}

capcone_status capcone_sweep_crossings(const capcone_sweep* sweep, size_t i, size_t j,
                                       int* count) {
  if (!sweep || !count) return fail_input("sweep and count must not be null");
  if (!sweep->heights_mode) return fail_input("crossings are defined for height sweeps");
  if (i >= sweep->impl.members.size() || j >= sweep->impl.members.size())
    return fail_input("member index out of range");
  *count = sweep->impl.crossings[i][j];
  return CAPCONE_OK;
}

capcone_status capcone_sweep_ordering(const capcone_sweep* sweep, int* ordered,
                                      double* min_gap) {
  if (!sweep || !ordered || !min_gap) return fail_input("sweep and outputs must not be null");
  if (sweep->heights_mode) return fail_input("ordering is defined for scaling sweeps");
  *ordered = sweep->impl.ordered ? 1 : 0;
  *min_gap = sweep->impl.min_gap;
  return CAPCONE_OK;
}

void capcone_sweep_free(capcone_sweep* sweep) { delete sweep; }

capcone_status capcone_reference_alpha(int n, int k, double* alpha) {
  if (!alpha) return fail_input("alpha must not be null");
  return wrap([&] { *alpha = capcone::reference_alpha(make_pair_checked(n, k)); });
}

capcone_status capcone_check_subsolution(int n, int k, double alpha,
                                         capcone_sub_report* out) {
  if (!out) return fail_input("out must not be null");
  return wrap([&] {
    const auto sub = capcone::check_subsolution(make_pair_checked(n, k), alpha);
    out->alpha = sub.alpha;
    out->margin = sub.margin;
    out->min_t = sub.min_t;
    out->min_value = sub.min_value;
    out->endpoint_min = sub.endpoint_min ? 1 : 0;
    out->strictly_decreasing = sub.strictly_decreasing ? 1 : 0;
  });
}

namespace {

void fill_super_report(const capcone::VerificationReport& rep, capcone_super_report* out) {
  out->beta = rep.params.beta;
  out->t0 = rep.params.t0;
  out->tau = rep.params.tau;
  out->rbar = rep.params.rbar;
  out->a_slope = rep.params.A;
  out->lambda_coef = rep.params.lambda_coef;
  out->rbar_minus_a = rep.rbar_minus_A;
  out->max_qhat = rep.max_qhat;
  out->max_k0 = rep.max_k0;
  out->max_k1 = rep.max_k1;
  out->min_p = rep.min_script_p;
  out->w_prime_tau = rep.w_prime_tau;
  out->s1_ok = rep.s1_ok ? 1 : 0;
  out->s2_ok = rep.s2_ok ? 1 : 0;
  out->s3_ok = rep.s3_ok ? 1 : 0;
}

}  // namespace

capcone_status capcone_verify_supersolution(int n, int k, double beta,
                                            capcone_super_report* out) {
  if (!out) return fail_input("out must not be null");
  return wrap([&] {
    const auto rep = capcone::verify_supersolution(make_pair_checked(n, k), beta);
    fill_super_report(rep, out);
  });
}

capcone_status capcone_scan_beta(int n, int k, double lo, double hi, int count,
                                 double* betas, int* valid, double* run_lo, double* run_hi,
                                 size_t max_runs, size_t* n_runs) {
  if (!betas || !valid || !n_runs || (!run_lo && max_runs) || (!run_hi && max_runs))
    return fail_input("outputs must not be null");
  return wrap([&] {
    const auto scan = capcone::scan_beta(make_pair_checked(n, k), lo, hi, count);
    std::copy(scan.betas.begin(), scan.betas.end(), betas);
    for (size_t i = 0; i < scan.valid.size(); ++i) valid[i] = scan.valid[i] ? 1 : 0;
    *n_runs = scan.runs.size();
    const size_t emit = std::min(max_runs, scan.runs.size());
    for (size_t i = 0; i < emit; ++i) {
      run_lo[i] = scan.runs[i].first;
      run_hi[i] = scan.runs[i].second;
    }
  });
}

capcone_status capcone_indicial(int n, capcone_indicial_report* out) {
  if (!out) return fail_input("out must not be null");
  return wrap([&] {
    const auto data = capcone::indicial_roots(n);
    out->n = data.n;
    out->real_roots = data.real_roots ? 1 : 0;
    out->gamma_low = data.gamma_low;
    out->gamma_high = data.gamma_high;
    if (n >= 7) {
      const auto [lo, hi] = capcone::model_exponent_interval(n);
      out->window_lo = lo;
      out->window_hi = hi;
      out->contained = capcone::model_interval_contained(data) ? 1 : 0;
    } else {
      out->window_lo = quiet_nan();
      out->window_hi = quiet_nan();
      out->contained = 0;
    }
  });
}

capcone_status capcone_near_half_pi(int n, int k, double eps, capcone_nhp_report* out) {
  if (!out) return fail_input("out must not be null");
  return wrap([&] {
    const auto data = capcone::near_half_pi_relations(make_pair_checked(n, k), eps);
    out->eps = data.eps;
    out->theta = data.theta;
    out->t_eps = data.t_eps;
    out->t_hat_eps = data.t_hat_eps;
    out->aperture = data.aperture;
    out->tan_defect = data.tan_defect;
    out->theta_defect = data.theta_defect;
    out->gap_defect = data.gap_defect;
    out->kappa_estimate = data.kappa_estimate;
  });
}

capcone_status capcone_cap_check(int n, int k, int side, double shift,
                                 capcone_cap_report* out) {
  if (!out) return fail_input("out must not be null");
  return wrap([&] {
    const auto pot =
        capcone::CapPotential::create(make_pair_checked(n, k), make_side(side), shift);
    out->cap_case = static_cast<int>(pot.cap_case());
    out->degree = pot.degree();
    out->cone_slope_sq = pot.cone_slope_sq();
    out->shift = pot.shift();
    out->constant = pot.normalization_constant();
    out->reference_constant = pot.reference_constant();
    out->constant_matches = pot.matches_reference() ? 1 : 0;
    out->level = capcone::cap_level(pot);
    const auto check = capcone::cap_divergence_check(pot);
    out->min_scaled_divergence = check.min_scaled;
    out->side_signed_ok = check.side_signed_ok ? 1 : 0;
    out->points = check.points;
  });
}

capcone_status capcone_cap_eval(int n, int k, int side, double shift, double r, double s,
                                double z, double jet[4]) {
  if (!jet) return fail_input("jet must not be null");
  return wrap([&] {
    const auto pot =
        capcone::CapPotential::create(make_pair_checked(n, k), make_side(side), shift);
    const auto j = capcone::cap_eval(pot, r, s, z);
    jet[0] = j.value;
    jet[1] = j.grad_r;
    jet[2] = j.grad_s;
    jet[3] = j.grad_z;
  });
}

capcone_status capcone_cap_divergence(int n, int k, int side, double shift, double r,
                                      double s, double z, double* divergence,
                                      double* scaled) {
  if (!divergence || !scaled) return fail_input("outputs must not be null");
  return wrap([&] {
    const auto pot =
        capcone::CapPotential::create(make_pair_checked(n, k), make_side(side), shift);
    *divergence = capcone::cap_divergence(pot, r, s, z);
    *scaled = capcone::cap_scaled_divergence(pot, r, s, z);
  });
}

capcone_status capcone_lawlor_cubic(double* argmin, double* value) {
  if (!argmin || !value) return fail_input("outputs must not be null");
  return wrap([&] {
    const auto m = capcone::lawlor_cubic_min();
    *argmin = m.argmin;
    *value = m.value;
  });
}

capcone_status capcone_table_count(int table, size_t* count) {
  if (!count) return fail_input("count must not be null");
  switch (table) {
    case CAPCONE_TABLE_APPENDIX: *count = capcone::appendix_rows().size(); return CAPCONE_OK;
    case CAPCONE_TABLE_ALPHA: *count = capcone::alpha_rows().size(); return CAPCONE_OK;
    case CAPCONE_TABLE_QUADRATICS:
      *count = capcone::quadratics_rows().size();
      return CAPCONE_OK;
  }
  return fail_input("unknown table");
}

capcone_status capcone_table_row_get(int table, size_t i, capcone_table_row* out) {
  if (!out) return fail_input("out must not be null");
  std::memset(out, 0, sizeof(*out));
  switch (table) {
    case CAPCONE_TABLE_APPENDIX: {
      const auto rows = capcone::appendix_rows();
      if (i >= rows.size()) return fail_input("row index out of range");
      const auto& r = rows[i];
      out->n = r.n;
      out->k = r.k;
      out->parameter = r.beta;
      out->reference[0] = r.rbar_minus_A;
      out->reference[1] = r.max_qhat;
      out->reference[2] = r.max_k0;
      out->reference[3] = r.max_k1;
      out->reference[4] = r.min_p;
      out->n_reference = 5;
      return CAPCONE_OK;
    }
    case CAPCONE_TABLE_ALPHA: {
      const auto rows = capcone::alpha_rows();
      if (i >= rows.size()) return fail_input("row index out of range");
      const auto& r = rows[i];
      out->n = r.n;
      out->k = r.k;
      out->parameter = r.alpha;
      out->reference[0] = r.margin_floor;
      out->n_reference = 1;
      return CAPCONE_OK;
    }
    case CAPCONE_TABLE_QUADRATICS: {
      const auto rows = capcone::quadratics_rows();
      if (i >= rows.size()) return fail_input("row index out of range");
      const auto& r = rows[i];
      out->n = r.n;
      out->k = r.k;
      out->parameter = r.beta;
      out->n_reference = 0;
      return CAPCONE_OK;
    }
  }
  return fail_input("unknown table");
}

capcone_status capcone_table_verify_row(int table, size_t i, double computed[5],
                                        int* matched) {
  if (!computed || !matched) return fail_input("outputs must not be null");
  std::fill(computed, computed + 5, 0.0);
  *matched = 0;
  return wrap([&] {
    switch (table) {
      case CAPCONE_TABLE_APPENDIX: {
        const auto rows = capcone::appendix_rows();
        if (i >= rows.size()) capcone::fail(capcone::errc::invalid_input, "row index out of range");
        const auto& r = rows[i];
        const auto rep = capcone::verify_supersolution(capcone::ConePair::create(r.n, r.k), r.beta);
        computed[0] = rep.rbar_minus_A;
        computed[1] = rep.max_qhat;
        computed[2] = rep.max_k0;
        computed[3] = rep.max_k1;
        computed[4] = rep.min_script_p;
        const double ref[5] = {r.rbar_minus_A, r.max_qhat, r.max_k0, r.max_k1, r.min_p};
        bool ok = rep.all_ok();
        for (int c = 0; c < 5; ++c)
          ok = ok && capcone::within_table_tolerance(computed[c], ref[c]);
        *matched = ok ? 1 : 0;
        return;
      }
      case CAPCONE_TABLE_ALPHA: {
        const auto rows = capcone::alpha_rows();
        if (i >= rows.size()) capcone::fail(capcone::errc::invalid_input, "row index out of range");
        const auto& r = rows[i];
        const auto sub =
            capcone::check_subsolution(capcone::ConePair::create(r.n, r.k), r.alpha);
        computed[0] = sub.margin;
        computed[1] = sub.min_t;
        computed[2] = sub.min_value;
        *matched = (sub.margin > r.margin_floor && sub.endpoint_min) ? 1 : 0;
        return;
      }
      case CAPCONE_TABLE_QUADRATICS: {
        const auto rows = capcone::quadratics_rows();
        if (i >= rows.size()) capcone::fail(capcone::errc::invalid_input, "row index out of range");
        const auto& r = rows[i];
        const auto rep = capcone::verify_supersolution(capcone::ConePair::create(r.n, r.k), r.beta);
        computed[0] = rep.rbar_minus_A;
        computed[1] = rep.max_qhat;
        computed[2] = rep.max_k0;
        computed[3] = rep.max_k1;
        computed[4] = rep.min_script_p;
        *matched = rep.all_ok() ? 1 : 0;
        return;
      }
    }
    capcone::fail(capcone::errc::invalid_input, "unknown table");
  });
}

} /* extern "C" */

// Command-line front end over the C API: cone solves, family sweeps,
// barrier certificates, reference-table reproduction, and the
// vertical-contact checks.  Emits CSV (17 significant digits, LF) with a
// JSON sidecar, or a single JSON document with --format json.
//
// Exit codes: 0 pass, 1 verification mismatch, 2 invalid input,
// 3 numerical failure.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "capcone/capcone.h"

using nlohmann::ordered_json;

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int exit_code_for(capcone_status st) {
  switch (st) {
    case CAPCONE_OK:
      return 0;
    case CAPCONE_INVALID_INPUT:
    case CAPCONE_WRONG_SIDE:
    case CAPCONE_OUT_OF_DOMAIN:
      return 2;
    case CAPCONE_CONDITION_FAILED:
    case CAPCONE_NO_TAU:
    case CAPCONE_NO_ZERO:
    case CAPCONE_NOT_REACHING_ZERO:
      return 1;
    default:
      return 3;
  }
}

[[noreturn]] void die(capcone_status st) {
  std::cerr << "error: " << capcone_last_error() << "\n";
  std::exit(exit_code_for(st));
}

void check(capcone_status st) {
  if (st != CAPCONE_OK) die(st);
}

void write_text(const std::string& path, const std::string& body) {
  if (path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    std::exit(2);
  }
  os << body;
}

// CSV targets get their JSON summary next to them; with stdout output the
// summary goes to stderr so the CSV stream stays clean.
void write_sidecar(const std::string& main_path, const ordered_json& doc) {
  const std::string body = doc.dump(2) + "\n";
  if (main_path == "-") {
    std::cerr << body;
    return;
  }
  write_text(main_path + ".json", body);
}

const char* terminal_name(int kind) {
  switch (kind) {
    case CAPCONE_TERMINAL_ZERO_CROSSING:
      return "zero_crossing";
    case CAPCONE_TERMINAL_BLOWUP:
      return "blowup";
    case CAPCONE_TERMINAL_LAWSON:
      return "lawson";
  }
  return "unknown";
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// ---- cone solve ----

struct SolveOpts {
  int n = 0, k = 0;
  double theta = kNaN, eps = kNaN;
  bool degrees = false;
  std::string out = "-", format = "csv";
};

int run_solve(const SolveOpts& o) {
  const bool has_theta = std::isfinite(o.theta);
  const bool has_eps = std::isfinite(o.eps);
  if (has_theta == has_eps) {
    std::cerr << "error: give exactly one of --theta or --eps\n";
    return 2;
  }
  double theta = o.theta;
  if (has_theta && o.degrees) theta *= std::acos(-1.0) / 180.0;

  capcone_solution* sol = nullptr;
  check(has_theta ? capcone_solve_cone(o.n, o.k, theta, &sol)
                  : capcone_solve_near_half_pi(o.n, o.k, o.eps, &sol));
  capcone_solution_info info{};
  check(capcone_solution_info_get(sol, &info));

  ordered_json meta;
  meta["n"] = info.n;
  meta["k"] = info.k;
  meta["a"] = info.a;
  meta["t_a"] = info.t_a;
  meta["theta"] = info.theta;
  ordered_json term;
  if (has_eps) {
    // The solve is specified by the continued profile's overshoot: it blows
    // up at t_hat having dipped to exactly -eps.
    term["kind"] = "blowup";
    term["t"] = info.t_hat;
    term["value"] = -info.eps;
  } else {
    term["kind"] = terminal_name(info.terminal_kind);
    term["t"] = info.terminal_t;
    term["value"] = info.terminal_value;
  }
  meta["terminal"] = term;
  if (std::isfinite(info.t_hat)) meta["t_hat"] = info.t_hat;
  if (std::isfinite(info.eps)) meta["eps"] = info.eps;

  if (o.format == "json") {
    ordered_json samples = ordered_json::array();
    for (size_t i = 0; i < info.n_samples; ++i) {
      double t, f, fp;
      check(capcone_solution_sample(sol, i, &t, &f, &fp));
      samples.push_back({t, f, fp});
    }
    meta["samples"] = samples;
    write_text(o.out, meta.dump(2) + "\n");
  } else {
    std::string csv = "t,f,fprime\n";
    for (size_t i = 0; i < info.n_samples; ++i) {
      double t, f, fp;
      check(capcone_solution_sample(sol, i, &t, &f, &fp));
      csv += fmt17(t) + "," + fmt17(f) + "," + fmt17(fp) + "\n";
    }
    write_text(o.out, csv);
    write_sidecar(o.out, meta);
  }
  capcone_solution_free(sol);
  return 0;
}

// ---- family sweep ----

struct SweepOpts {
  std::string mode;
  int n = 0, k = 0;
  std::vector<double> heights, lambdas;
  double a = kNaN;
  std::string out = "-", format = "csv";
};

int run_sweep(const SweepOpts& o) {
  double astar = 0;
  check(capcone_lawson_height(o.n, o.k, &astar));

  capcone_sweep* sw = nullptr;
  const bool heights_mode = o.mode == "heights";
  double a_used = kNaN;
  if (heights_mode) {
    std::vector<double> hs = o.heights;
    if (hs.empty())
      for (double f : {0.2, 0.4, 0.6, 0.8, 1.0, 1.1, 1.2}) hs.push_back(f * astar);
    check(capcone_sweep_heights(o.n, o.k, hs.data(), hs.size(), &sw));
  } else {
    std::vector<double> ls = o.lambdas;
    if (ls.empty()) ls = {0.25, 0.5, 1.0, 2.0, 4.0};
    a_used = std::isfinite(o.a) ? o.a : 0.5 * astar;
    check(capcone_sweep_lambda(o.n, o.k, a_used, ls.data(), ls.size(), &sw));
  }

  size_t count = 0;
  check(capcone_sweep_size(sw, &count));

  ordered_json meta;
  meta["mode"] = o.mode;
  meta["n"] = o.n;
  meta["k"] = o.k;
  if (!heights_mode) meta["a"] = a_used;
  ordered_json members = ordered_json::array();

  std::string csv = "param,t,f\n";
  ordered_json json_samples = ordered_json::array();
  for (size_t i = 0; i < count; ++i) {
    double param = 0;
    int lawson = 0, terminal = 0;
    size_t n_samples = 0;
    check(capcone_sweep_member(sw, i, &param, &lawson, &terminal, &n_samples));
    ordered_json m;
    m["param"] = param;
    m["lawson"] = lawson != 0;
    m["terminal"] = terminal_name(terminal);
    members.push_back(m);
    for (size_t j = 0; j < n_samples; ++j) {
      double t, f, fp;
      check(capcone_sweep_sample(sw, i, j, &t, &f, &fp));
      if (o.format == "json")
        json_samples.push_back({param, t, f});
      else
        csv += fmt17(param) + "," + fmt17(t) + "," + fmt17(f) + "\n";
    }
  }
  meta["members"] = members;

  bool pass = true;
  if (heights_mode) {
    int max_crossings = 0;
    ordered_json matrix = ordered_json::array();
    for (size_t i = 0; i < count; ++i) {
      ordered_json row = ordered_json::array();
      for (size_t j = 0; j < count; ++j) {
        int c = 0;
        check(capcone_sweep_crossings(sw, i, j, &c));
        row.push_back(c);
        max_crossings = std::max(max_crossings, c);
      }
      matrix.push_back(row);
    }
    meta["crossings"] = matrix;
    meta["max_pairwise_crossings"] = max_crossings;
    pass = max_crossings <= 1;
  } else {
    int ordered = 0;
    double min_gap = 0;
    check(capcone_sweep_ordering(sw, &ordered, &min_gap));
    meta["ordered"] = ordered != 0;
    meta["min_gap"] = min_gap;
    pass = ordered != 0;
  }
  meta["pass"] = pass;

  if (o.format == "json") {
    meta["samples"] = json_samples;
    write_text(o.out, meta.dump(2) + "\n");
  } else {
    write_text(o.out, csv);
    write_sidecar(o.out, meta);
  }
  capcone_sweep_free(sw);
  return pass ? 0 : 1;
}

// ---- barriers ----

struct SubOpts {
  int n = 0, k = 0;
  double alpha = kNaN;
  std::string out = "-";
};

int run_sub(const SubOpts& o) {
  double alpha = o.alpha;
  if (!std::isfinite(alpha)) check(capcone_reference_alpha(o.n, o.k, &alpha));
  capcone_sub_report rep{};
  check(capcone_check_subsolution(o.n, o.k, alpha, &rep));
  const bool pass = rep.margin > 0 && rep.endpoint_min != 0;
  ordered_json doc;
  doc["n"] = o.n;
  doc["k"] = o.k;
  doc["alpha"] = rep.alpha;
  doc["margin"] = rep.margin;
  doc["min_t"] = rep.min_t;
  doc["min_value"] = rep.min_value;
  doc["endpoint_min"] = rep.endpoint_min != 0;
  doc["strictly_decreasing"] = rep.strictly_decreasing != 0;
  doc["pass"] = pass;
  write_text(o.out, doc.dump(2) + "\n");
  return pass ? 0 : 1;
}

struct SuperOpts {
  int n = 0, k = 0;
  double beta = kNaN;
  std::string out = "-";
};

ordered_json super_report_json(int n, int k, const capcone_super_report& rep) {
  ordered_json doc;
  doc["n"] = n;
  doc["k"] = k;
  doc["beta"] = rep.beta;
  doc["t0"] = rep.t0;
  doc["tau"] = rep.tau;
  doc["rbar"] = rep.rbar;
  doc["A"] = rep.a_slope;
  doc["lambda_coef"] = rep.lambda_coef;
  doc["rbar_minus_A"] = rep.rbar_minus_a;
  doc["max_qhat"] = rep.max_qhat;
  doc["max_k0"] = rep.max_k0;
  doc["max_k1"] = rep.max_k1;
  doc["min_p"] = rep.min_p;
  doc["w_prime_tau"] = rep.w_prime_tau;
  doc["s1_ok"] = rep.s1_ok != 0;
  doc["s2_ok"] = rep.s2_ok != 0;
  doc["s3_ok"] = rep.s3_ok != 0;
  return doc;
}

int run_super(const SuperOpts& o) {
  if (!std::isfinite(o.beta)) {
    std::cerr << "error: --beta is required\n";
    return 2;
  }
  capcone_super_report rep{};
  check(capcone_verify_supersolution(o.n, o.k, o.beta, &rep));
  const bool pass = rep.s1_ok && rep.s2_ok && rep.s3_ok;
  ordered_json doc = super_report_json(o.n, o.k, rep);
  doc["pass"] = pass;
  write_text(o.out, doc.dump(2) + "\n");
  return pass ? 0 : 1;
}

struct ScanOpts {
  int n = 0, k = 0;
  double lo = kNaN, hi = kNaN;
  int count = 0;
  std::string out = "-";
};

int run_scan_beta(const ScanOpts& o) {
  if (!std::isfinite(o.lo) || !std::isfinite(o.hi)) {
    std::cerr << "error: --lo and --hi are required\n";
    return 2;
  }
  int count = o.count > 0 ? o.count
                          : std::max(2, static_cast<int>(std::lround((o.hi - o.lo) / 0.1)) + 1);
  std::vector<double> betas(count);
  std::vector<int> valid(count);
  std::vector<double> run_lo(count), run_hi(count);
  size_t n_runs = 0;
  check(capcone_scan_beta(o.n, o.k, o.lo, o.hi, count, betas.data(), valid.data(),
                          run_lo.data(), run_hi.data(), run_lo.size(), &n_runs));

  std::string csv = "beta,valid\n";
  bool any_valid = false;
  for (int i = 0; i < count; ++i) {
    csv += fmt17(betas[i]) + "," + std::to_string(valid[i]) + "\n";
    any_valid = any_valid || valid[i] != 0;
  }
  ordered_json meta;
  meta["n"] = o.n;
  meta["k"] = o.k;
  ordered_json runs = ordered_json::array();
  for (size_t i = 0; i < n_runs && i < run_lo.size(); ++i)
    runs.push_back({run_lo[i], run_hi[i]});
  meta["runs"] = runs;
  meta["any_valid"] = any_valid;
  write_text(o.out, csv);
  write_sidecar(o.out, meta);
  return any_valid ? 0 : 1;
}

// ---- table reproduce ----

struct TableOpts {
  std::string table;
  int jobs = 1;
  double tol_abs = 0.02, tol_rel = 0.02;
  int filter_n = 0, filter_k = 0;
  std::string out = "-", format = "csv";
};

struct RowOutcome {
  capcone_table_row row{};
  double computed[5] = {0, 0, 0, 0, 0};
  int s_ok[3] = {0, 0, 0};
  int endpoint_min = 0;
  bool matched = false;
  std::string error;
};

int run_table(const TableOpts& o) {
  int table_kind = -1;
  if (o.table == "appendix") table_kind = CAPCONE_TABLE_APPENDIX;
  else if (o.table == "alpha") table_kind = CAPCONE_TABLE_ALPHA;
  else if (o.table == "quadratics") table_kind = CAPCONE_TABLE_QUADRATICS;
  else {
    std::cerr << "error: --table must be appendix, alpha, or quadratics\n";
    return 2;
  }

  size_t total = 0;
  check(capcone_table_count(table_kind, &total));
  std::vector<size_t> selected;
  std::vector<capcone_table_row> rows(total);
  for (size_t i = 0; i < total; ++i) {
    check(capcone_table_row_get(table_kind, i, &rows[i]));
    if (o.filter_n && rows[i].n != o.filter_n) continue;
    if (o.filter_k && rows[i].k != o.filter_k) continue;
    selected.push_back(i);
  }

  std::vector<RowOutcome> results(selected.size());
  std::atomic<size_t> next{0};
  auto tol_ok = [&](double got, double ref) {
    return std::abs(got - ref) <= std::max(o.tol_abs, o.tol_rel * std::abs(ref));
  };
  auto worker = [&] {
    for (;;) {
      const size_t idx = next.fetch_add(1);
      if (idx >= selected.size()) return;
      RowOutcome& out = results[idx];
      out.row = rows[selected[idx]];
      if (table_kind == CAPCONE_TABLE_ALPHA) {
        capcone_sub_report rep{};
        const capcone_status st =
            capcone_check_subsolution(out.row.n, out.row.k, out.row.parameter, &rep);
        if (st != CAPCONE_OK) {
          out.error = capcone_last_error();
          continue;
        }
        out.computed[0] = rep.margin;
        out.computed[1] = rep.min_t;
        out.computed[2] = rep.min_value;
        out.endpoint_min = rep.endpoint_min;
        out.matched = rep.margin > out.row.reference[0] && rep.endpoint_min != 0;
      } else {
        capcone_super_report rep{};
        const capcone_status st =
            capcone_verify_supersolution(out.row.n, out.row.k, out.row.parameter, &rep);
        if (st != CAPCONE_OK) {
          out.error = capcone_last_error();
          continue;
        }
        out.computed[0] = rep.rbar_minus_a;
        out.computed[1] = rep.max_qhat;
        out.computed[2] = rep.max_k0;
        out.computed[3] = rep.max_k1;
        out.computed[4] = rep.min_p;
        out.s_ok[0] = rep.s1_ok;
        out.s_ok[1] = rep.s2_ok;
        out.s_ok[2] = rep.s3_ok;
        bool ok = rep.s1_ok && rep.s2_ok && rep.s3_ok;
        if (table_kind == CAPCONE_TABLE_APPENDIX)
          for (int c = 0; c < 5; ++c) ok = ok && tol_ok(out.computed[c], out.row.reference[c]);
        out.matched = ok;
      }
    }
  };

  const int jobs = std::max(1, std::min<int>(o.jobs, static_cast<int>(selected.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  const char* param_name = table_kind == CAPCONE_TABLE_ALPHA ? "alpha" : "beta";
  bool all_matched = true;
  std::string csv;
  ordered_json json_rows = ordered_json::array();
  if (table_kind == CAPCONE_TABLE_APPENDIX)
    csv = "n,k,beta,rbar_minus_A,max_qhat,max_k0,max_k1,min_p,"
          "ref_rbar_minus_A,ref_max_qhat,ref_max_k0,ref_max_k1,ref_min_p,matched\n";
  else if (table_kind == CAPCONE_TABLE_QUADRATICS)
    csv = "n,k,beta,rbar_minus_A,max_qhat,max_k0,max_k1,min_p,matched\n";
  else
    csv = "n,k,alpha,margin,min_t,min_value,margin_floor,matched\n";

  for (const RowOutcome& r : results) {
    all_matched = all_matched && r.matched;
    std::string line = std::to_string(r.row.n) + "," + std::to_string(r.row.k) + "," +
                       fmt17(r.row.parameter);
    ordered_json jr;
    jr["n"] = r.row.n;
    jr["k"] = r.row.k;
    jr[param_name] = r.row.parameter;
    if (table_kind == CAPCONE_TABLE_ALPHA) {
      for (int c = 0; c < 3; ++c) line += "," + fmt17(r.computed[c]);
      line += "," + fmt17(r.row.reference[0]);
      jr["margin"] = r.computed[0];
      jr["min_t"] = r.computed[1];
      jr["min_value"] = r.computed[2];
      jr["margin_floor"] = r.row.reference[0];
      jr["endpoint_min"] = r.endpoint_min != 0;
    } else {
      for (int c = 0; c < 5; ++c) line += "," + fmt17(r.computed[c]);
      if (table_kind == CAPCONE_TABLE_APPENDIX)
        for (int c = 0; c < 5; ++c) line += "," + fmt17(r.row.reference[c]);
      jr["rbar_minus_A"] = r.computed[0];
      jr["max_qhat"] = r.computed[1];
      jr["max_k0"] = r.computed[2];
      jr["max_k1"] = r.computed[3];
      jr["min_p"] = r.computed[4];
      if (table_kind == CAPCONE_TABLE_APPENDIX) {
        ordered_json ref = ordered_json::array();
        for (int c = 0; c < 5; ++c) ref.push_back(r.row.reference[c]);
        jr["reference"] = ref;
      }
      jr["s1_ok"] = r.s_ok[0] != 0;
      jr["s2_ok"] = r.s_ok[1] != 0;
      jr["s3_ok"] = r.s_ok[2] != 0;
    }
    line += std::string(",") + (r.matched ? "1" : "0") + "\n";
    jr["matched"] = r.matched;
    if (!r.error.empty()) jr["error"] = r.error;
    csv += line;
    json_rows.push_back(jr);
  }

  if (o.format == "json") {
    ordered_json doc;
    doc["table"] = o.table;
    doc["rows"] = json_rows;
    doc["all_matched"] = all_matched;
    write_text(o.out, doc.dump(2) + "\n");
  } else {
    write_text(o.out, csv);
  }
  return all_matched ? 0 : 1;
}

// ---- vertical-contact checks ----

int run_indicial(int n, const std::string& out) {
  capcone_indicial_report rep{};
  check(capcone_indicial(n, &rep));
  const bool pass = n < 7 ? true : rep.contained != 0;
  ordered_json doc;
  doc["n"] = rep.n;
  doc["real_roots"] = rep.real_roots != 0;
  if (rep.real_roots) {
    doc["gamma_low"] = rep.gamma_low;
    doc["gamma_high"] = rep.gamma_high;
    doc["interval"] = {-rep.gamma_high, -rep.gamma_low};
  }
  if (n >= 7) {
    doc["window"] = {rep.window_lo, rep.window_hi};
    doc["contained"] = rep.contained != 0;
  }
  doc["pass"] = pass;
  write_text(out, doc.dump(2) + "\n");
  return pass ? 0 : 1;
}

struct CapsOpts {
  int n = 0, k = 0;
  std::string side = "plus";
  double shift = 0;
  std::string out = "-";
};

int run_caps(const CapsOpts& o) {
  const int side = o.side == "minus" ? CAPCONE_SIDE_MINUS : CAPCONE_SIDE_PLUS;
  capcone_cap_report rep{};
  check(capcone_cap_check(o.n, o.k, side, o.shift, &rep));
  double lawlor_arg = 0, lawlor_val = 0;
  check(capcone_lawlor_cubic(&lawlor_arg, &lawlor_val));
  const bool pass = rep.side_signed_ok != 0 && rep.min_scaled_divergence > 0;
  const char* case_names[] = {"I", "II", "III", "IV"};
  ordered_json doc;
  doc["n"] = o.n;
  doc["k"] = o.k;
  doc["side"] = o.side;
  doc["case"] = case_names[rep.cap_case];
  doc["degree"] = rep.degree;
  doc["shift"] = rep.shift;
  doc["cone_slope_sq"] = rep.cone_slope_sq;
  doc["constant"] = rep.constant;
  doc["reference_constant"] = rep.reference_constant;
  doc["constant_matches"] = rep.constant_matches != 0;
  doc["level"] = rep.level;
  doc["min_scaled_divergence"] = rep.min_scaled_divergence;
  doc["side_signed_ok"] = rep.side_signed_ok != 0;
  doc["points"] = rep.points;
  doc["lawlor"] = {{"argmin", lawlor_arg}, {"value", lawlor_val}};
  doc["pass"] = pass;
  write_text(o.out, doc.dump(2) + "\n");
  return pass ? 0 : 1;
}

struct EpsOpts {
  int n = 0, k = 0;
  double eps = kNaN;
  std::string out = "-";
};

int run_eps(const EpsOpts& o) {
  if (!std::isfinite(o.eps)) {
    std::cerr << "error: --eps is required\n";
    return 2;
  }
  capcone_nhp_report rep{};
  check(capcone_near_half_pi(o.n, o.k, o.eps, &rep));
  const double half_pi = std::acos(-1.0) / 2.0;
  const bool pass =
      rep.t_eps < rep.t_hat_eps && rep.theta < half_pi && rep.kappa_estimate > 0;
  ordered_json doc;
  doc["n"] = o.n;
  doc["k"] = o.k;
  doc["eps"] = rep.eps;
  doc["theta"] = rep.theta;
  doc["t_eps"] = rep.t_eps;
  doc["t_hat_eps"] = rep.t_hat_eps;
  doc["aperture"] = rep.aperture;
  doc["tan_defect"] = rep.tan_defect;
  doc["theta_defect"] = rep.theta_defect;
  doc["gap_defect"] = rep.gap_defect;
  doc["kappa_estimate"] = rep.kappa_estimate;
  doc["pass"] = pass;
  write_text(o.out, doc.dump(2) + "\n");
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"capillary cone profiles: solves, sweeps, certificates, tables"};
  app.set_version_flag("--version", capcone_version());
  int seed = 0;
  app.add_option("--seed", seed, "reserved for property-test harnesses")->group("");

  SolveOpts solve_opts;
  SweepOpts sweep_opts;
  SubOpts sub_opts;
  SuperOpts super_opts;
  ScanOpts scan_opts;
  TableOpts table_opts;
  CapsOpts caps_opts;
  EpsOpts eps_opts;
  int indicial_n = 0;
  std::string indicial_out = "-";
  int rc = 0;

  auto* cone = app.add_subcommand("cone", "shooting solves");
  auto* solve = cone->add_subcommand("solve", "solve one cone profile");
  solve->add_option("--n", solve_opts.n, "ambient dimension")->required();
  solve->add_option("--k", solve_opts.k, "link factor dimension")->required();
  solve->add_option("--theta", solve_opts.theta, "contact angle in (0, pi/2]");
  solve->add_option("--eps", solve_opts.eps, "overshoot depth for near-vertical solves");
  solve->add_flag("--degrees", solve_opts.degrees, "interpret --theta in degrees");
  solve->add_option("--out", solve_opts.out, "output path, - for stdout");
  solve->add_option("--format", solve_opts.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  solve->callback([&] { rc = run_solve(solve_opts); });

  auto* family = app.add_subcommand("family", "one-parameter profile families");
  auto* sweep = family->add_subcommand("sweep", "sweep heights or scalings");
  sweep->add_option("mode", sweep_opts.mode, "heights or lambda")
      ->required()
      ->check(CLI::IsMember({"heights", "lambda"}));
  sweep->add_option("--n", sweep_opts.n, "ambient dimension")->required();
  sweep->add_option("--k", sweep_opts.k, "link factor dimension")->required();
  sweep->add_option("--heights", sweep_opts.heights, "explicit initial heights")
      ->delimiter(',');
  sweep->add_option("--lambdas", sweep_opts.lambdas, "explicit scaling parameters")
      ->delimiter(',');
  sweep->add_option("--a", sweep_opts.a, "initial height for scaling sweeps");
  sweep->add_option("--out", sweep_opts.out, "output path, - for stdout");
  sweep->add_option("--format", sweep_opts.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->callback([&] { rc = run_sweep(sweep_opts); });

  auto* barriers = app.add_subcommand("barriers", "comparison certificates");
  auto* sub = barriers->add_subcommand("sub", "boundary stability certificate");
  sub->add_option("--n", sub_opts.n, "ambient dimension")->required();
  sub->add_option("--k", sub_opts.k, "link factor dimension")->required();
  sub->add_option("--alpha", sub_opts.alpha, "exponent; defaults to the ledger value");
  sub->add_option("--out", sub_opts.out, "output path, - for stdout");
  sub->callback([&] { rc = run_sub(sub_opts); });

  auto* super = barriers->add_subcommand("super", "one-phase supersolution certificate");
  super->add_option("--n", super_opts.n, "ambient dimension")->required();
  super->add_option("--k", super_opts.k, "link factor dimension")->required();
  super->add_option("--beta", super_opts.beta, "decay exponent in (2-n, -1)");
  super->add_option("--out", super_opts.out, "output path, - for stdout");
  super->callback([&] { rc = run_super(super_opts); });

  auto* scan = barriers->add_subcommand("scan-beta", "scan an exponent interval");
  scan->add_option("--n", scan_opts.n, "ambient dimension")->required();
  scan->add_option("--k", scan_opts.k, "link factor dimension")->required();
  scan->add_option("--lo", scan_opts.lo, "interval lower end");
  scan->add_option("--hi", scan_opts.hi, "interval upper end");
  scan->add_option("--count", scan_opts.count, "sample count; default ~0.1 spacing");
  scan->add_option("--out", scan_opts.out, "output path, - for stdout");
  scan->callback([&] { rc = run_scan_beta(scan_opts); });

  auto* table = app.add_subcommand("table", "embedded reference tables");
  auto* reproduce = table->add_subcommand("reproduce", "recompute and match a table");
  reproduce->add_option("--table", table_opts.table, "appendix, alpha, or quadratics")
      ->required();
  reproduce->add_option("--jobs", table_opts.jobs, "worker threads");
  reproduce->add_option("--tol-abs", table_opts.tol_abs, "absolute match tolerance");
  reproduce->add_option("--tol-rel", table_opts.tol_rel, "relative match tolerance");
  reproduce->add_option("--filter-n", table_opts.filter_n, "restrict to one n");
  reproduce->add_option("--filter-k", table_opts.filter_k, "restrict to one k");
  reproduce->add_option("--out", table_opts.out, "output path, - for stdout");
  reproduce->add_option("--format", table_opts.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  reproduce->callback([&] { rc = run_table(table_opts); });

  auto* fb = app.add_subcommand("fb", "vertical-contact checks");
  auto* indicial = fb->add_subcommand("indicial", "decay exponents and containment");
  indicial->add_option("--n", indicial_n, "ambient dimension")->required();
  indicial->add_option("--out", indicial_out, "output path, - for stdout");
  indicial->callback([&] { rc = run_indicial(indicial_n, indicial_out); });

  auto* caps = fb->add_subcommand("caps", "cap potential certificate");
  caps->add_option("--n", caps_opts.n, "ambient dimension")->required();
  caps->add_option("--k", caps_opts.k, "link factor dimension")->required();
  caps->add_option("--side", caps_opts.side, "plus or minus")
      ->check(CLI::IsMember({"plus", "minus"}));
  caps->add_option("--shift", caps_opts.shift, "vertical translation, >= 0");
  caps->add_option("--out", caps_opts.out, "output path, - for stdout");
  caps->callback([&] { rc = run_caps(caps_opts); });

  auto* eps = fb->add_subcommand("eps", "near-vertical parametrization relations");
  eps->add_option("--n", eps_opts.n, "ambient dimension")->required();
  eps->add_option("--k", eps_opts.k, "link factor dimension")->required();
  eps->add_option("--eps", eps_opts.eps, "gap parameter");
  eps->add_option("--out", eps_opts.out, "output path, - for stdout");
  eps->callback([&] { rc = run_eps(eps_opts); });

  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (app.get_subcommands().empty()) {
    std::cout << app.help();
    return 0;
  }
  return rc;
}

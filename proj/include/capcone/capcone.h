/* C interface to the capillary cone profile library: shooting solves for
 * rotationally invariant minimal cone profiles, family sweeps, barrier
 * certificates, reference-table reproduction, and the vertical-contact
 * kernels.  All functions return a status code; on failure a thread-local
 * message is available from capcone_last_error().  Handles returned through
 * out-parameters are owned by the caller and released with the matching
 * _free function.  The library keeps no global state; concurrent use is
 * safe as long as each handle is confined to one thread at a time.
 */
#ifndef CAPCONE_CAPCONE_H
#define CAPCONE_CAPCONE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CAPCONE_API __declspec(dllexport)
#else
#define CAPCONE_API __attribute__((visibility("default")))
#endif

typedef enum capcone_status {
  CAPCONE_OK = 0,
  CAPCONE_INVALID_INPUT = 1,
  CAPCONE_NON_CONVERGENCE = 2,
  CAPCONE_NUMERICAL_FAILURE = 3,
  CAPCONE_NO_ZERO = 4,
  CAPCONE_NOT_REACHING_ZERO = 5,
  CAPCONE_OUT_OF_DOMAIN = 6,
  CAPCONE_AMBIGUOUS_NEAR_LAWSON = 7,
  CAPCONE_CONDITION_FAILED = 8,
  CAPCONE_NO_TAU = 9,
  CAPCONE_WRONG_SIDE = 10,
  CAPCONE_INTERNAL = 11
} capcone_status;

/* Message describing the most recent failure on this thread. */
CAPCONE_API const char* capcone_last_error(void);
CAPCONE_API const char* capcone_version(void);

typedef enum capcone_terminal {
  CAPCONE_TERMINAL_ZERO_CROSSING = 0,
  CAPCONE_TERMINAL_BLOWUP = 1,
  CAPCONE_TERMINAL_LAWSON = 2
} capcone_terminal;

typedef enum capcone_height_class {
  CAPCONE_HEIGHT_REACHES_ZERO = 0,
  CAPCONE_HEIGHT_LAWSON = 1,
  CAPCONE_HEIGHT_BLOWS_UP = 2
} capcone_height_class;

typedef enum capcone_side { CAPCONE_SIDE_PLUS = 0, CAPCONE_SIDE_MINUS = 1 } capcone_side;

typedef enum capcone_family_kind {
  CAPCONE_FAMILY_LINEAR = 0,
  CAPCONE_FAMILY_BARRIER = 1
} capcone_family_kind;

typedef enum capcone_table {
  CAPCONE_TABLE_APPENDIX = 0,
  CAPCONE_TABLE_ALPHA = 1,
  CAPCONE_TABLE_QUADRATICS = 2
} capcone_table;

/* ---- special functions and profile families ---- */

/* Gauss hypergeometric 2F1(a,b;c;x) on [0,1); order 0..2 selects the
 * derivative in x, taken through shifted parameters. */
CAPCONE_API capcone_status capcone_hyp2f1(double a, double b, double c, double x,
                                          int order, double* out);

/* Closed-form profile families on [0,1): kind selects the linearized cone
 * profile (exponent ignored) or the comparison family with the given decay
 * exponent.  order 0..2 as above. */
CAPCONE_API capcone_status capcone_family_eval(int n, int k, int kind, double exponent,
                                               double t, int order, double* out);
CAPCONE_API capcone_status capcone_family_zero(int n, int k, int kind, double exponent,
                                               double* t_zero);

/* ---- shooting ---- */

typedef struct capcone_solution capcone_solution;

typedef struct capcone_solution_info {
  int n, k;
  double a;              /* initial height f(0) */
  double theta;          /* contact angle at the first root */
  double t_a;            /* first root */
  double t_hat;          /* blow-up time of the continued profile; NaN if n/a */
  double eps;            /* overshoot depth of the continued profile; NaN if n/a */
  int terminal_kind;     /* capcone_terminal */
  double terminal_t;
  double terminal_value;
  size_t n_samples;
} capcone_solution_info;

CAPCONE_API capcone_status capcone_solve_cone(int n, int k, double theta,
                                              capcone_solution** out);
CAPCONE_API capcone_status capcone_solve_near_half_pi(int n, int k, double eps,
                                                      capcone_solution** out);
CAPCONE_API capcone_status capcone_solution_info_get(const capcone_solution* sol,
                                                     capcone_solution_info* out);
CAPCONE_API capcone_status capcone_solution_sample(const capcone_solution* sol, size_t i,
                                                   double* t, double* f, double* fp);
CAPCONE_API capcone_status capcone_solution_eval(const capcone_solution* sol, double t,
                                                 double* f, double* fp);
CAPCONE_API void capcone_solution_free(capcone_solution* sol);

CAPCONE_API capcone_status capcone_lawson_height(int n, int k, double* a);
CAPCONE_API capcone_status capcone_terminal_angle(int n, int k, double a, double* theta);
CAPCONE_API capcone_status capcone_classify_height(int n, int k, double a, int* cls);
CAPCONE_API capcone_status capcone_small_theta(int n, int k, double theta,
                                               double* sup_deviation, double* root_gap);
CAPCONE_API capcone_status capcone_variation_defect(int n, int k, double lambda, double a,
                                                    double* defect);

/* ---- family sweeps ---- */

typedef struct capcone_sweep capcone_sweep;

CAPCONE_API capcone_status capcone_sweep_heights(int n, int k, const double* heights,
                                                 size_t count, capcone_sweep** out);
CAPCONE_API capcone_status capcone_sweep_lambda(int n, int k, double a,
                                                const double* lambdas, size_t count,
                                                capcone_sweep** out);
CAPCONE_API capcone_status capcone_sweep_size(const capcone_sweep* sweep, size_t* count);
CAPCONE_API capcone_status capcone_sweep_member(const capcone_sweep* sweep, size_t i,
                                                double* parameter, int* lawson,
                                                int* terminal_kind, size_t* n_samples);
CAPCONE_API capcone_status capcone_sweep_sample(const capcone_sweep* sweep, size_t i,
                                                size_t j, double* t, double* f, double* fp);
/* Height sweeps: sign changes of member i minus member j. */
CAPCONE_API capcone_status capcone_sweep_crossings(const capcone_sweep* sweep, size_t i,
                                                   size_t j, int* count);
/* Scaling sweeps: strict ordering verdict and smallest pairwise gap. */
CAPCONE_API capcone_status capcone_sweep_ordering(const capcone_sweep* sweep, int* ordered,
                                                  double* min_gap);
CAPCONE_API void capcone_sweep_free(capcone_sweep* sweep);

/* ---- barrier certificates ---- */

typedef struct capcone_sub_report {
  double alpha;
  double margin;       /* boundary stability gap; positive certifies */
  double min_t;        /* argmin of the comparison quadratic on [0, t0] */
  double min_value;
  int endpoint_min;           /* minimum sits at t0 (value-based) */
  int strictly_decreasing;    /* derivative negative on the grid */
} capcone_sub_report;

CAPCONE_API capcone_status capcone_reference_alpha(int n, int k, double* alpha);
CAPCONE_API capcone_status capcone_check_subsolution(int n, int k, double alpha,
                                                     capcone_sub_report* out);

typedef struct capcone_super_report {
  double beta;
  double t0, tau, rbar, a_slope;  /* profile root, matching angle, cap data */
  double lambda_coef;
  double rbar_minus_a;
  double max_qhat;     /* max over the 1000-point grid on [0, tau) */
  double max_k0;       /* max of K(0,.) over the 10-point grid on [0, 0.9] */
  double max_k1;       /* max of K(1,.) over the 10-point grid on [0, 0.9] */
  double min_p;        /* min over [0, 1] */
  double w_prime_tau;
  int s1_ok, s2_ok, s3_ok;
} capcone_super_report;

CAPCONE_API capcone_status capcone_verify_supersolution(int n, int k, double beta,
                                                        capcone_super_report* out);

/* Scan count exponents evenly spaced on [lo, hi].  betas/valid must hold
 * count entries; maximal valid runs are written to run_lo/run_hi (up to
 * max_runs of them), with the total placed in n_runs. */
CAPCONE_API capcone_status capcone_scan_beta(int n, int k, double lo, double hi, int count,
                                             double* betas, int* valid, double* run_lo,
                                             double* run_hi, size_t max_runs,
                                             size_t* n_runs);

/* ---- vertical-contact kernels ---- */

typedef struct capcone_indicial_report {
  int n;
  int real_roots;
  double gamma_low, gamma_high;
  double window_lo, window_hi;  /* exponent window that must be contained */
  int contained;
} capcone_indicial_report;

CAPCONE_API capcone_status capcone_indicial(int n, capcone_indicial_report* out);

typedef struct capcone_nhp_report {
  double eps, theta, t_eps, t_hat_eps, aperture;
  double tan_defect, theta_defect, gap_defect;
  double kappa_estimate;
} capcone_nhp_report;

CAPCONE_API capcone_status capcone_near_half_pi(int n, int k, double eps,
                                                capcone_nhp_report* out);

typedef struct capcone_cap_report {
  int cap_case;  /* 0..3 */
  double degree;
  double cone_slope_sq;
  double shift;
  double constant;            /* normalizing constant from the convention */
  double reference_constant;  /* tabulated value */
  int constant_matches;
  double level;
  double min_scaled_divergence;
  int side_signed_ok;
  int points;
} capcone_cap_report;

CAPCONE_API capcone_status capcone_cap_check(int n, int k, int side, double shift,
                                             capcone_cap_report* out);
/* jet = {value, d/dr, d/ds, d/dz}. */
CAPCONE_API capcone_status capcone_cap_eval(int n, int k, int side, double shift, double r,
                                            double s, double z, double jet[4]);
CAPCONE_API capcone_status capcone_cap_divergence(int n, int k, int side, double shift,
                                                  double r, double s, double z,
                                                  double* divergence, double* scaled);
CAPCONE_API capcone_status capcone_lawlor_cubic(double* argmin, double* value);

/* ---- embedded reference tables ---- */

typedef struct capcone_table_row {
  int n, k;
  double parameter;     /* decay exponent (appendix/quadratics) or alpha */
  double reference[5];  /* tabulated columns; see n_reference */
  size_t n_reference;
} capcone_table_row;

CAPCONE_API capcone_status capcone_table_count(int table, size_t* count);
CAPCONE_API capcone_status capcone_table_row_get(int table, size_t i,
                                                 capcone_table_row* out);
/* Recomputes row i.  computed must hold 5 entries; unused entries are set
 * to 0.  matched reports the row-specific pass criterion. */
CAPCONE_API capcone_status capcone_table_verify_row(int table, size_t i, double computed[5],
                                                    int* matched);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CAPCONE_CAPCONE_H */

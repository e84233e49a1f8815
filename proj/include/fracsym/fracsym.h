/* C interface to the fracsym library: the Bernstein spectral solver for the
 * space-time fractional heat equation, the symmetry-algebra tools, and the
 * Erdélyi-Kober reduction checks.
 *
 * Every function returns a fracsym_status. On failure, fracsym_last_error()
 * describes the most recent error on the calling thread. Matrices cross the
 * boundary row-major. Objects behind opaque handles are immutable and may be
 * shared between threads; free them with the matching *_free function.
 */
#ifndef FRACSYM_H
#define FRACSYM_H

#include <stddef.h>

#if defined(FRACSYM_BUILDING_LIBRARY)
#define FRACSYM_API __attribute__((visibility("default")))
#else
#define FRACSYM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fracsym_status {
  FRACSYM_OK = 0,
  FRACSYM_ERR_DOMAIN = 1,
  FRACSYM_ERR_SINGULAR = 2,
  FRACSYM_ERR_CONVERGENCE = 3,
  FRACSYM_ERR_SIZE_LIMIT = 4,
  FRACSYM_ERR_PARAMETER_MISMATCH = 5,
  FRACSYM_ERR_ZERO_ELEMENT = 6,
  FRACSYM_ERR_PARSE = 7,
  FRACSYM_ERR_INVALID_ARGUMENT = 8,
  FRACSYM_ERR_BUFFER_TOO_SMALL = 9,
  FRACSYM_ERR_INTERNAL = 10
} fracsym_status;

typedef enum fracsym_axis {
  FRACSYM_AXIS_T = 0,
  FRACSYM_AXIS_X = 1,
  FRACSYM_AXIS_Y = 2
} fracsym_axis;

typedef enum fracsym_matrix_kind {
  FRACSYM_MATRIX_P_ALPHA = 0,
  FRACSYM_MATRIX_D_BETA = 1,
  FRACSYM_MATRIX_H_X = 2,
  FRACSYM_MATRIX_H_Y = 3,
  FRACSYM_MATRIX_K = 4,
  FRACSYM_MATRIX_F = 5,
  FRACSYM_MATRIX_U = 6
} fracsym_matrix_kind;

FRACSYM_API const char* fracsym_last_error(void);
FRACSYM_API const char* fracsym_status_name(fracsym_status status);

/* ---- polynomial sums -------------------------------------------------- */

/* Parses `c,p,q,r;...` and writes its canonical text (merged duplicates,
 * shortest round-trip decimals). *required receives the buffer size
 * including the terminator; buffer may be NULL to query it. */
FRACSYM_API fracsym_status fracsym_polysum_canonical(const char* terms,
                                                     char* buffer,
                                                     size_t capacity,
                                                     size_t* required);

/* ---- spectral solver ------------------------------------------------- */

typedef struct fracsym_solution fracsym_solution;

FRACSYM_API fracsym_status fracsym_solve(double alpha, double beta, int degree,
                                         const char* f_terms,
                                         fracsym_solution** out);
FRACSYM_API void fracsym_solution_free(fracsym_solution* solution);

FRACSYM_API fracsym_status fracsym_solution_evaluate(
    const fracsym_solution* solution, double t, double x, double y,
    double* out);
FRACSYM_API fracsym_status fracsym_solution_residual(
    const fracsym_solution* solution, double* out);

/* n×n slice tables, row-major, three doubles per row (coord1, coord2,
 * value); out must hold 3·n·n doubles. */
FRACSYM_API fracsym_status fracsym_solution_grid(
    const fracsym_solution* solution, fracsym_axis axis, double value, int n,
    double* out);
FRACSYM_API fracsym_status fracsym_solution_error_grid(
    const fracsym_solution* solution, const char* exact_terms,
    fracsym_axis axis, double value, int n, double* out);

typedef struct fracsym_side_conditions {
  double initial;      /* max |u(0,x,y)|       */
  double x_zero;       /* max |u(t,0,y)|       */
  double y_zero;       /* max |u(t,x,0)|       */
  double dx_at_x_zero; /* max |u_x(t,0,y)|     */
  double dy_at_y_zero; /* max |u_y(t,x,0)|     */
} fracsym_side_conditions;

FRACSYM_API fracsym_status fracsym_solution_side_conditions(
    const fracsym_solution* solution, int n, fracsym_side_conditions* out);

/* Copies a matrix row-major into data (capacity doubles). data may be NULL
 * to query the shape. */
FRACSYM_API fracsym_status fracsym_solution_matrix(
    const fracsym_solution* solution, fracsym_matrix_kind kind, size_t* rows,
    size_t* cols, double* data, size_t capacity);

/* ---- symmetry algebra ------------------------------------------------ */

typedef struct fracsym_canonical_form {
  int case_id;                 /* 1..8 */
  double representative[5];
  int step_count;              /* 0..5 */
  int step_generator[5];       /* 1..5 */
  double step_parameter[5];
  double lambda;               /* > 0 */
  double sign;                 /* ±1  */
} fracsym_canonical_form;

FRACSYM_API fracsym_status fracsym_classify(const double a[5], double alpha,
                                            double beta, double eps,
                                            fracsym_canonical_form* out);
FRACSYM_API fracsym_status fracsym_commutator(const double a[5],
                                              const double b[5], double alpha,
                                              double beta, double out[5]);
/* Ad(exp(s·X_i)) as a 5×5 row-major matrix acting on coefficient columns. */
FRACSYM_API fracsym_status fracsym_adjoint_matrix(int i, double s,
                                                  double alpha, double beta,
                                                  double out[25]);
FRACSYM_API fracsym_status fracsym_lie_series_matrix(int i, double s,
                                                     double alpha, double beta,
                                                     int terms,
                                                     double out[25]);

/* ---- Erdélyi-Kober reduction ---------------------------------------- */

/* out = {lhs, rhs, |lhs − rhs|, literal_rhs}. */
FRACSYM_API fracsym_status fracsym_verify_time_identity(
    double p, double q, double alpha, double beta, double t, double x,
    double y, double tol, double out[4]);
FRACSYM_API fracsym_status fracsym_verify_space_identity(
    double p, double q, double alpha, double beta, double t, double x,
    double y, double tol, double out[4]);

/* ---- verification reports ------------------------------------------- */

typedef struct fracsym_report fracsym_report;

typedef struct fracsym_check_row {
  const char* label; /* owned by the report */
  double lhs;
  double rhs;
  double diff;
  double tol;
  int pass;
  const char* note;  /* owned by the report; may be empty */
} fracsym_check_row;

/* corrupt != 0 perturbs one structure constant (negative control). */
FRACSYM_API fracsym_status fracsym_verify_adjoint(double alpha, double beta,
                                                  double tol, int corrupt,
                                                  fracsym_report** out);
FRACSYM_API fracsym_status fracsym_verify_reduction(double tol,
                                                    fracsym_report** out);
FRACSYM_API size_t fracsym_report_size(const fracsym_report* report);
FRACSYM_API fracsym_status fracsym_report_row(const fracsym_report* report,
                                              size_t index,
                                              fracsym_check_row* out);
FRACSYM_API int fracsym_report_all_pass(const fracsym_report* report);
FRACSYM_API void fracsym_report_free(fracsym_report* report);

#ifdef __cplusplus
}
#endif

#endif /* FRACSYM_H */

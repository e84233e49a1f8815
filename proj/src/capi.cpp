#include "fracsym/fracsym.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "fracsym/erdelyi_kober.hpp"
#include "fracsym/error.hpp"
#include "fracsym/lie_symmetry.hpp"
#include "fracsym/spectral_solver.hpp"

struct fracsym_solution {
  fracsym::SpectralSolution sol;
};

struct fracsym_report {
  std::vector<fracsym::CheckRow> rows;
};

namespace {

thread_local std::string last_error;

fracsym_status to_status(fracsym::ErrorCode code) {
  using fracsym::ErrorCode;
  switch (code) {
    case ErrorCode::domain: return FRACSYM_ERR_DOMAIN;
    case ErrorCode::singular: return FRACSYM_ERR_SINGULAR;
    case ErrorCode::convergence: return FRACSYM_ERR_CONVERGENCE;
    case ErrorCode::size_limit: return FRACSYM_ERR_SIZE_LIMIT;
    case ErrorCode::parameter_mismatch: return FRACSYM_ERR_PARAMETER_MISMATCH;
    case ErrorCode::zero_element: return FRACSYM_ERR_ZERO_ELEMENT;
    case ErrorCode::parse: return FRACSYM_ERR_PARSE;
  }
  return FRACSYM_ERR_INTERNAL;
}

fracsym_status invalid(const char* what) {
  last_error = what;
  return FRACSYM_ERR_INVALID_ARGUMENT;
}

template <class F>
fracsym_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const fracsym::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return FRACSYM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FRACSYM_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return FRACSYM_ERR_INTERNAL;
  }
}

bool axis_from(fracsym_axis axis, fracsym::Axis& out) {
  switch (axis) {
    case FRACSYM_AXIS_T: out = fracsym::Axis::t; return true;
    case FRACSYM_AXIS_X: out = fracsym::Axis::x; return true;
    case FRACSYM_AXIS_Y: out = fracsym::Axis::y; return true;
  }
  return false;
}

void copy_grid(const std::vector<fracsym::GridValue>& grid, double* out) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out[3 * i] = grid[i].coord1;
    out[3 * i + 1] = grid[i].coord2;
    out[3 * i + 2] = grid[i].value;
  }
}

void copy_row_major(const fracsym::Matrix& m, double* out) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) *out++ = m(i, j);
}

fracsym::lie::Coefficients coeffs(const double a[5]) {
  fracsym::lie::Coefficients c{};
  for (int i = 0; i < 5; ++i) c[i] = a[i];
  return c;
}

void identity_out(const fracsym::ek::IdentityCheck& c, double out[4]) {
  out[0] = c.lhs;
  out[1] = c.rhs;
  out[2] = c.abs_diff;
  out[3] = c.literal_rhs;
}

}  // namespace

extern "C" {

const char* fracsym_last_error(void) { return last_error.c_str(); }

const char* fracsym_status_name(fracsym_status status) {
  switch (status) {
    case FRACSYM_OK: return "ok";
    case FRACSYM_ERR_DOMAIN: return "domain";
    case FRACSYM_ERR_SINGULAR: return "singular";
    case FRACSYM_ERR_CONVERGENCE: return "convergence";
    case FRACSYM_ERR_SIZE_LIMIT: return "size_limit";
    case FRACSYM_ERR_PARAMETER_MISMATCH: return "parameter_mismatch";
    case FRACSYM_ERR_ZERO_ELEMENT: return "zero_element";
    case FRACSYM_ERR_PARSE: return "parse";
    case FRACSYM_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case FRACSYM_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case FRACSYM_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

fracsym_status fracsym_polysum_canonical(const char* terms, char* buffer,
                                         size_t capacity, size_t* required) {
  if (!terms || !required) return invalid("null argument");
  return guarded([&] {
    const std::string text = fracsym::PolySum3::parse(terms).to_string();
    *required = text.size() + 1;
    if (!buffer) return FRACSYM_OK;
    if (capacity < text.size() + 1) {
      last_error = "buffer too small";
      return FRACSYM_ERR_BUFFER_TOO_SMALL;
    }
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    return FRACSYM_OK;
  });
}

fracsym_status fracsym_solve(double alpha, double beta, int degree,
                             const char* f_terms, fracsym_solution** out) {
  if (!out) return invalid("null output handle");
  *out = nullptr;
  return guarded([&] {
    fracsym::ProblemSpec spec{fracsym::FracOrder(alpha),
                              fracsym::FracOrder(beta), degree,
                              fracsym::PolySum3::parse(f_terms ? f_terms : "")};
    *out = new fracsym_solution{fracsym::solve(spec)};
    return FRACSYM_OK;
  });
}

void fracsym_solution_free(fracsym_solution* solution) { delete solution; }

fracsym_status fracsym_solution_evaluate(const fracsym_solution* solution,
                                         double t, double x, double y,
                                         double* out) {
  if (!solution || !out) return invalid("null argument");
  return guarded([&] {
    *out = solution->sol.evaluate(t, x, y);
    return FRACSYM_OK;
  });
}

fracsym_status fracsym_solution_residual(const fracsym_solution* solution,
                                         double* out) {
  if (!solution || !out) return invalid("null argument");
  return guarded([&] {
    *out = solution->sol.residual();
    return FRACSYM_OK;
  });
}

fracsym_status fracsym_solution_grid(const fracsym_solution* solution,
                                     fracsym_axis axis, double value, int n,
                                     double* out) {
  fracsym::Axis a;
  if (!solution || !out) return invalid("null argument");
  if (!axis_from(axis, a)) return invalid("unknown axis");
  return guarded([&] {
    copy_grid(fracsym::solution_grid(solution->sol, {a, value}, n), out);
    return FRACSYM_OK;
  });
}

fracsym_status fracsym_solution_error_grid(const fracsym_solution* solution,
                                           const char* exact_terms,
                                           fracsym_axis axis, double value,
                                           int n, double* out) {
  fracsym::Axis a;
  if (!solution || !out || !exact_terms) return invalid("null argument");
  if (!axis_from(axis, a)) return invalid("unknown axis");
  return guarded([&] {
    const auto exact = fracsym::PolySum3::parse(exact_terms);
    copy_grid(fracsym::error_grid(solution->sol, exact, {a, value}, n), out);
    return FRACSYM_OK;
  });
}

fracsym_status fracsym_solution_side_conditions(
    const fracsym_solution* solution, int n, fracsym_side_conditions* out) {
  if (!solution || !out) return invalid("null argument");
  return guarded([&] {
    const auto r = fracsym::check_side_conditions(solution->sol, n);
    *out = {r.initial, r.x_zero, r.y_zero, r.dx_at_x_zero, r.dy_at_y_zero};
    return FRACSYM_OK;
  });
}

fracsym_status fracsym_solution_matrix(const fracsym_solution* solution,
                                       fracsym_matrix_kind kind, size_t* rows,
                                       size_t* cols, double* data,
                                       size_t capacity) {
  if (!solution || !rows || !cols) return invalid("null argument");
  const auto& s = solution->sol;
  const fracsym::Matrix* m = nullptr;
  switch (kind) {
    case FRACSYM_MATRIX_P_ALPHA: m = &s.matrices().p_alpha; break;
    case FRACSYM_MATRIX_D_BETA: m = &s.matrices().d_beta; break;
    case FRACSYM_MATRIX_H_X: m = &s.matrices().h_x; break;
    case FRACSYM_MATRIX_H_Y: m = &s.matrices().h_y; break;
    case FRACSYM_MATRIX_K: m = &s.k(); break;
    case FRACSYM_MATRIX_F: m = &s.f_coeffs(); break;
    case FRACSYM_MATRIX_U: m = &s.u_coeffs(); break;
  }
  if (!m) return invalid("unknown matrix kind");
  *rows = static_cast<size_t>(m->rows());
  *cols = static_cast<size_t>(m->cols());
  if (!data) return FRACSYM_OK;
  if (capacity < *rows * *cols) {
    last_error = "buffer too small";
    return FRACSYM_ERR_BUFFER_TOO_SMALL;
  }
  copy_row_major(*m, data);
  return FRACSYM_OK;
}

fracsym_status fracsym_classify(const double a[5], double alpha, double beta,
                                double eps, fracsym_canonical_form* out) {
  if (!a || !out) return invalid("null argument");
  return guarded([&] {
    const fracsym::lie::Algebra algebra(alpha, beta);
    const auto form = fracsym::lie::classify(algebra.element(coeffs(a)), eps);
    fracsym_canonical_form r{};
    r.case_id = form.case_id;
    for (int i = 0; i < 5; ++i) r.representative[i] = form.representative.a[i];
    r.step_count = static_cast<int>(form.word.steps.size());
    for (int k = 0; k < r.step_count && k < 5; ++k) {
      r.step_generator[k] = form.word.steps[k].first;
      r.step_parameter[k] = form.word.steps[k].second;
    }
    r.lambda = form.word.lambda;
    r.sign = form.word.sign;
    *out = r;
    return FRACSYM_OK;
  });
}

fracsym_status fracsym_commutator(const double a[5], const double b[5],
                                  double alpha, double beta, double out[5]) {
  if (!a || !b || !out) return invalid("null argument");
  return guarded([&] {
    const fracsym::lie::Algebra algebra(alpha, beta);
    const auto c = algebra.commutator(algebra.element(coeffs(a)),
                                      algebra.element(coeffs(b)));
    for (int i = 0; i < 5; ++i) out[i] = c.a[i];
    return FRACSYM_OK;
  });
}

fracsym_status fracsym_adjoint_matrix(int i, double s, double alpha,
                                      double beta, double out[25]) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    copy_row_major(fracsym::lie::Algebra(alpha, beta).adjoint(i, s), out);
    return FRACSYM_OK;
  });
}

fracsym_status fracsym_lie_series_matrix(int i, double s, double alpha,
                                         double beta, int terms,
                                         double out[25]) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    copy_row_major(fracsym::lie::Algebra(alpha, beta).lie_series(i, s, terms),
                   out);
    return FRACSYM_OK;
  });
}

fracsym_status fracsym_verify_time_identity(double p, double q, double alpha,
                                            double beta, double t, double x,
                                            double y, double tol,
                                            double out[4]) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    identity_out(
        fracsym::ek::verify_time_identity(p, q, alpha, beta, t, x, y, tol),
        out);
    return FRACSYM_OK;
  });
}

fracsym_status fracsym_verify_space_identity(double p, double q, double alpha,
                                             double beta, double t, double x,
                                             double y, double tol,
                                             double out[4]) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    identity_out(
        fracsym::ek::verify_space_identity(p, q, alpha, beta, t, x, y, tol),
        out);
    return FRACSYM_OK;
  });
}

fracsym_status fracsym_verify_adjoint(double alpha, double beta, double tol,
                                      int corrupt, fracsym_report** out) {
  if (!out) return invalid("null output handle");
  *out = nullptr;
  return guarded([&] {
    const auto algebra =
        corrupt ? fracsym::lie::Algebra::corrupted(alpha, beta, 1e-3)
                : fracsym::lie::Algebra(alpha, beta);
    *out = new fracsym_report{fracsym::lie::run_adjoint_checks(algebra, tol)};
    return FRACSYM_OK;
  });
}

fracsym_status fracsym_verify_reduction(double tol, fracsym_report** out) {
  if (!out) return invalid("null output handle");
  *out = nullptr;
  return guarded([&] {
    *out = new fracsym_report{fracsym::ek::run_reduction_checks(tol)};
    return FRACSYM_OK;
  });
}

size_t fracsym_report_size(const fracsym_report* report) {
  return report ? report->rows.size() : 0;
}

fracsym_status fracsym_report_row(const fracsym_report* report, size_t index,
                                  fracsym_check_row* out) {
  if (!report || !out) return invalid("null argument");
  if (index >= report->rows.size()) return invalid("row index out of range");
  const auto& r = report->rows[index];
  *out = {r.label.c_str(), r.lhs,  r.rhs, r.diff,
          r.tol,           r.pass, r.note.c_str()};
  return FRACSYM_OK;
}

int fracsym_report_all_pass(const fracsym_report* report) {
  return report && fracsym::all_pass(report->rows) ? 1 : 0;
}

void fracsym_report_free(fracsym_report* report) { delete report; }

}  // extern "C"

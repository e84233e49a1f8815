#include "fracsym/spectral_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "fracsym/error.hpp"

namespace fracsym {
namespace {

void require_cube(double t, double x, double y) {
  auto inside = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!inside(t) || !inside(x) || !inside(y)) {
    fail(ErrorCode::domain, "evaluate: point outside the unit cube");
  }
}

double grid_coord(int i, int n) { return static_cast<double>(i) / (n - 1); }

void require_grid(int n) {
  if (n < 2) fail(ErrorCode::domain, "grid: needs at least 2 points per axis");
}

// (t, x, y) for a slice point.
std::array<double, 3> slice_point(const Slice& slice, double c1, double c2) {
  switch (slice.axis) {
    case Axis::t: return {slice.value, c1, c2};
    case Axis::x: return {c1, slice.value, c2};
    case Axis::y: return {c1, c2, slice.value};
  }
  return {0.0, 0.0, 0.0};
}

}  // namespace

void ProblemSpec::validate() const {
  if (alpha.value() > 1.0) {
    fail(ErrorCode::domain, "problem: alpha must lie in (0, 1]");
  }
  if (beta.value() > 2.0) {
    fail(ErrorCode::domain, "problem: beta must lie in (0, 2]");
  }
  if (degree < 1 || degree > kMaxBernsteinDegree) {
    fail(ErrorCode::domain, "problem: M must lie in [1, " +
                                std::to_string(kMaxBernsteinDegree) + "]");
  }
  for (const auto& term : f.terms()) {
    if (term.p < 0.0 || term.q < 0.0 || term.r < 0.0) {
      fail(ErrorCode::domain, "problem: f exponents must be nonnegative");
    }
  }
}

SpectralSolution::SpectralSolution(const ProblemSpec& spec,
                                   OperationalMatrixSet matrices,
                                   Matrix f_coeffs, Matrix k)
    : basis_(spec.degree),
      matrices_(std::move(matrices)),
      f_coeffs_(std::move(f_coeffs)),
      k_(std::move(k)) {
  u_coeffs_ = matrices_.p_alpha.transpose() * k_;
}

double SpectralSolution::residual() const {
  const Matrix h = matrices_.h_x + matrices_.h_y;
  return linalg::max_abs(k_ - u_coeffs_ * h - f_coeffs_);
}

double SpectralSolution::evaluate(double t, double x, double y) const {
  require_cube(t, x, y);
  const Vector tensor = linalg::kron(basis_.eval(x), basis_.eval(y));
  return basis_.eval(t).dot(u_coeffs_ * tensor);
}

double SpectralSolution::derivative_x(double t, double x, double y) const {
  require_cube(t, x, y);
  const Vector tensor = linalg::kron(basis_.eval_derivative(x, 1), basis_.eval(y));
  return basis_.eval(t).dot(u_coeffs_ * tensor);
}

double SpectralSolution::derivative_y(double t, double x, double y) const {
  require_cube(t, x, y);
  const Vector tensor = linalg::kron(basis_.eval(x), basis_.eval_derivative(y, 1));
  return basis_.eval(t).dot(u_coeffs_ * tensor);
}

Matrix project_f(const ProblemSpec& spec, const BernsteinBasis& basis) {
  // B is a sum of rank-one terms c·m_p (m_q ⊗ m_r)ᵀ, so
  // F = Σ c·(gram⁻¹m_p)·(gram⁻¹m_q ⊗ gram⁻¹m_r)ᵀ.
  const Eigen::Index size = basis.size();
  Matrix f = Matrix::Zero(size, size * size);
  for (const auto& term : spec.f.terms()) {
    const Vector a_t = basis.project(basis.monomial_moments(term.p));
    const Vector a_x = basis.project(basis.monomial_moments(term.q));
    const Vector a_y = basis.project(basis.monomial_moments(term.r));
    const Vector a_xy = linalg::kron(a_x, a_y);
    f += term.c * a_t * a_xy.transpose();
  }
  return f;
}

SpectralSolution solve(const ProblemSpec& spec) {
  spec.validate();
  const BernsteinBasis basis(spec.degree);
  OperationalMatrixSet matrices = build_2d_set(basis, spec.alpha, spec.beta);
  Matrix f = project_f(spec, basis);

  const Matrix h = matrices.h_x + matrices.h_y;
  const Matrix pt = matrices.p_alpha.transpose();
  const Matrix kron_term = linalg::kron(h.transpose(), pt);
  const Matrix system =
      Matrix::Identity(kron_term.rows(), kron_term.cols()) - kron_term;

  Vector k_vec;
  try {
    k_vec = linalg::lu_solve(system, linalg::vec(f));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::singular) throw;
    fail(ErrorCode::singular,
         "solve: resonant parameters (alpha " + std::to_string(spec.alpha.value()) +
             ", beta " + std::to_string(spec.beta.value()) + ", M " +
             std::to_string(spec.degree) + "): " + e.what());
  }
  Matrix k = linalg::unvec(k_vec, f.rows(), f.cols());
  return SpectralSolution(spec, std::move(matrices), std::move(f), std::move(k));
}

std::pair<Axis, Axis> slice_axes(Axis fixed) {
  switch (fixed) {
    case Axis::t: return {Axis::x, Axis::y};
    case Axis::x: return {Axis::t, Axis::y};
    case Axis::y: return {Axis::t, Axis::x};
  }
  return {Axis::x, Axis::y};
}

std::vector<GridValue> solution_grid(const SpectralSolution& sol,
                                     const Slice& slice, int n) {
  require_grid(n);
  if (!(slice.value >= 0.0 && slice.value <= 1.0)) {
    fail(ErrorCode::domain, "grid: slice value must lie in [0, 1]");
  }
  std::vector<GridValue> rows;
  rows.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double c1 = grid_coord(i, n), c2 = grid_coord(j, n);
      const auto [t, x, y] = slice_point(slice, c1, c2);
      rows.push_back({c1, c2, sol.evaluate(t, x, y)});
    }
  }
  return rows;
}

std::vector<GridValue> error_grid(const SpectralSolution& sol,
                                  const PolySum3& exact, const Slice& slice,
                                  int n) {
  std::vector<GridValue> rows = solution_grid(sol, slice, n);
  for (auto& row : rows) {
    const auto [t, x, y] = slice_point(slice, row.coord1, row.coord2);
    row.value = std::abs(row.value - exact.evaluate(t, x, y));
  }
  return rows;
}

SideConditionReport check_side_conditions(const SpectralSolution& sol, int n) {
  require_grid(n);
  SideConditionReport report;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double a = grid_coord(i, n), b = grid_coord(j, n);
      report.initial = std::max(report.initial, std::abs(sol.evaluate(0.0, a, b)));
      report.x_zero = std::max(report.x_zero, std::abs(sol.evaluate(a, 0.0, b)));
      report.y_zero = std::max(report.y_zero, std::abs(sol.evaluate(a, b, 0.0)));
      report.dx_at_x_zero =
          std::max(report.dx_at_x_zero, std::abs(sol.derivative_x(a, 0.0, b)));
      report.dy_at_y_zero =
          std::max(report.dy_at_y_zero, std::abs(sol.derivative_y(a, b, 0.0)));
    }
  }
  return report;
}

}  // namespace fracsym

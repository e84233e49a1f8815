#pragma once

// Bernstein operational-matrix solver for
//   ᶜD^α_t u = ᶜD^β_x u + ᶜD^β_y u + f(t,x,y),  (t,x,y) ∈ [0,1]³,
// with zero initial data. The unknown K represents ᶜD^α_t u ≈ ψ(t)ᵀKψ̂(x,y);
// then u ≈ ψ(t)ᵀPᵅᵀKψ̂(x,y) and K solves
//   K − PᵅᵀK·H_x − PᵅᵀK·H_y = F.

#include <vector>

#include "fracsym/operational_matrices.hpp"
#include "fracsym/polysum.hpp"

namespace fracsym {

struct ProblemSpec {
  FracOrder alpha{1.0};
  FracOrder beta{2.0};
  int degree = 4;
  PolySum3 f;

  /// 0 < α ≤ 1, 0 < β ≤ 2, 1 ≤ M ≤ 12, nonnegative exponents in f.
  void validate() const;
};

class SpectralSolution {
 public:
  SpectralSolution(const ProblemSpec& spec, OperationalMatrixSet matrices,
                   Matrix f_coeffs, Matrix k);

  const FracOrder& alpha() const noexcept { return matrices_.alpha; }
  const FracOrder& beta() const noexcept { return matrices_.beta; }
  int degree() const noexcept { return basis_.degree(); }
  const BernsteinBasis& basis() const noexcept { return basis_; }
  const OperationalMatrixSet& matrices() const noexcept { return matrices_; }

  const Matrix& k() const noexcept { return k_; }
  const Matrix& f_coeffs() const noexcept { return f_coeffs_; }
  /// PᵅᵀK: u(t,x,y) = ψ(t)ᵀ·u_coeffs·ψ̂(x,y).
  const Matrix& u_coeffs() const noexcept { return u_coeffs_; }

  /// ‖K − PᵅᵀK(H_x + H_y) − F‖_max.
  double residual() const;

  /// u at a point of the unit cube.
  double evaluate(double t, double x, double y) const;

  /// ∂u/∂x and ∂u/∂y at a point of the unit cube.
  double derivative_x(double t, double x, double y) const;
  double derivative_y(double t, double x, double y) const;

 private:
  BernsteinBasis basis_;
  OperationalMatrixSet matrices_;
  Matrix f_coeffs_;
  Matrix k_;
  Matrix u_coeffs_;
};

/// F with f ≈ ψ(t)ᵀFψ̂(x,y): F = gram⁻¹·B·(gram⊗gram)⁻¹ from exact moments.
Matrix project_f(const ProblemSpec& spec, const BernsteinBasis& basis);

/// Solves the vectorized system (I − (H_x+H_y)ᵀ ⊗ Pᵅᵀ)·vec(K) = vec(F).
/// Throws ErrorCode::singular (with a condition estimate) for resonant
/// (α, β, M).
SpectralSolution solve(const ProblemSpec& spec);

struct Slice {
  Axis axis = Axis::t;
  double value = 0.5;
};

struct GridValue {
  double coord1;
  double coord2;
  double value;
};

/// Remaining axes of a slice in (coord1, coord2) order: t → (x,y),
/// x → (t,y), y → (t,x).
std::pair<Axis, Axis> slice_axes(Axis fixed);

/// u on an n×n uniform grid of the slice, row-major (coord1 outer).
std::vector<GridValue> solution_grid(const SpectralSolution& sol,
                                     const Slice& slice, int n);

/// |u − exact| on an n×n uniform grid of the slice, row-major.
std::vector<GridValue> error_grid(const SpectralSolution& sol,
                                  const PolySum3& exact, const Slice& slice,
                                  int n);

/// Largest violation of each side condition on an n-point grid per axis:
/// u(0,x,y), u(t,0,y), u(t,x,0), ∂u/∂x(t,0,y), ∂u/∂y(t,x,0).
struct SideConditionReport {
  double initial = 0.0;
  double x_zero = 0.0;
  double y_zero = 0.0;
  double dx_at_x_zero = 0.0;
  double dy_at_y_zero = 0.0;
};

SideConditionReport check_side_conditions(const SpectralSolution& sol, int n);

}  // namespace fracsym

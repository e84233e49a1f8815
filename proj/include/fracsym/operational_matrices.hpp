#pragma once

// Operational matrices on the Bernstein basis ψ(t) and on the tensor basis
// ψ̂(x,y) = ψ(x) ⊗ ψ(y), tensor index (i, j) ↦ i·(M+1) + j.
//
// Convention: an operator L is represented by the matrix A with
// L[ψ] ≈ A·ψ, i.e. row i holds the projection coefficients of L[B_i]. For a
// coefficient vector c, L[ψᵀc] ≈ ψᵀAᵀc.

#include "fracsym/bernstein.hpp"
#include "fracsym/fractional_ops.hpp"

namespace fracsym {

inline constexpr Eigen::Index kMaxTensorSize = 169;

/// Fractional integration matrix Pᵅ, 0 < α ≤ 1.
Matrix build_p_alpha(const BernsteinBasis& basis, const FracOrder& alpha);

/// Caputo derivative matrix D_β, 0 < β ≤ 2.
Matrix build_d_beta(const BernsteinBasis& basis, const FracOrder& beta);

struct OperationalMatrixSet {
  FracOrder alpha;
  FracOrder beta;
  int degree;
  Matrix p_alpha;  // (M+1)×(M+1)
  Matrix d_beta;   // (M+1)×(M+1)
  Matrix h_x;      // kron(D_β, I), (M+1)²×(M+1)²
  Matrix h_y;      // kron(I, D_β)
};

OperationalMatrixSet build_2d_set(const BernsteinBasis& basis,
                                  const FracOrder& alpha,
                                  const FracOrder& beta);

/// Permutation Π with Π·(a ⊗ b) = b ⊗ a for vectors of length M+1.
Matrix axis_swap_permutation(int degree);

}  // namespace fracsym

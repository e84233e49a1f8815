#pragma once

// Bernstein basis B_{i,M}(t) = C(M,i) t^i (1−t)^(M−i) on [0, 1].

#include "fracsym/linalg.hpp"

namespace fracsym {

inline constexpr int kMaxBernsteinDegree = 12;

/// ∫₀¹ t^μ B_{j,M}(t) dt = C(M,j)·B(μ+j+1, M−j+1), μ > −1.
double monomial_moment(int degree, int j, double mu);

class BernsteinBasis {
 public:
  /// 0 ≤ degree ≤ kMaxBernsteinDegree.
  explicit BernsteinBasis(int degree);

  int degree() const noexcept { return degree_; }
  Eigen::Index size() const noexcept { return degree_ + 1; }

  /// conv(i, k): coefficient of t^k in B_{i,M}.
  const Matrix& conversion() const noexcept { return conversion_; }

  /// gram(i, j) = ∫₀¹ B_i B_j, from the closed form.
  const Matrix& gram() const noexcept { return gram_; }

  /// ψ(t) = (B_{0,M}(t), …, B_{M,M}(t)); t ∈ [0, 1].
  Vector eval(double t) const;

  /// Componentwise order-th derivative of ψ at t ∈ [0, 1].
  Vector eval_derivative(double t, int order) const;

  /// L2-optimal coefficients gram⁻¹·b from moments b[j] = ∫ g B_j.
  Vector project(const Vector& moments) const;

  /// Column-wise projection of a moment matrix.
  Matrix project(const Matrix& moments) const;

  /// Moments of t^μ against every basis member.
  Vector monomial_moments(double mu) const;

 private:
  int degree_;
  Matrix conversion_;
  Matrix gram_;
};

}  // namespace fracsym

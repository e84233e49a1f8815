#include "fracsym/operational_matrices.hpp"

#include <string>

#include "fracsym/error.hpp"

namespace fracsym {
namespace {

// Projection of the image of every basis member under a power rule. The
// image of t^k is rule(k) = coef·t^exponent; rows with coef 0 drop out.
template <typename PowerRule>
Matrix project_images(const BernsteinBasis& basis, PowerRule rule) {
  const Eigen::Index size = basis.size();
  const Matrix& conv = basis.conversion();
  Matrix moments = Matrix::Zero(size, size);  // column i: moments of L[B_i]
  for (Eigen::Index k = 0; k < size; ++k) {
    const PowerTerm image = rule(static_cast<int>(k));
    if (image.coef == 0.0) continue;
    const Vector m = basis.monomial_moments(image.exponent);
    for (Eigen::Index i = 0; i <= k; ++i) {
      if (conv(i, k) != 0.0) moments.col(i) += conv(i, k) * image.coef * m;
    }
  }
  return basis.project(moments).transpose();
}

}  // namespace

Matrix build_p_alpha(const BernsteinBasis& basis, const FracOrder& alpha) {
  if (alpha.value() > 1.0) {
    fail(ErrorCode::domain, "build_p_alpha: requires 0 < alpha <= 1");
  }
  return project_images(basis, [&](int k) {
    return rl_integral_power(k, alpha.value());
  });
}

Matrix build_d_beta(const BernsteinBasis& basis, const FracOrder& beta) {
  if (beta.value() > 2.0) {
    fail(ErrorCode::domain, "build_d_beta: requires 0 < beta <= 2");
  }
  return project_images(basis, [&](int k) {
    return caputo_derivative_power(k, beta);
  });
}

OperationalMatrixSet build_2d_set(const BernsteinBasis& basis,
                                  const FracOrder& alpha,
                                  const FracOrder& beta) {
  const Eigen::Index size = basis.size();
  if (size * size > kMaxTensorSize) {
    fail(ErrorCode::size_limit, "build_2d_set: (M+1)^2 exceeds " +
                                    std::to_string(kMaxTensorSize));
  }
  Matrix p = build_p_alpha(basis, alpha);
  Matrix d = build_d_beta(basis, beta);
  const Matrix identity = Matrix::Identity(size, size);
  Matrix h_x = linalg::kron(d, identity);
  Matrix h_y = linalg::kron(identity, d);
  return {alpha, beta, basis.degree(), std::move(p), std::move(d),
          std::move(h_x), std::move(h_y)};
}

Matrix axis_swap_permutation(int degree) {
  const Eigen::Index size = degree + 1;
  Matrix perm = Matrix::Zero(size * size, size * size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) perm(j * size + i, i * size + j) = 1.0;
  }
  return perm;
}

}  // namespace fracsym

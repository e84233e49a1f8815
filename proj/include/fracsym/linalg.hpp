#pragma once

// Dense real linear algebra. Storage is Eigen's column-major layout, and
// vec() stacks columns, so vec(A·X·B) = (Bᵀ ⊗ A)·vec(X).

#include <cstddef>

#include <Eigen/Dense>

namespace fracsym {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

namespace linalg {

/// Upper bound on rows·cols for kron() results.
inline constexpr std::size_t kMaxKronEntries = std::size_t{1} << 23;

/// Solve A·x = b by LU with partial pivoting. Throws ErrorCode::singular when
/// a pivot magnitude falls below 1e-14·‖A‖∞; the message carries a condition
/// estimate (ratio of extreme pivot magnitudes).
Vector lu_solve(const Matrix& a, const Vector& b);

/// Multiple right-hand sides, same contract as lu_solve.
Matrix lu_solve(const Matrix& a, const Matrix& b);

Matrix inverse(const Matrix& a);

/// Kronecker product, result[(i·p+k),(j·q+l)] = a[i,j]·b[k,l].
Matrix kron(const Matrix& a, const Matrix& b);

/// exp(s·A) by Padé scaling and squaring. Square matrices with n ≤ 16.
Matrix expm(const Matrix& a, double s = 1.0);

/// Column-stacking vectorization and its inverse.
Vector vec(const Matrix& a);
Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols);

double max_abs(const Matrix& a);
double norm_inf(const Matrix& a);

/// Throws ErrorCode::domain if any entry is NaN or infinite.
void require_finite(const Matrix& a, const char* context);

}  // namespace linalg
}  // namespace fracsym

#include "fracsym/linalg.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "fracsym/error.hpp"

namespace fracsym::linalg {
namespace {

constexpr double kPivotThreshold = 1e-14;
constexpr Eigen::Index kMaxExpmSize = 16;

Eigen::PartialPivLU<Matrix> factor(const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    fail(ErrorCode::domain, "lu: matrix must be square and nonempty");
  }
  require_finite(a, "lu");
  Eigen::PartialPivLU<Matrix> lu(a);
  const double scale = norm_inf(a);
  const auto pivots = lu.matrixLU().diagonal().cwiseAbs();
  const double smallest = pivots.minCoeff();
  if (scale == 0.0 || smallest < kPivotThreshold * scale) {
    std::ostringstream msg;
    msg << "lu: matrix is singular to working precision (min pivot "
        << smallest << ", ||A||inf " << scale << ", condition estimate ";
    if (smallest > 0.0) {
      msg << pivots.maxCoeff() / smallest;
    } else {
      msg << "inf";
    }
    msg << ")";
    fail(ErrorCode::singular, msg.str());
  }
  return lu;
}

}  // namespace

Vector lu_solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) fail(ErrorCode::domain, "lu_solve: size mismatch");
  return factor(a).solve(b);
}

Matrix lu_solve(const Matrix& a, const Matrix& b) {
  if (b.rows() != a.rows()) fail(ErrorCode::domain, "lu_solve: size mismatch");
  return factor(a).solve(b);
}

Matrix inverse(const Matrix& a) { return factor(a).inverse(); }

Matrix kron(const Matrix& a, const Matrix& b) {
  const auto rows = static_cast<std::size_t>(a.rows() * b.rows());
  const auto cols = static_cast<std::size_t>(a.cols() * b.cols());
  if (rows != 0 && cols > kMaxKronEntries / rows) {
    fail(ErrorCode::size_limit, "kron: result of " + std::to_string(rows) +
                                    "x" + std::to_string(cols) +
                                    " exceeds the entry cap");
  }
  return Eigen::kroneckerProduct(a, b).eval();
}

Matrix expm(const Matrix& a, double s) {
  if (a.rows() != a.cols()) fail(ErrorCode::domain, "expm: matrix must be square");
  if (a.rows() > kMaxExpmSize) {
    fail(ErrorCode::size_limit, "expm: supports n <= 16");
  }
  require_finite(a, "expm");
  const Matrix scaled = s * a;
  return scaled.exp();
}

Vector vec(const Matrix& a) {
  return Eigen::Map<const Vector>(a.data(), a.size());
}

Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) fail(ErrorCode::domain, "unvec: size mismatch");
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

double max_abs(const Matrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double norm_inf(const Matrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().rowwise().sum().maxCoeff();
}

void require_finite(const Matrix& a, const char* context) {
  if (!a.allFinite()) {
    fail(ErrorCode::domain, std::string(context) + ": non-finite entry");
  }
}

}  // namespace fracsym::linalg

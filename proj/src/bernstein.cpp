#include "fracsym/bernstein.hpp"

#include <cmath>
#include <string>

#include "fracsym/error.hpp"
#include "fracsym/special_functions.hpp"

namespace fracsym {
namespace {

void require_unit_interval(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    fail(ErrorCode::domain,
         "bernstein: t must lie in [0, 1], got " + std::to_string(t));
  }
}

// Values of all degree-m basis members at t, with the convention 0^0 = 1.
Vector basis_values(int m, double t) {
  Vector values(m + 1);
  for (int i = 0; i <= m; ++i) {
    values(i) = binomial(m, i) * std::pow(t, i) * std::pow(1.0 - t, m - i);
  }
  return values;
}

}  // namespace

double monomial_moment(int degree, int j, double mu) {
  if (degree < 0 || j < 0 || j > degree) {
    fail(ErrorCode::domain, "monomial_moment: index out of range");
  }
  if (!(mu > -1.0)) {
    fail(ErrorCode::domain, "monomial_moment: requires mu > -1, got " +
                                std::to_string(mu));
  }
  // B(a, n) for integer n as (n−1)!/(a(a+1)…(a+n−1)): exact up to rounding,
  // which matters once the conversion sums start cancelling.
  const double a = mu + j + 1.0;
  double value = binomial(degree, j) / a;
  for (int k = 1; k <= degree - j; ++k) value *= k / (a + k);
  return value;
}

BernsteinBasis::BernsteinBasis(int degree) : degree_(degree) {
  if (degree < 0 || degree > kMaxBernsteinDegree) {
    fail(ErrorCode::domain, "BernsteinBasis: degree must be in [0, " +
                                std::to_string(kMaxBernsteinDegree) + "]");
  }
  const int m = degree;
  conversion_ = Matrix::Zero(m + 1, m + 1);
  gram_ = Matrix::Zero(m + 1, m + 1);
  for (int i = 0; i <= m; ++i) {
    for (int k = i; k <= m; ++k) {
      const double sign = ((k - i) % 2 == 0) ? 1.0 : -1.0;
      conversion_(i, k) = sign * binomial(m, i) * binomial(m - i, k - i);
    }
    for (int j = 0; j <= m; ++j) {
      gram_(i, j) = binomial(m, i) * binomial(m, j) /
                    ((2.0 * m + 1.0) * binomial(2 * m, i + j));
    }
  }
}

Vector BernsteinBasis::eval(double t) const {
  require_unit_interval(t);
  return basis_values(degree_, t);
}

Vector BernsteinBasis::eval_derivative(double t, int order) const {
  require_unit_interval(t);
  if (order < 0) fail(ErrorCode::domain, "eval_derivative: negative order");
  if (order == 0) return eval(t);
  Vector result = Vector::Zero(size());
  if (order > degree_) return result;
  // B^{(r)}_{i,M} = M!/(M−r)! Σ_k (−1)^(r−k) C(r,k) B_{i−k,M−r}.
  const Vector lower = basis_values(degree_ - order, t);
  double falling = 1.0;
  for (int k = 0; k < order; ++k) falling *= degree_ - k;
  for (int i = 0; i <= degree_; ++i) {
    double sum = 0.0;
    for (int k = 0; k <= order; ++k) {
      const int index = i - k;
      if (index < 0 || index > degree_ - order) continue;
      const double sign = ((order - k) % 2 == 0) ? 1.0 : -1.0;
      sum += sign * binomial(order, k) * lower(index);
    }
    result(i) = falling * sum;
  }
  return result;
}

Vector BernsteinBasis::project(const Vector& moments) const {
  if (moments.size() != size()) {
    fail(ErrorCode::domain, "project: moment vector has wrong length");
  }
  return linalg::lu_solve(gram_, moments);
}

Matrix BernsteinBasis::project(const Matrix& moments) const {
  if (moments.rows() != size()) {
    fail(ErrorCode::domain, "project: moment matrix has wrong row count");
  }
  return linalg::lu_solve(gram_, moments);
}

Vector BernsteinBasis::monomial_moments(double mu) const {
  Vector b(size());
  for (int j = 0; j <= degree_; ++j) b(j) = monomial_moment(degree_, j, mu);
  return b;
}

}  // namespace fracsym

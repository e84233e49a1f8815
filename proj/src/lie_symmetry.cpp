#include "fracsym/lie_symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "fracsym/error.hpp"

namespace fracsym::lie {
namespace {

constexpr double kAdjointDomain = 50.0;

void require_generator(int i) {
  if (i < 1 || i > kDimension) {
    fail(ErrorCode::domain, "lie: generator index must be in 1..5, got " +
                                std::to_string(i));
  }
}

Vector to_vector(const Coefficients& a) {
  return Eigen::Map<const Vector>(a.data(), kDimension);
}

Coefficients to_coefficients(const Vector& v) {
  Coefficients a{};
  for (int k = 0; k < kDimension; ++k) a[static_cast<std::size_t>(k)] = v(k);
  return a;
}

// Table 1 read directly: the expected coefficient of X_k in [X_i, X_j].
double table_entry(int i, int j, int k, double alpha, double beta) {
  auto weight = [&](int m) { return m == 1 ? alpha : beta; };
  if (j == 5 && i <= 3 && k == i) return weight(i);
  if (i == 5 && j <= 3 && k == j) return -weight(j);
  return 0.0;
}

std::string label(const char* kind, int i, double s) {
  std::ostringstream out;
  out << kind << " i=" << i << " s=" << s;
  return out.str();
}

}  // namespace

Algebra::Algebra(double alpha, double beta, bool) : alpha_(alpha), beta_(beta) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) ||
      !std::isfinite(beta)) {
    fail(ErrorCode::domain, "lie: alpha and beta must be positive");
  }
}

Algebra::Algebra(double alpha, double beta) : Algebra(alpha, beta, true) {
  const double weight[] = {alpha, beta, beta};
  for (int i = 1; i <= 3; ++i) {
    constants_[index(i, 5, i)] = weight[i - 1];
    constants_[index(5, i, i)] = -weight[i - 1];
  }
}

Algebra Algebra::corrupted(double alpha, double beta, double epsilon) {
  Algebra algebra(alpha, beta);
  algebra.constants_[algebra.index(1, 2, 5)] = epsilon;
  algebra.constants_[algebra.index(2, 1, 5)] = -epsilon;
  return algebra;
}

std::size_t Algebra::index(int i, int j, int k) const {
  return static_cast<std::size_t>(((i - 1) * kDimension + (j - 1)) * kDimension +
                                  (k - 1));
}

double Algebra::structure_constant(int i, int j, int k) const {
  require_generator(i);
  require_generator(j);
  require_generator(k);
  return constants_[index(i, j, k)];
}

LieElement Algebra::commutator(const LieElement& x, const LieElement& y) const {
  if (x.alpha != alpha_ || x.beta != beta_ || y.alpha != alpha_ ||
      y.beta != beta_) {
    fail(ErrorCode::parameter_mismatch,
         "commutator: elements belong to a different (alpha, beta)");
  }
  LieElement result = element({});
  for (int i = 1; i <= kDimension; ++i) {
    const double xi = x.a[static_cast<std::size_t>(i - 1)];
    if (xi == 0.0) continue;
    for (int j = 1; j <= kDimension; ++j) {
      const double yj = y.a[static_cast<std::size_t>(j - 1)];
      if (yj == 0.0) continue;
      for (int k = 1; k <= kDimension; ++k) {
        result.a[static_cast<std::size_t>(k - 1)] +=
            xi * yj * constants_[index(i, j, k)];
      }
    }
  }
  return result;
}

Matrix Algebra::ad_matrix(int i) const {
  require_generator(i);
  Matrix ad = Matrix::Zero(kDimension, kDimension);
  for (int j = 1; j <= kDimension; ++j) {
    for (int k = 1; k <= kDimension; ++k) ad(k - 1, j - 1) = constants_[index(i, j, k)];
  }
  return ad;
}

Matrix Algebra::adjoint(int i, double s) const {
  if (!(std::abs(s) * std::max(alpha_, beta_) <= kAdjointDomain)) {
    fail(ErrorCode::domain, "adjoint: |s|*max(alpha, beta) must not exceed 50");
  }
  return linalg::expm(ad_matrix(i), -s);
}

Matrix Algebra::lie_series(int i, double s, int terms) const {
  const Matrix step = -s * ad_matrix(i);
  Matrix term = Matrix::Identity(kDimension, kDimension);
  Matrix sum = term;
  for (int m = 1; m < terms; ++m) {
    term = step * term / static_cast<double>(m);
    sum += term;
  }
  return sum;
}

Matrix Algebra::coefficient_action(int i, double s) const {
  // Nilpotent ad (X₁…X₄ in the table) makes the series terminate; use it
  // exactly so large reduction parameters lose no accuracy.
  const Matrix ad = ad_matrix(i);
  Matrix power = ad;
  for (int m = 1; m <= kDimension; ++m) {
    if (linalg::max_abs(power) == 0.0) return lie_series(i, s, m).transpose();
    power = power * ad;
  }
  return adjoint(i, s).transpose();
}

LieElement commutator(const LieElement& x, const LieElement& y) {
  if (x.alpha != y.alpha || x.beta != y.beta) {
    fail(ErrorCode::parameter_mismatch,
         "commutator: elements belong to different (alpha, beta)");
  }
  return Algebra(x.alpha, x.beta).commutator(x, y);
}

Matrix ad_matrix(int i, double alpha, double beta) {
  return Algebra(alpha, beta).ad_matrix(i);
}

Matrix adjoint(int i, double s, double alpha, double beta) {
  return Algebra(alpha, beta).adjoint(i, s);
}

Coefficients apply_word(const Algebra& algebra, const GroupWord& word,
                        const Coefficients& a) {
  Vector v = to_vector(a);
  for (const auto& [generator, s] : word.steps) {
    v = algebra.coefficient_action(generator, s) * v;
  }
  v *= word.sign * word.lambda;
  return to_coefficients(v);
}

int case_for(const Coefficients& a, double eps) {
  const bool n1 = std::abs(a[0]) > eps;
  const bool n2 = std::abs(a[1]) > eps;
  const bool n3 = std::abs(a[2]) > eps;
  if (n1) {
    if (n2) return n3 ? 8 : 7;
    return n3 ? 6 : 1;
  }
  if (n2) return n3 ? 5 : 3;
  return n3 ? 2 : 4;
}

CanonicalForm classify(const LieElement& x, double eps) {
  const auto& a = x.a;
  if (std::all_of(a.begin(), a.end(), [&](double v) { return std::abs(v) <= eps; })) {
    fail(ErrorCode::zero_element, "classify: element is zero within eps");
  }
  const Algebra algebra(x.alpha, x.beta);
  const double alpha = x.alpha, beta = x.beta;
  const double a1 = a[0], a2 = a[1], a3 = a[2], a5 = a[4];

  CanonicalForm form;
  form.case_id = case_for(a, eps);
  GroupWord& word = form.word;
  double lead = 1.0;
  switch (form.case_id) {
    case 1:
      word.steps = {{1, a5 / (alpha * a1)}};
      lead = a1;
      break;
    case 2:
      word.steps = {{3, a5 / (beta * a3)}};
      lead = a3;
      break;
    case 3:
      word.steps = {{2, a5 / (beta * a2)}};
      lead = a2;
      break;
    case 4:
      break;
    case 5:
      word.steps = {{2, a5 / (beta * a2)}, {3, -a5 / (beta * a3)}};
      lead = a2;
      break;
    case 6:
      word.steps = {{1, a5 / (alpha * a1)}, {3, -a5 / (beta * a3)}};
      lead = a1;
      break;
    case 7:
    case 8:
      word.steps = {{1, a5 / (alpha * a1)}, {2, -a5 / (beta * a2)}};
      lead = a1;
      break;
    default:
      break;
  }
  word.lambda = 1.0 / std::abs(lead);
  word.sign = lead < 0.0 ? -1.0 : 1.0;
  form.representative = algebra.element(apply_word(algebra, word, a));
  return form;
}

std::vector<CheckRow> run_adjoint_checks(const Algebra& algebra,
                                         double series_tol,
                                         std::uint64_t seed) {
  std::vector<CheckRow> rows;
  const double alpha = algebra.alpha(), beta = algebra.beta();

  for (int i = 1; i <= kDimension; ++i) {
    for (int j = 1; j <= kDimension; ++j) {
      double worst = 0.0;
      for (int k = 1; k <= kDimension; ++k) {
        worst = std::max(worst, std::abs(algebra.structure_constant(i, j, k) -
                                         table_entry(i, j, k, alpha, beta)));
      }
      std::ostringstream name;
      name << "table [X" << i << ",X" << j << "]";
      rows.push_back(make_check(name.str(), 0.0, worst, worst, 0.0));
    }
  }

  for (int i = 1; i <= kDimension; ++i) {
    for (double s : {-1.0, -0.5, 0.25, 1.0}) {
      const Matrix by_expm = algebra.adjoint(i, s);
      const Matrix by_series = algebra.lie_series(i, s, 20);
      rows.push_back(make_check(label("series", i, s), by_expm.norm(),
                                by_series.norm(),
                                linalg::max_abs(by_expm - by_series),
                                series_tol));
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> param(-1.0, 1.0);
  std::uniform_int_distribution<int> generator(1, kDimension);
  auto random_element = [&] {
    Coefficients a{};
    for (auto& v : a) v = param(rng);
    return algebra.element(a);
  };

  for (int trial = 0; trial < 10; ++trial) {
    const int i = generator(rng);
    const double s = param(rng), t = param(rng);
    const Matrix combined = algebra.adjoint(i, s + t);
    const Matrix product = algebra.adjoint(i, s) * algebra.adjoint(i, t);
    rows.push_back(make_check(label("homomorphism", i, s), combined.norm(),
                              product.norm(),
                              linalg::max_abs(combined - product), 1e-11));
  }

  for (int trial = 0; trial < 10; ++trial) {
    const int i = generator(rng);
    const double s = param(rng);
    const Matrix g = algebra.adjoint(i, s);
    const LieElement x = random_element(), y = random_element();
    auto act = [&](const LieElement& e) {
      return algebra.element(to_coefficients(g * to_vector(e.a)));
    };
    const Vector lhs = g * to_vector(algebra.commutator(x, y).a);
    const Vector rhs = to_vector(algebra.commutator(act(x), act(y)).a);
    rows.push_back(make_check(label("bracket-invariance", i, s), lhs.norm(),
                              rhs.norm(), linalg::max_abs(lhs - rhs), 1e-10));
  }

  for (int trial = 0; trial < 10; ++trial) {
    const LieElement x = random_element(), y = random_element(),
                     z = random_element();
    const Vector a = to_vector(algebra.commutator(x, algebra.commutator(y, z)).a);
    const Vector b = to_vector(algebra.commutator(y, algebra.commutator(z, x)).a);
    const Vector c = to_vector(algebra.commutator(z, algebra.commutator(x, y)).a);
    const Vector sum = a + b + c;
    std::ostringstream name;
    name << "jacobi #" << trial;
    rows.push_back(make_check(name.str(), (a + b).norm(), (-c).norm(),
                              linalg::max_abs(sum), 1e-12));
  }
  return rows;
}

}  // namespace fracsym::lie

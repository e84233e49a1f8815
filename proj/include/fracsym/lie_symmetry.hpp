#pragma once

// The five-dimensional symmetry algebra ⟨X₁,…,X₅⟩ of the fractional heat
// equation,
//   X₁ = ∂t, X₂ = ∂x, X₃ = ∂y, X₄ = u∂u, X₅ = αt∂t + βx∂x + βy∂y,
// whose only nonzero brackets are
//   [X₁,X₅] = αX₁, [X₂,X₅] = βX₂, [X₃,X₅] = βX₃
// and their antisymmetric counterparts. Generators are indexed 1…5.

#include <array>
#include <cstdint>
#include <vector>

#include "fracsym/checks.hpp"
#include "fracsym/linalg.hpp"

namespace fracsym::lie {

inline constexpr int kDimension = 5;
inline constexpr double kDefaultEps = 1e-12;

using Coefficients = std::array<double, kDimension>;

/// X = Σ aᵢXᵢ in the algebra with parameters (alpha, beta).
struct LieElement {
  Coefficients a{};
  double alpha = 1.0;
  double beta = 1.0;
};

class Algebra {
 public:
  /// Structure constants of the table above; alpha, beta > 0.
  Algebra(double alpha, double beta);

  /// Negative control: the table plus a spurious [X₁,X₂] = εX₅, which breaks
  /// the Jacobi identity.
  static Algebra corrupted(double alpha, double beta, double epsilon);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  /// c(i,j,k): coefficient of X_k in [X_i, X_j].
  double structure_constant(int i, int j, int k) const;

  LieElement element(const Coefficients& a) const { return {a, alpha_, beta_}; }

  LieElement commutator(const LieElement& x, const LieElement& y) const;

  /// Matrix of ad_{X_i}: column j holds the coefficients of [X_i, X_j].
  Matrix ad_matrix(int i) const;

  /// Ad(exp(s·X_i)) = exp(−s·ad_{X_i}) acting on coefficient columns, so
  /// Ad(exp(sX))Y = Y − s[X,Y] + (s²/2)[X,[X,Y]] − …
  /// Requires |s|·max(α, β) ≤ 50.
  Matrix adjoint(int i, double s) const;

  /// The same operator from the truncated Lie series.
  Matrix lie_series(int i, double s, int terms = 20) const;

  /// Map on coefficient tuples used by the optimal-system reduction:
  /// a ↦ Ad(exp(s·X_i))ᵀ·a. Its matrix, read with row j as the image of
  /// X_j, is the displayed matrix of the adjoint map, so composites act on
  /// (a₁,…,a₅) the way the classical reduction argument manipulates them:
  /// for i = 1 the X₅ coefficient becomes a₅ − sα·a₁. For nilpotent
  /// ad_{X_i} the terminating series is used and s is unrestricted.
  Matrix coefficient_action(int i, double s) const;

 private:
  Algebra(double alpha, double beta, bool);
  std::size_t index(int i, int j, int k) const;

  double alpha_;
  double beta_;
  std::array<double, kDimension * kDimension * kDimension> constants_{};
};

/// Bilinear bracket from the table; throws ErrorCode::parameter_mismatch
/// when x and y come from different (α, β).
LieElement commutator(const LieElement& x, const LieElement& y);

Matrix ad_matrix(int i, double alpha, double beta);
Matrix adjoint(int i, double s, double alpha, double beta);

/// Ordered steps (generator, parameter) followed by scaling by sign·λ.
struct GroupWord {
  std::vector<std::pair<int, double>> steps;
  double lambda = 1.0;  // > 0
  double sign = 1.0;    // ±1
};

struct CanonicalForm {
  int case_id = 0;  // 1…8
  LieElement representative;
  GroupWord word;
};

/// Applies the word's coefficient actions in order, then the scaling.
Coefficients apply_word(const Algebra& algebra, const GroupWord& word,
                        const Coefficients& a);

/// Zero pattern of (a₁,a₂,a₃) with threshold eps → case:
///   (≠,≠,≠)→8  (≠,≠,0)→7  (≠,0,≠)→6  (≠,0,0)→1
///   (0,≠,≠)→5  (0,≠,0)→3  (0,0,≠)→2  (0,0,0)→4
int case_for(const Coefficients& a, double eps);

/// Reduces X to its optimal-system representative. Parameter choices:
///   1: s₁ = a₅/(αa₁)                 2: s₃ = a₅/(βa₃)
///   3: s₂ = a₅/(βa₂)                 4: none
///   5: s₂ = a₅/(βa₂), s₃ = −a₅/(βa₃)  6: s₁ = a₅/(αa₁), s₃ = −a₅/(βa₃)
///   7, 8: s₁ = a₅/(αa₁), s₂ = −a₅/(βa₂)
/// With α = β = 1 these are the classical choices s = a₅/aᵢ. The result is
/// then scaled by a positive λ and a sign so that the leading coefficient
/// (a₁ in cases 1, 6, 7, 8; a₂ in 3, 5; a₃ in 2) equals 1; case 4 is left
/// unscaled. Throws ErrorCode::zero_element when every |aᵢ| ≤ eps.
CanonicalForm classify(const LieElement& x, double eps = kDefaultEps);

/// Sweep: structure constants against the table, expm against the Lie
/// series, one-parameter homomorphism, bracket invariance under Ad, Jacobi.
std::vector<CheckRow> run_adjoint_checks(const Algebra& algebra,
                                         double series_tol = 1e-12,
                                         std::uint64_t seed = 12345);

}  // namespace fracsym::lie

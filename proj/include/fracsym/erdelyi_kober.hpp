#pragma once

// Erdélyi-Kober operators in two variables and the similarity reduction of
// the fractional time and space derivatives.
//
//   K^{τ,δ}_{γ₁,γ₂}ω(z) = 1/Γ(δ) ∫₁^∞ (θ−1)^(δ−1) θ^(−(τ+δ)) ω(z₁θ^(1/γ₁), z₂θ^(1/γ₂)) dθ
//   K^{τ,0}ω = ω
//   P ω = Π_{j=0}^{n−1} (τ_P + j − (1/γ₁)z₁∂_{z₁} − (1/γ₂)z₂∂_{z₂}) K^{τ,δ}ω
//
// γ = ±∞ means the corresponding variable is not scaled.

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "fracsym/checks.hpp"

namespace fracsym::ek {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

using BivariateFunction = std::function<double(double, double)>;

struct EKParams {
  double tau = 1.0;
  double order = 0.0;  // δ ≥ 0
  double gamma1 = 1.0;
  double gamma2 = 1.0;
  int n = 0;           // number of Euler factors
  /// Constant τ_P of the Euler factors; unset means τ_P = τ.
  std::optional<double> product_tau;
  /// Growth hint ρ with ω(z₁θ^(1/γ₁), z₂θ^(1/γ₂)) = O(θ^ρ) as θ → ∞. When
  /// 0 < τ − ρ < 1 the tail is integrated in w = u^(τ−ρ), which removes the
  /// algebraic endpoint singularity.
  double growth = 0.0;

  /// n = ⌊δ⌋+1 for non-integer δ, n = δ for integer δ.
  static EKParams make(double tau, double order, double gamma1, double gamma2);

  double inv_gamma1() const noexcept { return std::isinf(gamma1) ? 0.0 : 1.0 / gamma1; }
  double inv_gamma2() const noexcept { return std::isinf(gamma2) ? 0.0 : 1.0 / gamma2; }
  double factor_tau() const noexcept { return product_tau.value_or(tau); }
};

struct SimilarityPoint {
  double xi1;
  double xi2;
};

/// (x·t^(−β/α), y·t^(−β/α)), t > 0.
SimilarityPoint similarity_vars(double t, double x, double y, double alpha,
                                double beta);

/// K^{τ,δ}ω at (z1, z2). For δ > 0 the θ-range is split at 2: on [1,2],
/// θ = 1 + w^(1/δ); on [2,∞), θ = 1/u. Both singular points then sit at the
/// left end of a unit-scale interval; see EKParams::growth. Throws ErrorCode::convergence when the
/// quadrature does not settle (including non-integrable growth of ω).
double ek_K(const EKParams& params, const BivariateFunction& omega, double z1,
            double z2, double tol);

/// P ω at (z1, z2), n ≤ 2. Powers of the Euler operator
/// E = (1/γ₁)z₁∂_{z₁} + (1/γ₂)z₂∂_{z₂} are derivatives of
/// φ(λ) = K(z₁e^(λ/γ₁), z₂e^(λ/γ₂)) at λ = 0, taken by Richardson-extrapolated
/// 5-point differences with step h.
double ek_P(const EKParams& params, const BivariateFunction& omega, double z1,
            double z2, double tol, double h = 0.02);

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
  /// rhs with the Euler factors built on τ_P = τ = 1 and, for the space
  /// identity, γ₁ = +1. NaN if that operator does not converge.
  double literal_rhs = 0.0;
};

/// Time derivative of u = ω(ξ₁,ξ₂), ω = ξ₁^p ξ₂^q, u = x^p y^q t^μ with
/// μ = −(p+q)β/α. lhs is the RL power rule; rhs is
/// t^(−α)·Π_{j<n}(1−α+j − E)·K^{1,n−α}_{α/β,α/β}ω, n = ⌈α⌉.
/// Requires p, q ≥ 0, (p+q)β/α < 1, 0 < α ≤ 2, β > 0 and t, x, y ∈ (0, 1].
IdentityCheck verify_time_identity(double p, double q, double alpha,
                                   double beta, double t, double x, double y,
                                   double tol);

/// RL derivative of order β in x of the same u. lhs is the power rule; rhs is
/// x^(−β)·Π_{j<n}(1−β+j − E)·K^{1,n−β}_{−1,∞}ω, n = ⌈β⌉ (ω(ξ₁/θ, ξ₂)).
/// Requires p, q ≥ 0, 0 < β ≤ 2 and t, x, y ∈ (0, 1].
IdentityCheck verify_space_identity(double p, double q, double alpha,
                                    double beta, double t, double x, double y,
                                    double tol);

/// Sweep of both identities over a monomial family at (t,x,y) = (0.5,0.5,0.5).
std::vector<CheckRow> run_reduction_checks(double tol = 1e-6);

}  // namespace fracsym::ek

#pragma once

// Riemann-Liouville and Caputo operators: closed-form power rules, plus
// quadrature realizations of the defining integrals used as oracles.

#include <functional>
#include <span>

#include "fracsym/polysum.hpp"

namespace fracsym {

/// Order of a fractional operator with its ceiling n (n−1 < value ≤ n).
class FracOrder {
 public:
  /// value > 0.
  explicit FracOrder(double value);

  double value() const noexcept { return value_; }
  int n() const noexcept { return n_; }
  bool is_integer() const noexcept { return static_cast<double>(n_) == value_; }

 private:
  double value_;
  int n_;
};

/// coef·t^exponent
struct PowerTerm {
  double coef = 0.0;
  double exponent = 0.0;
};

using ScalarFunction = std::function<double(double)>;

/// RL derivative of t^μ: Γ(μ+1)/Γ(μ+1−α)·t^(μ−α). The coefficient is 0 when
/// μ+1−α is a nonpositive integer. Requires μ > −1.
PowerTerm rl_derivative_power(double mu, const FracOrder& order);

/// Caputo derivative of t^μ, μ ≥ 0: zero for integer μ < n, else the RL rule.
PowerTerm caputo_derivative_power(double mu, const FracOrder& order);

/// RL integral of order a > 0 of t^μ: Γ(μ+1)/Γ(μ+1+a)·t^(μ+a). Requires μ > −1.
PowerTerm rl_integral_power(double mu, double a);

/// (I^a g)(t) by quadrature; g may behave like s^(−γ), γ < 1, near 0.
double rl_integral_quad(const ScalarFunction& g, double a, double t,
                        double tol);

/// RL derivative by quadrature of the defining integral and a Richardson-
/// extrapolated 5-point central difference for d^n/dt^n. The stencil reaches
/// t + 2h, so g must be defined slightly beyond t. Throws
/// ErrorCode::convergence when the two extrapolated estimates differ by more
/// than tol·max(1, |D|).
double rl_derivative_quad(const ScalarFunction& g, const FracOrder& order,
                          double t, double tol);

/// Caputo derivative through the RL conversion
/// D_C g = D_RL g − Σ_{k<n} g^(k)(0) t^(k−α)/Γ(k−α+1).
/// derivs_at_zero holds g(0), g'(0), …; at least n values.
double caputo_derivative_quad(const ScalarFunction& g,
                              std::span<const double> derivs_at_zero,
                              const FracOrder& order, double t, double tol);

/// Caputo derivative from its own definition, I^(n−α) g^(n), given g^(n).
double caputo_derivative_quad_direct(const ScalarFunction& g_nth,
                                     const FracOrder& order, double t,
                                     double tol);

/// Term-wise Caputo derivative of a polynomial sum along one axis.
PolySum3 apply_caputo_polysum(const PolySum3& f, Axis axis,
                              const FracOrder& order);

}  // namespace fracsym

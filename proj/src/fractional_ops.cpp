#include "fracsym/fractional_ops.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include "fracsym/error.hpp"
#include "fracsym/finite_difference.hpp"
#include "fracsym/quadrature.hpp"
#include "fracsym/special_functions.hpp"

namespace fracsym {
namespace {

// Inner integrals feed finite differences, so they are resolved well below
// the caller's tolerance.
constexpr double kInnerTol = 1e-13;

bool is_integer(double v) { return v == std::floor(v); }

void require_time(double t) {
  if (!(t > 0.0 && t <= 1.0)) {
    fail(ErrorCode::domain, "fractional quadrature: t must lie in (0, 1], got " +
                                std::to_string(t));
  }
}

double step_for(int n, double t) {
  const double h = n == 1 ? std::max(1e-4, 1e-3 * t) : std::max(1e-3, 1e-2 * t);
  return std::min(h, t / 4);
}

// Γ(mu+1)/Γ(mu+1−alpha); a falling product when alpha is a whole number.
double power_rule_coef(double mu, double alpha) {
  if (alpha == std::floor(alpha) && alpha <= 64.0) {
    double c = 1.0;
    for (int k = 0; k < static_cast<int>(alpha); ++k) c *= mu - k;
    return c;
  }
  return gamma(mu + 1.0) * reciprocal_gamma(mu + 1.0 - alpha);
}

}  // namespace

FracOrder::FracOrder(double value) : value_(value), n_(0) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    fail(ErrorCode::domain, "FracOrder: order must be positive, got " +
                                std::to_string(value));
  }
  n_ = static_cast<int>(std::ceil(value));
}

PowerTerm rl_derivative_power(double mu, const FracOrder& order) {
  if (!(mu > -1.0)) {
    fail(ErrorCode::domain, "rl_derivative_power: requires mu > -1");
  }
  const double alpha = order.value();
  return {power_rule_coef(mu, alpha), mu - alpha};
}

PowerTerm caputo_derivative_power(double mu, const FracOrder& order) {
  if (!(mu >= 0.0)) {
    fail(ErrorCode::domain, "caputo_derivative_power: requires mu >= 0");
  }
  const double alpha = order.value();
  if (is_integer(mu) && mu < order.n()) return {0.0, mu - alpha};
  return {power_rule_coef(mu, alpha), mu - alpha};
}

PowerTerm rl_integral_power(double mu, double a) {
  if (!(mu > -1.0)) fail(ErrorCode::domain, "rl_integral_power: requires mu > -1");
  if (!(a > 0.0)) fail(ErrorCode::domain, "rl_integral_power: requires a > 0");
  return {std::exp(ln_gamma(mu + 1.0) - ln_gamma(mu + 1.0 + a)), mu + a};
}

double rl_integral_quad(const ScalarFunction& g, double a, double t,
                        double tol) {
  if (!(a > 0.0)) fail(ErrorCode::domain, "rl_integral_quad: requires a > 0");
  if (!(t > 0.0)) fail(ErrorCode::domain, "rl_integral_quad: requires t > 0");
  // ∫₀ᵗ (t−s)^(a−1) g(s) ds split at t/2 so each singular point sits at the
  // left end of its piece. Near s = t, with r = t−s = c·w^(1/a), c = t/2:
  // r^(a−1) dr = (c^a/a) dw.
  const double c = 0.5 * t;
  const double near_zero = quadrature::integral(
      [&](double s) { return std::pow(t - s, a - 1.0) * g(s); }, 0.0, c, tol);
  const double near_t = quadrature::integral(
      [&](double w) { return g(t - c * std::pow(w, 1.0 / a)); }, 0.0, 1.0, tol);
  return (near_zero + std::pow(c, a) / a * near_t) * reciprocal_gamma(a);
}

double rl_derivative_quad(const ScalarFunction& g, const FracOrder& order,
                          double t, double tol) {
  require_time(t);
  const int n = order.n();
  if (n > 2) fail(ErrorCode::domain, "rl_derivative_quad: supports order <= 2");
  const double a = n - order.value();
  const ScalarFunction inner =
      a == 0.0 ? g
               : ScalarFunction([&](double s) {
                   return rl_integral_quad(g, a, s, kInnerTol);
                 });
  return richardson_derivative(inner, n, t, step_for(n, t), tol);
}

double caputo_derivative_quad(const ScalarFunction& g,
                              std::span<const double> derivs_at_zero,
                              const FracOrder& order, double t, double tol) {
  const int n = order.n();
  if (derivs_at_zero.size() < static_cast<std::size_t>(n)) {
    fail(ErrorCode::domain,
         "caputo_derivative_quad: needs g^(k)(0) for k < n");
  }
  double value = rl_derivative_quad(g, order, t, tol);
  const double alpha = order.value();
  for (int k = 0; k < n; ++k) {
    value -= derivs_at_zero[static_cast<std::size_t>(k)] *
             std::pow(t, k - alpha) * reciprocal_gamma(k - alpha + 1.0);
  }
  return value;
}

double caputo_derivative_quad_direct(const ScalarFunction& g_nth,
                                     const FracOrder& order, double t,
                                     double tol) {
  require_time(t);
  const double a = order.n() - order.value();
  if (a == 0.0) return g_nth(t);
  return rl_integral_quad(g_nth, a, t, tol);
}

PolySum3 apply_caputo_polysum(const PolySum3& f, Axis axis,
                              const FracOrder& order) {
  PolySum3 result;
  for (const auto& term : f.terms()) {
    const double mu = term.exponent(axis);
    const PowerTerm d = caputo_derivative_power(mu, order);
    if (d.coef == 0.0 || term.c == 0.0) continue;
    PolyTerm image = term;
    image.c *= d.coef;
    switch (axis) {
      case Axis::t: image.p = d.exponent; break;
      case Axis::x: image.q = d.exponent; break;
      case Axis::y: image.r = d.exponent; break;
    }
    result.add(image);
  }
  return result;
}

}  // namespace fracsym

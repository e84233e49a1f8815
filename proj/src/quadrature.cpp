#include "fracsym/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fracsym/error.hpp"

namespace fracsym::quadrature {

Rule gauss_legendre(int n) {
  if (n < 1) fail(ErrorCode::domain, "gauss_legendre: n must be >= 1");
  Rule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      derivative = n * (z * p1 - p2) / (z * z - 1.0);
      const double previous = z;
      z = previous - p1 / derivative;
      if (std::abs(z - previous) <= 1e-15) break;
    }
    const double weight = 2.0 / ((1.0 - z * z) * derivative * derivative);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -z;
    rule.nodes[hi] = z;
    rule.weights[lo] = weight;
    rule.weights[hi] = weight;
  }
  return rule;
}

const Rule& gauss_legendre16() {
  static const Rule rule = gauss_legendre(16);
  return rule;
}

double apply(const Rule& rule, const std::function<double(double)>& f,
             double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

namespace {

// One estimate: panels graded toward a and b with `levels` geometric steps
// on each half, every panel split into `splits` equal pieces.
double graded_estimate(const std::function<double(double)>& f, double a,
                       double b, int levels, int splits, double grading,
                       int& evaluations) {
  const Rule& rule = gauss_legendre16();
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  auto panel = [&](double lo, double hi) {
    // Panels narrower than a few ulps near a nonzero endpoint are skipped;
    // their nodes would round onto the endpoint.
    if (hi - lo <= 16.0 * std::numeric_limits<double>::epsilon() *
                       std::max(std::abs(lo), std::abs(hi))) {
      return;
    }
    const double width = (hi - lo) / splits;
    for (int k = 0; k < splits; ++k) {
      sum += apply(rule, f, lo + k * width, lo + (k + 1) * width);
    }
    evaluations += splits * static_cast<int>(rule.nodes.size());
  };
  // Offsets from the endpoint: half·grading^k, k = levels … 0.
  double inner = half * std::pow(grading, levels);
  panel(a, a + inner);
  panel(b - inner, b);
  for (int k = levels; k > 0; --k) {
    const double outer = inner / grading;
    panel(a + inner, a + outer);
    panel(b - outer, b - inner);
    inner = outer;
  }
  return sum;
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 double tol, const Options& options) {
  if (!(b >= a)) fail(ErrorCode::domain, "integrate: requires a <= b");
  Result result;
  if (a == b) return result;

  double previous = 0.0;
  double previous_change = 0.0;
  int growing = 0;
  for (int k = 0; k <= options.max_refinements; ++k) {
    const int levels = options.initial_levels + k * options.level_step;
    const double estimate = graded_estimate(f, a, b, levels, k + 1,
                                            options.grading,
                                            result.evaluations);
    if (!std::isfinite(estimate)) {
      fail(ErrorCode::convergence, "integrate: non-finite estimate "
                                   "(integrand not integrable?)");
    }
    if (k > 0) {
      const double change = std::abs(estimate - previous);
      if (change <= tol * std::max(1.0, std::abs(estimate))) {
        result.value = estimate;
        result.last_change = change;
        result.refinements = k;
        return result;
      }
      if (k > 1 && change >= previous_change) ++growing;
      previous_change = change;
    }
    previous = estimate;
  }
  std::ostringstream msg;
  msg << "integrate: tolerance " << tol << " not met after "
      << options.max_refinements << " refinements (last change "
      << previous_change << ")";
  if (growing >= options.max_refinements - 2) {
    msg << "; estimates diverge, integrand is likely non-integrable";
  }
  fail(ErrorCode::convergence, msg.str());
}

double integral(const std::function<double(double)>& f, double a, double b,
                double tol) {
  return integrate(f, a, b, tol).value;
}

}  // namespace fracsym::quadrature

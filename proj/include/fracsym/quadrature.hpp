#pragma once

// Composite Gauss-Legendre quadrature on meshes graded geometrically toward
// both endpoints. Integrands with integrable algebraic endpoint behaviour
// (s^γ, γ > −1) converge without special weights. Strong singularities belong
// at the left endpoint of [0, b]: doubles cannot resolve offsets below ~1e-16
// from a nonzero endpoint.

#include <functional>
#include <span>
#include <vector>

namespace fracsym::quadrature {

struct Rule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule by Newton iteration on P_n.
Rule gauss_legendre(int n);

/// The 16-point rule, computed once.
const Rule& gauss_legendre16();

/// Apply a rule on [a, b].
double apply(const Rule& rule, const std::function<double(double)>& f,
             double a, double b);

struct Options {
  double grading = 0.2;  // ratio between consecutive graded panels
  int initial_levels = 20;
  int level_step = 20;
  int max_refinements = 8;
};

struct Result {
  double value = 0.0;
  double last_change = 0.0;  // |Q_k − Q_{k−1}| at acceptance
  int refinements = 0;
  int evaluations = 0;
};

/// ∫_a^b f. Refines (more graded levels, split panels) until two successive
/// estimates differ by at most tol·max(1, |Q|). Throws ErrorCode::convergence
/// otherwise, with a divergence note when the changes kept growing.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double tol, const Options& options = {});

/// Shorthand returning only the value.
double integral(const std::function<double(double)>& f, double a, double b,
                double tol);

}  // namespace fracsym::quadrature

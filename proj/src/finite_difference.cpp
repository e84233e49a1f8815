#include "fracsym/finite_difference.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fracsym/error.hpp"

namespace fracsym {

double richardson_derivative(const std::function<double(double)>& f, int order,
                             double x, double h, double tol) {
  if (order != 1 && order != 2) {
    fail(ErrorCode::domain, "richardson_derivative: order must be 1 or 2");
  }
  if (!(h > 0.0)) fail(ErrorCode::domain, "richardson_derivative: h must be > 0");
  auto stencil = [&](double step) {
    const double fm2 = f(x - 2 * step), fm1 = f(x - step);
    const double fp1 = f(x + step), fp2 = f(x + 2 * step);
    if (order == 1) return (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * step);
    const double f0 = f(x);
    return (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * step * step);
  };
  const double d1 = stencil(h), d2 = stencil(h / 2), d4 = stencil(h / 4);
  const double coarse = (16 * d2 - d1) / 15;
  const double fine = (16 * d4 - d2) / 15;
  if (std::abs(fine - coarse) > tol * std::max(1.0, std::abs(fine))) {
    std::ostringstream msg;
    msg << "finite difference: Richardson estimates " << coarse << " and "
        << fine << " disagree beyond " << tol
        << " (step too large or samples too noisy)";
    fail(ErrorCode::convergence, msg.str());
  }
  return fine;
}

}  // namespace fracsym

#pragma once

#include <functional>

namespace fracsym {

/// f^(order)(x), order ∈ {1, 2}, from 5-point central differences at steps
/// h, h/2, h/4 with one Richardson step per pair (O(h⁶)). Throws
/// ErrorCode::convergence when the two extrapolated values differ by more
/// than tol·max(1, |f^(order)|), i.e. the step is too large or the samples
/// too noisy.
double richardson_derivative(const std::function<double(double)>& f, int order,
                             double x, double h, double tol);

}  // namespace fracsym

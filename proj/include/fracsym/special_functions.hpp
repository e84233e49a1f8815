#pragma once

// Real-argument gamma-family functions on the positive axis.

namespace fracsym {

/// ln Γ(x) for x > 0 (Lanczos, g = 7, nine coefficients).
double ln_gamma(double x);

/// Γ(x) for x > 0. Overflows to +inf past x ≈ 171.6.
double gamma(double x);

/// 1/Γ(x) for any real x: zero at the poles x = 0, −1, −2, …, reflection
/// for other negative x.
double reciprocal_gamma(double x);

/// B(a, b) = Γ(a)Γ(b)/Γ(a+b) for a, b > 0.
double beta(double a, double b);

/// Γ(1+α)/(Γ(1+α−n)Γ(n+1)) by the product form α(α−1)…(α−n+1)/n!,
/// which is finite where the gamma ratio has poles.
double gen_binomial(double alpha, int n);

/// Integer binomial C(n, k) as a double; 0 when k < 0 or k > n.
double binomial(int n, int k);

}  // namespace fracsym

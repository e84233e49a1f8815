#include <doctest.h>

#include <array>
#include <cmath>

#include "../oracles.hpp"
#include "fracsym/fractional_ops.hpp"
#include "fracsym/finite_difference.hpp"
#include "support.hpp"

using namespace fracsym;

TEST_SUITE("fractional_ops") {
  TEST_CASE("order ceiling") {
    CHECK(FracOrder(0.3).n() == 1);
    CHECK(FracOrder(1.0).n() == 1);
    CHECK(FracOrder(1.0).is_integer());
    CHECK(FracOrder(1.5).n() == 2);
    CHECK(FracOrder(2.0).n() == 2);
    CHECK_FALSE(FracOrder(1.5).is_integer());
    CHECK(error_of([] { FracOrder(0.0); }) == ErrorCode::domain);
    CHECK(error_of([] { FracOrder(-1.0); }) == ErrorCode::domain);
  }

  TEST_CASE("RL derivative power rule") {
    auto d = rl_derivative_power(1.0, FracOrder(1.0));
    CHECK(d.coef == doctest::Approx(1.0));
    CHECK(d.exponent == 0.0);
    d = rl_derivative_power(2.0, FracOrder(1.0));
    CHECK(d.coef == doctest::Approx(2.0));
    CHECK(d.exponent == 1.0);
    d = rl_derivative_power(2.0, FracOrder(0.5));
    CHECK(d.coef == doctest::Approx(2.0 / std::tgamma(2.5)).epsilon(1e-14));
    CHECK(d.coef == doctest::Approx(1.5045).epsilon(1e-4));
    CHECK(d.exponent == 1.5);
    // Γ pole in the denominator: d²/dt² of t
    CHECK(rl_derivative_power(1.0, FracOrder(2.0)).coef == 0.0);
    CHECK(error_of([] { rl_derivative_power(-1.0, FracOrder(0.5)); }) == ErrorCode::domain);
  }

  TEST_CASE("Caputo power rule") {
    CHECK(caputo_derivative_power(0.0, FracOrder(0.7)).coef == 0.0);
    CHECK(caputo_derivative_power(1.0, FracOrder(2.0)).coef == 0.0);
    CHECK(caputo_derivative_power(1.0, FracOrder(1.5)).coef == 0.0);
    const auto d = caputo_derivative_power(3.0, FracOrder(2.0));
    CHECK(d.coef == doctest::Approx(6.0));
    CHECK(d.exponent == 1.0);
    const auto h = caputo_derivative_power(0.5, FracOrder(0.3));
    CHECK(h.coef == doctest::Approx(std::tgamma(1.5) / std::tgamma(1.2)).epsilon(1e-13));
    CHECK(error_of([] { caputo_derivative_power(-0.5, FracOrder(0.5)); }) == ErrorCode::domain);
  }

  TEST_CASE("RL integral power rule") {
    auto i = rl_integral_power(0.0, 1.0);
    CHECK(i.coef == doctest::Approx(1.0));
    CHECK(i.exponent == 1.0);
    i = rl_integral_power(1.0, 1.0);
    CHECK(i.coef == doctest::Approx(0.5));
    CHECK(i.exponent == 2.0);
    i = rl_integral_power(1.5, 0.5);
    CHECK(i.coef == doctest::Approx(0.664670).epsilon(1e-6));
    CHECK(i.exponent == 2.0);
    const double quad = oracle::rl_integral([](double s) { return std::pow(s, 1.5); }, 0.5, 0.7);
    CHECK(rel_err(i.coef * std::pow(0.7, 2.0), quad) <= 1e-12);
    CHECK(error_of([] { rl_integral_power(-1.0, 0.5); }) == ErrorCode::domain);
    CHECK(error_of([] { rl_integral_power(1.0, 0.0); }) == ErrorCode::domain);
  }

  TEST_CASE("semigroup of RL integrals on powers") {
    for (double mu : {0.0, 0.5, 2.0})
      for (double a : {0.3, 0.8})
        for (double b : {0.2, 1.0}) {
          const auto first = rl_integral_power(mu, a);
          const auto second = rl_integral_power(first.exponent, b);
          const auto both = rl_integral_power(mu, a + b);
          CHECK(rel_err(first.coef * second.coef, both.coef) <= 1e-13);
          CHECK(second.exponent == doctest::Approx(both.exponent));
        }
  }

  TEST_CASE("RL integral by quadrature") {
    for (double mu : {-0.5, 0.0, 1.0, 2.5})
      for (double a : {0.3, 1.0, 1.7})
        for (double t : {0.1, 0.5, 1.0}) {
          const auto rule = rl_integral_power(mu, a);
          const double got = rl_integral_quad([mu](double s) { return std::pow(s, mu); }, a, t, 1e-13);
          CHECK(rel_err(got, rule.coef * std::pow(t, rule.exponent)) <= 1e-10);
        }
  }

  TEST_CASE("RL derivative by quadrature: examples") {
    const double a = rl_derivative_quad([](double s) { return s; }, FracOrder(0.5), 0.5, 1e-8);
    CHECK(rel_err(a, std::sqrt(0.5) / std::tgamma(1.5)) <= 1e-8);
    const double b = rl_derivative_quad([](double) { return 1.0; }, FracOrder(0.5), 1.0, 1e-8);
    CHECK(rel_err(b, 1.0 / std::tgamma(0.5)) <= 1e-8);
    const double c = rl_derivative_quad([](double s) { return s * s * s; }, FracOrder(1.0), 0.3, 1e-8);
    CHECK(std::abs(c - 0.27) <= 1e-8);
  }

  TEST_CASE("RL derivative by quadrature matches the power rule on Bernstein members") {
    for (int m : {2, 4, 6}) {
      for (double alpha : {0.3, 0.8, 1.0}) {
        const FracOrder order(alpha);
        for (int i = 0; i <= m; ++i) {
          const auto c = oracle::bernstein_coeffs(m, i);
          for (int k = 1; k <= 10; ++k) {
            const double t = k / 10.5;
            double want = 0.0;
            for (int p = 0; p <= m; ++p) {
              const auto r = rl_derivative_power(p, order);
              want += c[p] * r.coef * std::pow(t, r.exponent);
            }
            const double got = rl_derivative_quad(
                [&](double s) { return oracle::polyval(c, s); }, order, t, 1e-8);
            CHECK(std::abs(got - want) <= 1e-8 * std::max(1.0, std::abs(want)));
          }
        }
      }
    }
  }

  TEST_CASE("RL derivative of order above one") {
    const double got = rl_derivative_quad([](double s) { return s * s * s; }, FracOrder(1.5), 0.7, 1e-8);
    const auto r = rl_derivative_power(3.0, FracOrder(1.5));
    CHECK(rel_err(got, r.coef * std::pow(0.7, r.exponent)) <= 1e-8);
    CHECK(error_of([] { rl_derivative_quad([](double) { return 1.0; }, FracOrder(2.5), 0.5, 1e-8); }) ==
          ErrorCode::domain);
    CHECK(error_of([] { rl_derivative_quad([](double) { return 1.0; }, FracOrder(0.5), 0.0, 1e-8); }) ==
          ErrorCode::domain);
  }

  TEST_CASE("Caputo through the RL conversion") {
    const double tol = 1e-8;
    {
      const std::array<double, 1> d0{0.0};
      const double rl = rl_derivative_quad([](double s) { return s * s; }, FracOrder(0.5), 0.5, tol);
      const double cap = caputo_derivative_quad([](double s) { return s * s; }, d0, FracOrder(0.5), 0.5, tol);
      CHECK(std::abs(rl - cap) <= 2 * tol);
    }
    {
      const std::array<double, 1> d0{1.0};
      auto g = [](double s) { return 1.0 + s * s; };
      const double rl = rl_derivative_quad(g, FracOrder(0.5), 0.5, tol);
      const double cap = caputo_derivative_quad(g, d0, FracOrder(0.5), 0.5, tol);
      CHECK(std::abs(cap - (rl - std::pow(0.5, -0.5) / std::tgamma(0.5))) <= 1e-14);
      const auto p = caputo_derivative_power(2.0, FracOrder(0.5));
      CHECK(std::abs(cap - p.coef * std::pow(0.5, p.exponent)) <= 2 * tol);
    }
    {
      const std::array<double, 2> d0{0.0, 0.0};
      const double cap = caputo_derivative_quad([](double s) { return s * s * s; }, d0, FracOrder(1.5), 0.7, tol);
      CHECK(rel_err(cap, 6.0 / std::tgamma(2.5) * std::pow(0.7, 1.5)) <= 2 * tol);
    }
    const std::array<double, 1> short_list{0.0};
    CHECK(error_of([&] {
            caputo_derivative_quad([](double s) { return s; }, short_list, FracOrder(1.5), 0.5, tol);
          }) == ErrorCode::domain);
  }

  TEST_CASE("RL-Caputo conversion versus the direct Caputo definition") {
    const double tol = 1e-8;
    for (double mu : {0.5, 1.0, 2.0, 3.0})
      for (double alpha : {0.3, 0.8, 1.0})
        for (double t : {0.1, 0.5, 1.0}) {
          const FracOrder order(alpha);
          const std::array<double, 1> d0{0.0};
          auto g = [mu](double s) { return std::pow(s, mu); };
          auto g1 = [mu](double s) { return mu * std::pow(s, mu - 1.0); };
          const double via_rl = caputo_derivative_quad(g, d0, order, t, tol);
          const double direct = caputo_derivative_quad_direct(g1, order, t, tol);
          CHECK(std::abs(via_rl - direct) <= 2 * tol * std::max(1.0, std::abs(direct)));
        }
  }

  TEST_CASE("term-wise Caputo on polynomial sums") {
    const auto u = PolySum3::parse("1,2,3,3");
    const auto dx = apply_caputo_polysum(u, Axis::x, FracOrder(2.0));
    CHECK(dx.to_string() == "6,2,1,3");
    const auto dt = apply_caputo_polysum(u, Axis::t, FracOrder(1.0));
    CHECK(dt.to_string() == "2,1,3,3");
    CHECK(apply_caputo_polysum(PolySum3::parse("5,0,0,0"), Axis::y, FracOrder(1.5)).empty());
    // The example source is D_t u − D_x u − D_y u.
    const auto f = dt + (-1.0) * dx + (-1.0) * apply_caputo_polysum(u, Axis::y, FracOrder(2.0));
    const auto ref = PolySum3::parse("2,1,3,3;-6,2,1,3;-6,2,3,1");
    for (double p : {0.2, 0.9})
      CHECK(f.evaluate(p, 0.4, 0.7) == doctest::Approx(ref.evaluate(p, 0.4, 0.7)).epsilon(1e-14));
  }

  TEST_CASE("Richardson differences") {
    const double d1 = richardson_derivative([](double x) { return std::sin(x); }, 1, 0.4, 1e-2, 1e-10);
    CHECK(std::abs(d1 - std::cos(0.4)) <= 1e-11);
    const double d2 = richardson_derivative([](double x) { return std::exp(x); }, 2, 0.3, 1e-2, 1e-10);
    CHECK(std::abs(d2 - std::exp(0.3)) <= 1e-9);
    CHECK(error_of([] { richardson_derivative([](double x) { return x; }, 3, 0.0, 0.1, 1e-8); }) ==
          ErrorCode::domain);
    // A step far too large for a rapidly varying function
    CHECK(error_of([] { richardson_derivative([](double x) { return std::sin(40 * x); }, 1, 0.0, 0.5, 1e-10); }) ==
          ErrorCode::convergence);
  }
}

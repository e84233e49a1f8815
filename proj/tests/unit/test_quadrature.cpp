#include <doctest.h>

#include <cmath>

#include "fracsym/quadrature.hpp"
#include "support.hpp"

using namespace fracsym;
namespace q = fracsym::quadrature;

TEST_SUITE("quadrature") {
  TEST_CASE("Gauss-Legendre is exact through degree 2n-1") {
    for (int n : {2, 5, 16}) {
      const auto rule = q::gauss_legendre(n);
      REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
      for (int d = 0; d <= 2 * n - 1; ++d) {
        const double got = q::apply(rule, [d](double x) { return std::pow(x, d); }, 0.0, 1.0);
        CHECK(got == doctest::Approx(1.0 / (d + 1)).epsilon(1e-14));
      }
    }
    CHECK(&q::gauss_legendre16() == &q::gauss_legendre16());
  }

  TEST_CASE("integrable endpoint singularities") {
    const double v = q::integral([](double s) { return 1.0 / std::sqrt(s); }, 0.0, 1.0, 1e-13);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
    const double w = q::integral([](double s) { return std::pow(s, -0.9); }, 0.0, 1.0, 1e-10);
    CHECK(w == doctest::Approx(10.0).epsilon(1e-8));
    const double l = q::integral([](double s) { return std::log(s); }, 0.0, 1.0, 1e-13);
    CHECK(l == doctest::Approx(-1.0).epsilon(1e-12));
  }

  TEST_CASE("smooth integrals converge quickly") {
    const auto r = q::integrate([](double s) { return std::exp(s); }, 0.0, 2.0, 1e-14);
    CHECK(r.value == doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-14));
    CHECK(r.refinements <= 2);
  }

  TEST_CASE("divergent integrals raise a convergence error") {
    CHECK(error_of([] { q::integral([](double s) { return 1.0 / s; }, 0.0, 1.0, 1e-10); }) ==
          ErrorCode::convergence);
    CHECK(error_of([] { q::integral([](double s) { return std::pow(s, -1.5); }, 0.0, 1.0, 1e-10); }) ==
          ErrorCode::convergence);
  }
}

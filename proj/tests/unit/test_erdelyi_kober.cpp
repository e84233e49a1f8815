#include <doctest.h>

#include <cmath>

#include "fracsym/erdelyi_kober.hpp"
#include "fracsym/fractional_ops.hpp"
#include "support.hpp"

using namespace fracsym;
using namespace fracsym::ek;

namespace {

const BivariateFunction kOne = [](double, double) { return 1.0; };

BivariateFunction power(double p, double q) {
  return [p, q](double a, double b) { return std::pow(a, p) * std::pow(b, q); };
}

}  // namespace

TEST_SUITE("erdelyi_kober") {
  TEST_CASE("similarity variables") {
    const auto a = similarity_vars(1.0, 0.3, 0.7, 0.5, 1.5);
    CHECK(a.xi1 == 0.3);
    CHECK(a.xi2 == 0.7);
    const auto b = similarity_vars(2.0, 0.5, 1.0, 0.8, 0.8);
    CHECK(b.xi1 == doctest::Approx(0.25));
    CHECK(b.xi2 == doctest::Approx(0.5));
    CHECK(similarity_vars(4.0, 2.0, 0.0, 1.0, 0.5).xi1 == doctest::Approx(1.0));
    CHECK(error_of([] { similarity_vars(0.0, 1, 1, 1, 1); }) == ErrorCode::domain);
  }

  TEST_CASE("parameter rule for the number of factors") {
    CHECK(EKParams::make(1, 0.3, 1, 1).n == 1);
    CHECK(EKParams::make(1, 1.0, 1, 1).n == 1);
    CHECK(EKParams::make(1, 1.4, 1, 1).n == 2);
    CHECK(EKParams::make(1, 0.0, 1, 1).n == 0);
    CHECK(error_of([] { EKParams::make(1, -0.1, 1, 1); }) == ErrorCode::domain);
    CHECK(error_of([] { EKParams::make(1, 0.5, 0.0, 1); }) == ErrorCode::domain);
    const auto inf = EKParams::make(1, 0.5, kInfinity, -2.0);
    CHECK(inf.inv_gamma1() == 0.0);
    CHECK(inf.inv_gamma2() == -0.5);
  }

  TEST_CASE("order zero is the identity") {
    const auto p = EKParams::make(1.3, 0.0, 0.5, 2.0);
    for (double z : {0.1, 0.7, 3.0}) {
      CHECK(ek_K(p, power(0.4, 1.1), z, 2 * z, 1e-12) == std::pow(z, 0.4) * std::pow(2 * z, 1.1));
      CHECK(ek_K(p, [](double a, double b) { return std::sin(a) + b; }, z, z, 1e-12) == std::sin(z) + z);
    }
  }

  TEST_CASE("constant and power closed forms") {
    for (double tau : {0.5, 1.0, 2.0})
      for (double order : {0.2, 0.5, 0.8}) {
        const auto p = EKParams::make(tau, order, 2.0, kInfinity);
        const double k1 = ek_K(p, kOne, 0.6, 0.4, 1e-12);
        CHECK(rel_err(k1, std::tgamma(tau) / std::tgamma(tau + order)) <= 1e-8);
        // ξ₁^p with τ − p/γ₁ > 0; γ₁ = 2 scales ξ₁ by θ^(1/2).
        const double pw = 0.4;
        auto q = p;
        q.growth = pw / 2.0;
        const double kp = ek_K(q, power(pw, 0.0), 0.6, 0.4, 1e-12);
        const double want = std::pow(0.6, pw) * std::tgamma(tau - pw / 2) / std::tgamma(tau + order - pw / 2);
        CHECK(rel_err(kp, want) <= 1e-8);
        // negative γ scales down: always integrable
        const auto r = EKParams::make(tau, order, -1.0, kInfinity);
        const double kn = ek_K(r, power(1.5, 0.0), 0.6, 0.4, 1e-12);
        const double wn = std::pow(0.6, 1.5) * std::tgamma(tau + 1.5) / std::tgamma(tau + order + 1.5);
        CHECK(rel_err(kn, wn) <= 1e-8);
      }
  }

  TEST_CASE("closed form without the growth hint") {
    auto p = EKParams::make(1.0, 0.5, 2.0, 2.0);
    const double kp = ek_K(p, power(0.2, 0.3), 0.5, 0.9, 1e-12);
    const double want = std::pow(0.5, 0.2) * std::pow(0.9, 0.3) * std::tgamma(0.75) / std::tgamma(1.25);
    CHECK(rel_err(kp, want) <= 1e-8);
  }

  TEST_CASE("non-integrable growth is detected") {
    const auto p = EKParams::make(1.0, 0.5, 1.0, kInfinity);
    CHECK(error_of([&] { ek_K(p, power(1.2, 0.0), 0.5, 0.5, 1e-10); }) == ErrorCode::convergence);
  }

  TEST_CASE("P operator values") {
    const double alpha = 0.6, beta = 1.2;
    auto p = EKParams::make(1.0, 1.0 - alpha, alpha / beta, alpha / beta);
    CHECK(p.n == 1);
    CHECK(rel_err(ek_P(p, kOne, 0.7, 0.3, 1e-8), 1.0 / std::tgamma(2.0 - alpha)) <= 1e-8);

    // Euler factor eigenvalue on ξ₁^p: (τ − p/γ₁)·K
    const double pw = 0.3, gamma1 = 0.5;
    auto q = EKParams::make(1.0, 0.4, gamma1, kInfinity);
    q.growth = pw / gamma1;
    const double kq = ek_K(q, power(pw, 0.0), 0.8, 0.5, 1e-12);
    const double pq = ek_P(q, power(pw, 0.0), 0.8, 0.5, 1e-8);
    CHECK(std::abs(pq - (1.0 - pw / gamma1) * kq) <= 1e-8);

    // both γ infinite: a single factor τ
    const auto r = EKParams::make(1.7, 0.5, kInfinity, kInfinity);
    const double kr = ek_K(r, power(1.0, 1.0), 0.4, 0.5, 1e-12);
    CHECK(std::abs(ek_P(r, power(1.0, 1.0), 0.4, 0.5, 1e-8) - 1.7 * kr) <= 1e-10);

    auto too_many = EKParams::make(1.0, 2.5, 1.0, 1.0);
    CHECK(error_of([&] { ek_P(too_many, kOne, 0.5, 0.5, 1e-8); }) == ErrorCode::domain);
  }

  TEST_CASE("time identity") {
    const auto c0 = verify_time_identity(0, 0, 0.7, 1.1, 0.5, 0.4, 0.3, 1e-6);
    CHECK(c0.lhs == doctest::Approx(std::pow(0.5, -0.7) / std::tgamma(0.3)).epsilon(1e-12));
    CHECK(c0.abs_diff <= 1e-6);
    const auto c1 = verify_time_identity(0.2, 0.1, 0.8, 0.5, 0.5, 0.5, 0.5, 1e-6);
    CHECK(c1.abs_diff <= 1e-6);
    const auto c2 = verify_time_identity(0.3, 0.2, 1.0, 1.2, 0.6, 0.9, 0.2, 1e-6);
    CHECK(c2.abs_diff <= 1e-6);
    CHECK(error_of([] { verify_time_identity(0.5, 0.5, 0.5, 1.0, 0.5, 0.5, 0.5, 1e-6); }) == ErrorCode::domain);
    CHECK(error_of([] { verify_time_identity(0.1, 0.1, 0.5, 1.0, 0.0, 0.5, 0.5, 1e-6); }) == ErrorCode::domain);
  }

  TEST_CASE("the literal Euler-factor constant does not reproduce the time derivative") {
    const auto c = verify_time_identity(0.2, 0.1, 0.8, 0.5, 0.5, 0.5, 0.5, 1e-6);
    CHECK(std::abs(c.literal_rhs - c.lhs) > 1e-3);
    // For α = 1 the factor constant is the only difference: 1 versus 0.
    const auto d = verify_time_identity(0.2, 0.0, 1.0, 1.0, 0.5, 0.5, 0.5, 1e-6);
    CHECK(d.abs_diff <= 1e-6);
    CHECK(std::abs(d.literal_rhs - d.rhs - std::pow(0.5, -1.0) * std::pow(0.5 / 0.5, 0.2)) <= 1e-6);
  }

  TEST_CASE("space identity") {
    const auto c0 = verify_space_identity(0, 0, 0.8, 0.5, 0.5, 0.5, 0.5, 1e-6);
    CHECK(c0.lhs == doctest::Approx(std::pow(0.5, -0.5) / std::tgamma(0.5)).epsilon(1e-12));
    CHECK(c0.abs_diff <= 1e-6);
    const auto c1 = verify_space_identity(0.3, 0.0, 0.8, 0.5, 0.5, 0.5, 0.5, 1e-6);
    CHECK(c1.abs_diff <= 1e-6);
    // ξ₂ only rides along: changing q rescales both sides by the same factor.
    const auto c2 = verify_space_identity(0.3, 0.4, 0.8, 0.5, 0.5, 0.5, 0.5, 1e-6);
    const double factor = std::pow(similarity_vars(0.5, 0.5, 0.5, 0.8, 0.5).xi2, 0.4);
    CHECK(c2.rhs == doctest::Approx(c1.rhs * factor).epsilon(1e-9));
    CHECK(c2.abs_diff <= 1e-6);
    for (double beta : {1.5, 2.0}) CHECK(verify_space_identity(0.7, 0.1, 0.8, beta, 0.5, 0.5, 0.5, 1e-6).abs_diff <= 1e-6);
  }

  TEST_CASE("reduction sweep") {
    const auto rows = run_reduction_checks(1e-6);
    CHECK(rows.size() > 40);
    for (const auto& r : rows) {
      CAPTURE(r.label);
      CHECK(r.pass);
    }
  }
}

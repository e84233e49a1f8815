#include <doctest.h>

#include <cmath>

#include "fracsym/spectral_solver.hpp"
#include "support.hpp"

using namespace fracsym;

namespace {

const char* const kExampleF = "2,1,3,3;-6,2,1,3;-6,2,3,1";

ProblemSpec make(double alpha, double beta, int m, const char* f) {
  return {FracOrder(alpha), FracOrder(beta), m, PolySum3::parse(f)};
}

double max_grid_error(const SpectralSolution& sol, const PolySum3& exact) {
  double worst = 0.0;
  for (int i = 1; i <= 11; ++i)
    for (int j = 1; j <= 11; ++j)
      for (int k = 1; k <= 11; ++k) {
        const double t = i / 11.0, x = j / 11.0, y = k / 11.0;
        worst = std::max(worst, std::abs(sol.evaluate(t, x, y) - exact.evaluate(t, x, y)));
      }
  return worst;
}

}  // namespace

TEST_SUITE("spectral_solver") {
  TEST_CASE("projecting f") {
    const BernsteinBasis b(4);
    CHECK(linalg::max_abs(project_f(make(1, 2, 4, ""), b)) == 0.0);
    const Matrix ones = project_f(make(1, 2, 4, "1,0,0,0"), b);
    CHECK(ones.rows() == 5);
    CHECK(ones.cols() == 25);
    CHECK(linalg::max_abs(ones - Matrix::Ones(5, 25)) <= 1e-10);

    const auto spec = make(1, 2, 4, kExampleF);
    const Matrix f = project_f(spec, b);
    double worst = 0.0;
    for (int i = 0; i <= 10; ++i)
      for (int j = 0; j <= 10; ++j)
        for (int k = 0; k <= 10; ++k) {
          const double t = i / 10.0, x = j / 10.0, y = k / 10.0;
          const Vector psi_hat = linalg::kron(b.eval(x), b.eval(y));
          const double approx = b.eval(t).dot(f * psi_hat);
          worst = std::max(worst, std::abs(approx - spec.f.evaluate(t, x, y)));
        }
    CHECK(worst <= 1e-10);
  }

  TEST_CASE("zero source gives the zero solution") {
    const auto sol = solve(make(0.7, 1.3, 4, ""));
    CHECK(linalg::max_abs(sol.k()) == 0.0);
    CHECK(sol.evaluate(0.4, 0.5, 0.6) == 0.0);
  }

  TEST_CASE("example problem recovers the exact solution") {
    const auto sol = solve(make(1, 2, 4, kExampleF));
    CHECK(max_grid_error(sol, PolySum3::parse("1,2,3,3")) <= 1e-8);
    CHECK(sol.residual() <= 1e-10);
    CHECK(sol.evaluate(0.5, 1, 1) == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(sol.evaluate(1, 0.5, 0.5) == doctest::Approx(0.015625).epsilon(1e-10));
    CHECK(std::abs(sol.evaluate(0, 0.3, 0.9)) <= 1e-12);
    CHECK(linalg::max_abs(sol.u_coeffs() - sol.matrices().p_alpha.transpose() * sol.k()) <= 1e-15);
  }

  TEST_CASE("higher degrees stay exact") {
    for (int m : {5, 6}) {
      const auto sol = solve(make(1, 2, m, kExampleF));
      CHECK(max_grid_error(sol, PolySum3::parse("1,2,3,3")) <= 1e-8);
    }
  }

  TEST_CASE("conditioning limits exactness at larger degrees") {
    // I − (H_x+H_y)ᵀ⊗Pᵀ is unipotent here but far from normal; its condition
    // number is about 4e13 at M = 8 and the LU flags M = 10 as singular.
    const auto sol = solve(make(1, 2, 8, kExampleF));
    CHECK(sol.residual() <= 1e-10);
    CHECK(max_grid_error(sol, PolySum3::parse("1,2,3,3")) <= 1e-4);
    CHECK(error_of([] { solve(make(1, 2, 10, kExampleF)); }) == ErrorCode::singular);
  }

  TEST_CASE("residual stays small across orders") {
    for (double alpha : {0.3, 0.8, 1.0})
      for (double beta : {0.5, 1.5, 2.0}) {
        const auto sol = solve(make(alpha, beta, 4, kExampleF));
        CHECK(sol.residual() <= 1e-10);
        // The L2-projected P does not vanish at t = 0, so u(0,x,y) is only
        // small; the side-condition report must carry that defect.
        const auto report = check_side_conditions(sol, 11);
        CHECK(report.initial >= std::abs(sol.evaluate(0.0, 0.5, 0.5)));
      }
  }

  TEST_CASE("zero initial value when the solution lies in the span") {
    const auto sol = solve(make(1, 2, 4, kExampleF));
    CHECK(check_side_conditions(sol, 11).initial <= 1e-9);
  }

  TEST_CASE("linearity in the source") {
    const auto a = solve(make(0.8, 1.5, 4, "1,1,2,0;0.5,0,1,1"));
    const auto b = solve(make(0.8, 1.5, 4, "-2,2,0,3"));
    const auto ab = solve(make(0.8, 1.5, 4, "1,1,2,0;0.5,0,1,1;-2,2,0,3"));
    for (double t : {0.2, 0.9})
      for (double x : {0.1, 0.6})
        for (double y : {0.3, 1.0})
          CHECK(std::abs(ab.evaluate(t, x, y) - a.evaluate(t, x, y) - b.evaluate(t, x, y)) <= 1e-9);
  }

  TEST_CASE("x-y symmetry") {
    const auto sol = solve(make(0.9, 1.7, 5, kExampleF));
    for (double t : {0.3, 0.7})
      for (double x : {0.1, 0.45, 0.8})
        for (double y : {0.2, 0.65})
          CHECK(std::abs(sol.evaluate(t, x, y) - sol.evaluate(t, y, x)) <= 1e-9);
  }

  TEST_CASE("evaluation and derivatives") {
    const auto sol = solve(make(1, 2, 4, kExampleF));
    CHECK(error_of([&] { sol.evaluate(1.1, 0, 0); }) == ErrorCode::domain);
    CHECK(error_of([&] { sol.evaluate(0.5, -0.1, 0); }) == ErrorCode::domain);
    // u = t²x³y³
    CHECK(sol.derivative_x(0.5, 0.4, 0.6) == doctest::Approx(0.25 * 3 * 0.16 * 0.216).epsilon(1e-8));
    CHECK(sol.derivative_y(0.5, 0.4, 0.6) == doctest::Approx(0.25 * 0.064 * 3 * 0.36).epsilon(1e-8));
  }

  TEST_CASE("error and solution grids") {
    const auto sol = solve(make(1, 2, 4, kExampleF));
    const auto exact = PolySum3::parse("1,2,3,3");
    const auto e = error_grid(sol, exact, {Axis::t, 0.5}, 11);
    REQUIRE(e.size() == 121);
    double worst = 0.0;
    for (const auto& g : e) worst = std::max(worst, g.value);
    CHECK(worst <= 1e-8);
    CHECK(e[12].coord1 == doctest::Approx(0.1));
    CHECK(e[12].coord2 == doctest::Approx(0.1));

    const auto ex = error_grid(sol, exact, {Axis::x, 0.5}, 11);
    const auto ey = error_grid(sol, exact, {Axis::y, 0.5}, 11);
    double mx = 0.0, my = 0.0;
    for (const auto& g : ex) mx = std::max(mx, g.value);
    for (const auto& g : ey) my = std::max(my, g.value);
    CHECK(std::abs(mx - my) <= 1e-12);

    // Comparing with itself: build the solution as a PolySum from its own grid.
    const auto self = solution_grid(sol, {Axis::t, 0.5}, 5);
    for (const auto& g : self)
      CHECK(std::abs(g.value - sol.evaluate(0.5, g.coord1, g.coord2)) == 0.0);

    CHECK(slice_axes(Axis::t) == std::pair{Axis::x, Axis::y});
    CHECK(slice_axes(Axis::x) == std::pair{Axis::t, Axis::y});
    CHECK(slice_axes(Axis::y) == std::pair{Axis::t, Axis::x});
    CHECK(error_of([&] { solution_grid(sol, {Axis::t, 1.5}, 5); }) == ErrorCode::domain);
    CHECK(error_of([&] { solution_grid(sol, {Axis::t, 0.5}, 1); }) == ErrorCode::domain);
  }

  TEST_CASE("side conditions of the example") {
    const auto sol = solve(make(1, 2, 4, kExampleF));
    const auto r = check_side_conditions(sol, 11);
    CHECK(r.initial <= 1e-12);
    CHECK(r.x_zero <= 1e-9);
    CHECK(r.y_zero <= 1e-9);
    CHECK(r.dx_at_x_zero <= 1e-8);
    CHECK(r.dy_at_y_zero <= 1e-8);
  }

  TEST_CASE("side conditions are reported, not enforced") {
    // u = t (constant in space) violates u(t,0,y) = 0.
    const auto sol = solve(make(1, 2, 3, "1,0,0,0"));
    const auto r = check_side_conditions(sol, 11);
    CHECK(r.initial <= 1e-12);
    CHECK(r.x_zero == doctest::Approx(1.0).epsilon(1e-8));
  }

  TEST_CASE("problem validation") {
    CHECK(error_of([] { make(1.5, 2, 4, "").validate(); }) == ErrorCode::domain);
    CHECK(error_of([] { make(1, 2.5, 4, "").validate(); }) == ErrorCode::domain);
    CHECK(error_of([] { make(1, 2, 0, "").validate(); }) == ErrorCode::domain);
    CHECK(error_of([] { make(1, 2, 13, "").validate(); }) == ErrorCode::domain);
    CHECK(error_of([] { solve(make(1, 2, 13, "")); }) == ErrorCode::domain);
    ProblemSpec negative = make(1, 2, 4, "");
    negative.f.add({1.0, -0.5, 0.0, 0.0});
    CHECK(error_of([&] { negative.validate(); }) == ErrorCode::domain);
  }
}

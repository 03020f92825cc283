#include "fredholm/errors.hpp"
#include "fredholm/galerkin.hpp"
#include "fredholm/problems.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace fredholm;

namespace {

FredholmProblem make(const char* kernel, const char* rhs, const char* a, const char* b, const char* lambda = "-1",
                     const char* coefficient = "1") {
  return FredholmProblem(ExprAst::parse(coefficient), Scalar::parse(lambda), ExprAst::parse(kernel),
                         ExprAst::parse(rhs), Scalar::parse(a), Scalar::parse(b));
}

}  // namespace

TEST_CASE("Scalar") {
  const auto s = Scalar::parse("10/9");
  CHECK(s.exact() == Rational(10, 9));
  CHECK(s.value() == doctest::Approx(10.0 / 9.0).epsilon(1e-15));
  CHECK_FALSE(Scalar::parse("pi").exact());
  CHECK_THROWS_AS(Scalar::parse("x"), InputError);
}

TEST_CASE("FredholmProblem validation") {
  CHECK_THROWS_AS(make("x*t", "1", "1", "1"), BadInterval);
  CHECK_THROWS_AS(make("x*t", "t", "0", "1"), InputError);
  CHECK_THROWS_AS(make("x*t", "1", "0", "1", "-1", "t"), InputError);
  CHECK(make("x*t", "1", "0", "1").to_exact());
  CHECK_FALSE(make("exp(x*t)", "1", "0", "1").to_exact());
  CHECK_FALSE(make("x*t", "1", "0", "pi").to_exact());
}

TEST_CASE("assemble") {
  const auto ex1 = builtin("example1");
  const auto sys = assemble(ex1, 3, 32);
  for (double f : sys.load) CHECK(std::abs(f - 0.5) <= 1e-13);

  const auto ex4 = builtin("example4");
  const auto sys4 = assemble(ex4, 3, 32);
  CHECK(std::abs(sys4.load[0] - (6.0 * std::numbers::e - 16.0)) <= 1e-12);

  // lambda = 0: Bernstein Gram matrix, symmetric positive definite.
  const auto gram = assemble(make("exp(x*t)", "1", "0", "1", "0"), 4, 32);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) {
      CHECK(gram.matrix(i, j) == doctest::Approx(gram.matrix(j, i)).epsilon(1e-14));
      CHECK(gram.matrix(i, j) == doctest::Approx(testing::gram_entry(i, j, 4).to_double()).epsilon(1e-13));
    }
  CHECK_NOTHROW(lu_factor(gram.matrix));

  try {
    (void)assemble(make("log(x - t)", "1", "0", "1"), 2, 8);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("kernel") != std::string::npos);
    CHECK(e.offset() == 0);
  }
}

TEST_CASE("solve: float path on the exponential kernel") {
  const auto sol = solve(builtin("example4"), 3, SolveMode::Float, 32);
  CHECK(sol.mode == SolveMode::Float);
  CHECK(sol.quadrature_order == 32);
  CHECK(sol.condition > 1.0);
  const auto mono = sol.monomial();
  const double published[] = {-0.185387, -0.188957, -0.078167, -0.051702};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(mono[k] - published[k]) <= 5e-6);
}

TEST_CASE("solve: float agrees with exact on polynomial problems") {
  const auto ex1 = builtin("example1");
  const auto fl = solve(ex1, 3, SolveMode::Float);
  const auto ex = solve(ex1, 3, SolveMode::Exact);
  REQUIRE(ex.exact_coefficients);
  for (int i = 0; i <= 3; ++i) CHECK(std::abs(fl.coefficients[i] - (*ex.exact_coefficients)[i].to_double()) <= 1e-10);
  CHECK(solve(ex1, 3).mode == SolveMode::Exact);  // auto picks the exact path
  CHECK(solve(builtin("example4"), 3).mode == SolveMode::Float);
  CHECK_THROWS_AS(solve(builtin("example4"), 3, SolveMode::Exact), ExactPathUnavailable);
}

TEST_CASE("solve: degenerate kernel is singular on both paths") {
  const auto degenerate = make("1", "x", "0", "1");
  CHECK_THROWS_AS(solve(degenerate, 3, SolveMode::Float), SingularSystem);
  CHECK_THROWS_AS(solve(degenerate, 3, SolveMode::Exact), SingularSystem);
  CHECK_THROWS_AS(solve(degenerate, 3), SingularSystem);
}

TEST_CASE("solve: ill-conditioned degree attaches a warning") {
  const auto sol = solve(make("x*t", "exp(x)", "0", "1", "0"), 30, SolveMode::Float, 64);
  CHECK(sol.condition > kConditionWarningThreshold);
  CHECK_FALSE(sol.warnings.empty());
  CHECK(solve(builtin("example4"), 3, SolveMode::Float).warnings.empty());
}

TEST_CASE("evaluate_solution") {
  const auto ex2 = solve(builtin("example2"), 3, SolveMode::Float);
  CHECK(std::abs(evaluate_solution(ex2, 0.5) - 0.5) <= 1e-12);
  CHECK(evaluate_solution(ex2, -1.0) == ex2.coefficients.front());
  CHECK_THROWS_AS(evaluate_solution(ex2, 1.5), OutOfInterval);

  const auto ex4 = solve(builtin("example4"), 5, SolveMode::Float, 32);
  CHECK(std::abs(evaluate_solution(ex4, 0.5) - (-0.3059387842)) <= 1e-6);
}

TEST_CASE("error_table") {
  const auto ex4 = builtin("example4");
  const auto sol = solve(ex4, 3, SolveMode::Float, 32);
  const auto rows = error_table(sol, *ex4.exact(), make_grid(0.0, 1.0));
  REQUIRE(rows.size() == 11);
  CHECK(rows[0].error == doctest::Approx(9.40e-4).epsilon(0.05));
  CHECK(rows[7].x == doctest::Approx(0.7));
  CHECK(rows[7].error == doctest::Approx(4.8e-5).epsilon(0.10));
  for (const auto& r : rows) CHECK(r.kind == ErrorKind::Relative);

  const auto ex2 = builtin("example2");
  const auto rows2 = error_table(solve(ex2, 3), *ex2.exact(), make_grid(-1.0, 1.0));
  REQUIRE(rows2.size() == 11);
  for (const auto& r : rows2) CHECK(r.error <= 1e-12);
  CHECK(rows2[5].kind == ErrorKind::AbsoluteAtZero);  // phi(0) = 0
  CHECK(rows2[4].kind == ErrorKind::Relative);
}

TEST_CASE("make_grid") {
  const auto g = make_grid(0.0, 1.0);
  REQUIRE(g.size() == 11);
  CHECK(g.back() == 1.0);
  CHECK(make_grid(-1.0, 1.0, 0.5) == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
  CHECK(make_grid(0.0, 1.0, 0.3).size() == 4);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 0.0), InputError);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, -0.1), InputError);
}

TEST_CASE("convergence_study") {
  const auto ex4 = convergence_study(builtin("example4"), {3, 4, 5, 6}, 32);
  REQUIRE(ex4.size() == 4);
  for (std::size_t k = 1; k < ex4.size(); ++k) CHECK(ex4[k].max_error < ex4[k - 1].max_error);

  for (const auto& row : convergence_study(builtin("example1"), {2, 3, 4, 5})) CHECK(row.max_error <= 1e-12);
  CHECK(convergence_study(builtin("example3"), {3}).front().max_error <= 1e-12);

  CHECK_THROWS_AS(convergence_study(make("x*t", "1", "0", "1"), {3}), InputError);
}

TEST_CASE("Galerkin residual is orthogonal to the basis") {
  const auto ex4 = builtin("example4");
  for (int n = 3; n <= 6; ++n) {
    const auto sol = solve(ex4, n, SolveMode::Float, 32);
    const double bound = 1e-8 * testing::load_norm(ex4, n, 32);
    for (double r : testing::residual_moments(ex4, sol, 32)) CHECK(std::abs(r) <= bound);
  }
}

TEST_CASE("exact representability in float mode") {
  for (const char* name : {"example1", "example2", "example3"}) {
    const auto p = builtin(name);
    for (int n = 3; n <= 6; ++n) {
      const auto sol = solve(p, n, SolveMode::Float);
      for (double x : make_grid(p.a().value(), p.b().value(), (p.b().value() - p.a().value()) / 20))
        CHECK(std::abs(evaluate_solution(sol, x) - p.exact()->evaluate(x)) <= 1e-10);
    }
  }
}

#include <gtest/gtest.h>

#include "liesym/lie.hpp"
#include "suites.hpp"
#include "support.hpp"

using namespace liesym;
using namespace liesym::testing;

TEST(Lie, DerivativeExamples) {
  EXPECT_TRUE(lie_derivative(F({"x1", "-x2"}, 2), P("x1*x2", 2)).is_zero());
  EXPECT_TRUE(lie_derivative(F({"x1^2", "x2"}, 2), P("7", 2)).is_zero());
  const auto f = F({"x1^2 - x2*x3", "2*x1*x2", "2*x1*x3"}, 3);
  EXPECT_EQ(lie_derivative(f, P("x1^2 + x2*x3", 3)), P("2*x1*(x1^2 + x2*x3)", 3));
}

TEST(Lie, BracketExamples) {
  const auto f = F({"x1^2 - x2^2", "2*x1*x2"}, 2), h = F({"x1", "x2"}, 2);
  EXPECT_EQ(lie_bracket(h, f), f);
  EXPECT_TRUE(lie_bracket(f, f).is_zero());
  const auto e1 = F({"1", "0"}, 2);
  EXPECT_EQ(lie_bracket(h, e1), -e1);
  EXPECT_THROW(lie_bracket(F({"x1"}, 2), h), std::invalid_argument);
}

TEST(Lie, Divergence) {
  EXPECT_EQ(S(divergence(F({"x1", "2*x2"}, 2))), "3");
  EXPECT_EQ(S(divergence(F({"x1^2 - x2^2", "2*x1*x2"}, 2))), "4*x1");
  EXPECT_TRUE(divergence(F({"3", "-1"}, 2)).is_zero());
}

TEST(Lie, SolutionPreserving) {
  const auto f = F({"x1 + x2", "x2^2"}, 2);
  EXPECT_TRUE(check_solution_preserving(VectorField::identity(2), f, f).holds);

  const std::vector<std::string> v{"x1", "x2", "y1", "y2"};
  auto Q = [&](const std::string& s) { return parse_poly(s, v); };
  const VectorField fhat{Q("y1"), Q("y2"), Q("(x1^2 + x2^2)*x1"), Q("(x1^2 + x2^2)*x2")};
  const VectorField Phi{Q("x1^2 + x2^2"), Q("y1^2 + y2^2"), Q("x1*y1 + x2*y2"), Q("x1*y2 - x2*y1")};
  const auto g = F({"2*x3", "2*x1*x3", "x2 + x1^2", "0"}, 4);
  const auto check = check_solution_preserving(Phi, fhat, g);
  EXPECT_TRUE(check.holds) << S(check.residual);

  // f = C0 x + phi C1 x with C0 = diag(1,-1), C1 = diag(2,3) reduces to 5 w^2.
  const auto fh = F({"x1 + 2*x1^2*x2", "-x2 + 3*x1*x2^2"}, 2);
  EXPECT_TRUE(check_solution_preserving(F({"x1*x2"}, 2), fh, F({"5*x1^2"}, 1)).holds);
  EXPECT_FALSE(check_solution_preserving(F({"x1*x2"}, 2), fh, F({"4*x1^2"}, 1)).holds);
}

TEST(Lie, TransportSeries) {
  const auto s = lie_series_transport(F({"x1"}, 1), P("x1", 1), 3);
  ASSERT_EQ(s.coefficients.size(), 4u);
  EXPECT_EQ(S(s.coefficients[0]), "x1");
  EXPECT_EQ(S(s.coefficients[1]), "x1");
  EXPECT_EQ(S(s.coefficients[2]), "1/2*x1");
  EXPECT_EQ(S(s.coefficients[3]), "1/6*x1");
  const auto zero = lie_series_transport(VectorField(1, 1), P("x1^2", 1), 2);
  EXPECT_TRUE(zero.coefficients[1].is_zero());
}

TEST(Lie, AdjointSeries) {
  const auto f = F({"x1^2 - x2^2", "2*x1*x2"}, 2), h = F({"x1", "x2"}, 2);
  const auto s = adjoint_series(h, f, 2);
  ASSERT_EQ(s.coefficients.size(), 3u);
  EXPECT_EQ(s.coefficients[0], f);
  EXPECT_EQ(s.coefficients[1], f);
  EXPECT_EQ(s.coefficients[2], Rational(1, 2) * f);
  const auto self = adjoint_series(f, f, 2);
  EXPECT_TRUE(self.coefficients[1].is_zero());
}

TEST(LieProperty, Jacobi) {
  const auto r = jacobi_suite(101, 100);
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(LieProperty, Derivations) {
  const auto r = derivation_suite(102, 100);
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(LieProperty, ModuleRule) {
  const auto r = module_rule_suite(103, 100);
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(LieProperty, Functoriality) {
  const auto r = functoriality_suite(104, 100);
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(LieProperty, RiccatiCommute) {
  const auto r = riccati_suite(105, 100);
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(LieProperty, PointwiseOracle) {
  const auto r = bracket_oracle_suite(106, 100);
  EXPECT_TRUE(r.ok()) << r.summary();
}

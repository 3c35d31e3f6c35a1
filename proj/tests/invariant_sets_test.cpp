#include <gtest/gtest.h>

#include "liesym/invariant_sets.hpp"
#include "liesym/lie.hpp"
#include "support.hpp"

using namespace liesym;
using namespace liesym::testing;

namespace {

const VectorField cone_f() { return F({"x1^2 - x2*x3", "2*x1*x2", "2*x1*x3"}, 3); }

}  // namespace

TEST(InvariantSets, FirstIntegral) {
  const auto r = first_integral_check(F({"x1", "-x2"}, 2), P("x1*x2", 2));
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.constant_warning);
  const auto c = first_integral_check(F({"x1", "-x2"}, 2), P("5", 2));
  EXPECT_TRUE(c.holds);
  EXPECT_TRUE(c.constant_warning);
  const auto no = first_integral_check(F({"x1", "x2"}, 2), P("x1*x2", 2));
  EXPECT_FALSE(no.holds);
  EXPECT_EQ(S(no.lie_derivative), "2*x1*x2");
}

TEST(InvariantSets, SemiInvariantCone) {
  const auto c = semi_invariant_cofactor(cone_f(), P("x1^2 + x2*x3", 3));
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(S(c.cofactor), "2*x1");
  EXPECT_FALSE(semi_invariant_cofactor(F({"x2", "-x1"}, 2), P("x1", 2)).valid);
  EXPECT_THROW(semi_invariant_cofactor(cone_f(), Poly(3)), std::invalid_argument);
}

TEST(InvariantSets, InvariantVariety) {
  // Coordinate axes {x1 = x2 = 0} of a linear field.
  const auto r = invariant_variety_check(F({"x1 + x2", "2*x2", "x3"}, 3), {P("x1", 3), P("x2", 3)}, 0);
  ASSERT_TRUE(r.invariant);
  const auto f = F({"x1 + x2", "2*x2", "x3"}, 3);
  const std::vector<Poly> phis{P("x1", 3), P("x2", 3)};
  for (std::size_t i = 0; i < 2; ++i) {
    Poly rhs(3);
    for (std::size_t j = 0; j < 2; ++j) rhs += r.cofactors[i][j] * phis[j];
    EXPECT_EQ(lie_derivative(f, phis[i]), rhs);
  }
  EXPECT_FALSE(invariant_variety_check(F({"x2", "x1", "x3"}, 3), {P("x1", 3)}, 2).invariant);

  // The origin of the planar field; cofactors are not unique, so check the identity.
  const auto g = F({"x1^2 - x2^2", "2*x1*x2"}, 2);
  const std::vector<Poly> axes{P("x1", 2), P("x2", 2)};
  const auto o = invariant_variety_check(g, axes, 1);
  ASSERT_TRUE(o.invariant);
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_EQ(lie_derivative(g, axes[i]), o.cofactors[i][0] * axes[0] + o.cofactors[i][1] * axes[1]);
  for (int bound = 0; bound <= 3; ++bound)
    EXPECT_FALSE(invariant_variety_check(F({"x1"}, 1), {P("x1 - 1", 1)}, bound).invariant);
}

TEST(InvariantSets, MinorsOfConeExample) {
  const auto h1 = F({"x1", "3*x2", "-x3"}, 3), h2 = F({"x1*x2", "x2^2", "-x1^2"}, 3);
  const auto two = minors({cone_f(), h1}, 2);
  ASSERT_EQ(two.minors.size(), 3u);
  EXPECT_EQ(two.minors[0].value, P("(x1^2 - 3*x2*x3)*x2", 3));
  EXPECT_EQ(two.minors[1].value, P("(-3*x1^2 + x2*x3)*x3", 3));
  EXPECT_EQ(two.minors[2].value, P("-8*x1*x2*x3", 3));
  const auto three = minors({cone_f(), h1, h2}, 3);
  ASSERT_EQ(three.minors.size(), 1u);
  EXPECT_EQ(three.minors[0].value, P("-x2*(x1^2 + x2*x3)^2", 3));
  EXPECT_THROW(minors({cone_f()}, 2), std::invalid_argument);
}

TEST(InvariantSets, IntegratingFactor) {
  const auto c = integrating_factor(F({"x1^2 - x2^2", "2*x1*x2"}, 2), F({"x1", "x2"}, 2));
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(S(c.psi), "-x1^2*x2 - x2^3");
  EXPECT_EQ(S(c.cofactor), "4*x1");
  const auto lin = integrating_factor(F({"x1", "2*x2"}, 2), F({"x1", "x2"}, 2));
  EXPECT_EQ(S(lin.psi), "-x1*x2");
  EXPECT_EQ(S(lin.cofactor), "3");
  EXPECT_TRUE(lin.valid);
  EXPECT_THROW(integrating_factor(F({"x1", "x2"}, 2), F({"x1", "x2"}, 2)), std::invalid_argument);
}

TEST(InvariantSets, IntegratingFactorForNonSymmetryIsRejected) {
  const auto c = integrating_factor(F({"x2", "-x1 + x1^2"}, 2), F({"1", "0"}, 2));
  EXPECT_FALSE(c.valid);
}

TEST(InvariantSets, JacobiMultiplierOfCone) {
  const auto h1 = F({"x1", "3*x2", "-x3"}, 3), h2 = F({"x1*x2", "x2^2", "-x1^2"}, 3);
  const auto c = jacobi_multiplier(cone_f(), {h1, h2});
  EXPECT_EQ(c.psi, P("-x2*(x1^2 + x2*x3)^2", 3));
  EXPECT_EQ(c.cofactor, divergence(cone_f()));
  EXPECT_EQ(lie_derivative(cone_f(), c.psi), divergence(cone_f()) * c.psi);
  EXPECT_TRUE(c.valid);
}

TEST(InvariantSets, RankStrata) {
  const auto Phi = F({"x1*x2", "x3*x4", "x1^3*x4^2", "x2^3*x3^2"}, 4);
  const auto fam = jacobian_rank_minors(Phi, 3);
  ASSERT_EQ(fam.minors.size(), 1u);
  EXPECT_TRUE(fam.minors[0].value.is_zero());
  EXPECT_FALSE(jacobian_rank_minors(Phi, 2).minors.empty());
  EXPECT_TRUE(jacobian_rank_minors(Phi, 4).minors.empty());
  auto at = [&](std::initializer_list<int> p) {
    std::vector<Rational> x;
    for (int v : p) x.push_back(v);
    return jacobian_rank_at(Phi, x);
  };
  EXPECT_EQ(at({1, 1, 1, 1}), 3u);
  EXPECT_EQ(at({0, 1, 0, 1}), 2u);
  EXPECT_EQ(at({0, 0, 1, 1}), 1u);
  EXPECT_EQ(at({0, 0, 0, 0}), 0u);
}

TEST(InvariantSets, ReduceByInvariants) {
  const auto f = F({"x1 + 2*x1^2*x2", "-x2 + 3*x1*x2^2"}, 2);
  const auto g = reduce_by_invariants(f, {P("x1*x2", 2)}, 3);
  ASSERT_TRUE(g);
  EXPECT_EQ(S(*g), "(5*x1^2)");
  EXPECT_FALSE(reduce_by_invariants(F({"x1", "x2^2"}, 2), {P("x1", 2), P("x1*x2", 2)}, 1));

  const std::vector<std::string> v{"x1", "x2", "y1", "y2"};
  const VectorField fhat{P("y1", v), P("y2", v), P("(x1^2 + x2^2)*x1", v), P("(x1^2 + x2^2)*x2", v)};
  const std::vector<Poly> phis{P("x1^2 + x2^2", v), P("y1^2 + y2^2", v), P("x1*y1 + x2*y2", v),
                               P("x1*y2 - x2*y1", v)};
  const auto gc = reduce_by_invariants(fhat, phis, 2);
  ASSERT_TRUE(gc);
  EXPECT_EQ(*gc, F({"2*x3", "2*x1*x3", "x2 + x1^2", "0"}, 4));
  EXPECT_TRUE(check_solution_preserving(VectorField(phis), fhat, *gc).holds);
}

#include <gtest/gtest.h>

#include "liesym/lie.hpp"
#include "liesym/normalform.hpp"
#include "liesym/toral.hpp"
#include "suites.hpp"
#include "support.hpp"

using namespace liesym;
using namespace liesym::testing;

namespace {

std::vector<std::string> texts(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

std::vector<std::string> texts(const std::vector<FieldMonomial>& fs, std::size_t n) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(S(monomial_field(n, f)));
  return out;
}

}  // namespace

TEST(Toral, ParseWeights) {
  const auto B = DiagonalAction::parse("1/2, -3/4,0");
  EXPECT_EQ(B.to_string(), "1/2,-3/4,0");
  std::vector<std::string> iw;
  for (const auto& z : B.integer_weights()) iw.push_back(z.get_str());
  EXPECT_EQ(iw, (std::vector<std::string>{"2", "-3", "0"}));
  EXPECT_THROW(DiagonalAction::parse("1,,2"), std::invalid_argument);
  EXPECT_THROW(DiagonalAction::parse(""), std::invalid_argument);
}

TEST(Toral, Weight) {
  const DiagonalAction B = DiagonalAction::parse("2,-2,3,-3");
  EXPECT_EQ(sgn(weight(B, Monomial{1, 1, 0, 0})), 0);
  EXPECT_EQ(sgn(weight(DiagonalAction::parse("1,2"), Monomial{2, 0}, 1)), 0);
  EXPECT_THROW(weight(B, Monomial{1, 1}), std::invalid_argument);
}

TEST(Toral, GeneratorsOfFourWeightAction) {
  const auto gens = invariant_monomial_generators(DiagonalAction::parse("2,-2,3,-3"), 5);
  EXPECT_EQ(texts(gens), (std::vector<std::string>{"x1*x2", "x3*x4", "x1^3*x4^2", "x2^3*x3^2"}));
  EXPECT_EQ(texts(invariant_monomial_generators(DiagonalAction::parse("1,-1"), 3)), (std::vector<std::string>{"x1*x2"}));
}

TEST(Toral, MultiTorusGenerators) {
  const std::vector<DiagonalAction> torus{DiagonalAction::parse("1,-1,0"), DiagonalAction::parse("0,1,-1")};
  EXPECT_EQ(texts(invariant_monomial_generators(torus, 4)), (std::vector<std::string>{"x1*x2*x3"}));
}

TEST(Toral, Trivial) {
  EXPECT_TRUE(invariant_algebra_is_trivial(DiagonalAction::parse("1,2,3")));
  EXPECT_TRUE(invariant_algebra_is_trivial(DiagonalAction::parse("-1,-1/2")));
  EXPECT_FALSE(invariant_algebra_is_trivial(DiagonalAction::parse("1,-1")));
  EXPECT_FALSE(invariant_algebra_is_trivial(DiagonalAction::parse("1,0")));
}

TEST(Toral, Relations) {
  const auto gens = invariant_monomial_generators(DiagonalAction::parse("2,-2,3,-3"), 5);
  const auto rels = monomial_relations(gens);
  ASSERT_EQ(rels.size(), 1u);
  std::vector<long> r;
  for (const auto& z : rels[0]) r.push_back(z.get_si());
  EXPECT_EQ(r, (std::vector<long>{3, 2, -1, -1}));
  EXPECT_EQ(relation_binomial(rels[0]).to_string(default_var_names(4, "y")), "y1^3*y2^2 - y3*y4");
  // The relation holds on the monomials themselves.
  Poly lhs = Poly(gens[0], 1).pow(3) * Poly(gens[1], 1).pow(2);
  Poly rhs = Poly(gens[2], 1) * Poly(gens[3], 1);
  EXPECT_EQ(lhs, rhs);
  EXPECT_TRUE(monomial_relations({Monomial{1, 0}, Monomial{0, 1}}).empty());
}

TEST(Toral, WeightDecomposition) {
  const DiagonalAction B = DiagonalAction::parse("1,-1");
  const Poly p = P("x1*x2 + x1^2 + 3*x2 - 1", 2);
  const auto parts = weight_decompose(B, p);
  Poly sum(2);
  for (const auto& [chi, q] : parts) {
    EXPECT_EQ(lie_derivative(B.field(), q), chi * q);
    sum += q;
  }
  EXPECT_EQ(sum, p);
  EXPECT_EQ(S(parts.at(Rational(0))), "x1*x2 - 1");
  EXPECT_EQ(S(parts.at(Rational(2))), "x1^2");
  EXPECT_EQ(S(parts.at(Rational(-1))), "3*x2");
}

TEST(Toral, CentralizerMonomials) {
  EXPECT_EQ(texts(centralizer_monomials(DiagonalAction::parse("1,2"), 2), 2),
            (std::vector<std::string>{"(x1, 0)", "(0, x2)", "(0, x1^2)"}));
}

TEST(ToralProperty, BruteForceCompleteness) {
  const auto r = toral_bruteforce_suite(301, 60);
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(NormalForm, Resonances) {
  EXPECT_EQ(texts(resonant_monomials(DiagonalAction::parse("1,2"), 2), 2), (std::vector<std::string>{"(0, x1^2)"}));
  EXPECT_EQ(texts(resonant_monomials(DiagonalAction::parse("1,-1"), 3), 2),
            (std::vector<std::string>{"(x1^2*x2, 0)", "(0, x1*x2^2)"}));
}

TEST(NormalForm, LinearPartPreconditions) {
  EXPECT_THROW(diagonal_linear_part(F({"x1 + 1", "x2"}, 2)), std::invalid_argument);
  EXPECT_THROW(diagonal_linear_part(F({"x1 + x2", "x2"}, 2)), std::invalid_argument);
  EXPECT_THROW(normal_form(F({"x1", "x2"}, 2), 0), std::invalid_argument);
}

TEST(NormalForm, RemovesNonresonantQuadratic) {
  const auto f = F({"x1 + x2^2", "2*x2"}, 2);
  const auto out = normal_form(f, 2);
  // Homological oracle: x2^2 e1 has weight 2*2 - 1 = 3, so h2 = (x2^2/3, 0).
  const Rational coeff = Rational(1) / (Rational(2) * 2 - 1);
  EXPECT_EQ(out.generators.at(0), F({"x2^2", "0"}, 2) * coeff);
  EXPECT_EQ(S(out.normal_form), "(x1, 2*x2)");
  EXPECT_EQ(out.transformation, F({"x1 + x2^2/3", "x2"}, 2));
  const auto rep = verify_normal_form(out, f);
  EXPECT_TRUE(rep.valid);
  EXPECT_TRUE(rep.conjugacy_residual.is_zero());
}

TEST(NormalForm, ResonantFieldUnchanged) {
  const auto f = F({"x1", "2*x2 + x1^2"}, 2);
  for (int N = 2; N <= 5; ++N) {
    const auto out = normal_form(f, N);
    EXPECT_EQ(out.normal_form, f);
    for (const auto& h : out.generators) EXPECT_TRUE(h.is_zero());
    EXPECT_TRUE(verify_normal_form(out, f).valid);
  }
}

TEST(NormalForm, CorruptedGeneratorIsRejected) {
  const auto f = F({"x1 + x2^2", "2*x2"}, 2);
  auto out = normal_form(f, 3);
  out.generators[0] = out.generators[0] * Rational(2);
  const auto rep = verify_normal_form(out, f);
  EXPECT_FALSE(rep.valid);
  EXPECT_FALSE(rep.generators_consistent);

  auto bad = normal_form(f, 3);
  bad.transformation = F({"x1 + 2/3*x2^2", "x2"}, 2);
  const auto rep2 = verify_normal_form(bad, f);
  EXPECT_FALSE(rep2.valid);
  EXPECT_EQ(rep2.residual_degree, 2);
}

TEST(NormalForm, CentralizerCompatibility) {
  // Every homogeneous part of f* commutes with the linear part.
  const auto f = F({"x1 + x1*x2 + x2^3", "-x2 + x1^2*x2 + x1*x2"}, 2);
  const auto out = normal_form(f, 4);
  const auto As = out.linear_part.field();
  EXPECT_TRUE(lie_bracket(As, out.normal_form).is_zero());
}

TEST(NormalForm, FirstIntegralInheritance) {
  const auto fstar = F({"x1 + x1^2*x2", "-x2 - x1*x2^2"}, 2);
  EXPECT_TRUE(truncated_first_integral_inheritance_check(fstar, P("x1*x2", 2), 4));
  EXPECT_THROW(truncated_first_integral_inheritance_check(fstar, P("x1", 2), 4), std::invalid_argument);
}

TEST(NormalFormProperty, RandomFields) {
  const auto r = normal_form_suite(401, 50, 4);
  EXPECT_TRUE(r.ok()) << r.summary();
}

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liesym/linalg.hpp"
#include "liesym/monomial.hpp"
#include "liesym/poly.hpp"
#include "liesym/rational.hpp"
#include "liesym/vector_field.hpp"

namespace liesym {

/// Semisimple linear field x -> diag(lambda_1, ..., lambda_n) x.
class DiagonalAction {
 public:
  explicit DiagonalAction(std::vector<Rational> weights);

  /// Comma-separated rationals, e.g. "2,-2,3,-3" or "1/2,1".
  static DiagonalAction parse(std::string_view text);

  std::size_t size() const { return weights_.size(); }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }

  /// Weights scaled by a positive factor to coprime integers. All zero
  /// weights stay zero.
  std::vector<mpz_class> integer_weights() const;

  /// The diagonal linear vector field.
  VectorField field() const { return VectorField::diagonal(weights_); }

  std::string to_string() const;

  bool operator==(const DiagonalAction&) const = default;

 private:
  std::vector<Rational> weights_;
};

/// Integer vector, e.g. an exponent relation.
using IntVector = std::vector<mpz_class>;

/// sum_i m_i lambda_i, minus lambda_j when a component is given.
Rational weight(const DiagonalAction& B, const Monomial& m, std::optional<std::size_t> component = {});

/// Weight-0 monomials of degree 1..degree_bound that are not a product of
/// two nonconstant weight-0 monomials. AscendingGraded order. Completeness
/// is only claimed up to the bound.
std::vector<Monomial> invariant_monomial_generators(const DiagonalAction& B, int degree_bound);

/// Same for a multi-parameter torus: weight 0 for every row at once.
std::vector<Monomial> invariant_monomial_generators(const std::vector<DiagonalAction>& torus, int degree_bound);

/// No nonzero d >= 0 with sum d_i lambda_i = 0, i.e. all weights nonzero
/// and of one sign.
bool invariant_algebra_is_trivial(const DiagonalAction& B);

/// Primitive integer basis of the kernel of the exponent matrix whose
/// columns are the generators. A vector a encodes
/// prod phi_i^(a_i+) = prod phi_i^(a_i-). First nonzero entry is positive.
std::vector<IntVector> monomial_relations(const std::vector<Monomial>& generators);

/// The binomial prod y_i^(a_i+) - prod y_i^(a_i-) in r variables.
Poly relation_binomial(const IntVector& relation);

/// Splits p into components p_chi with X_B(p_chi) = chi * p_chi.
std::map<Rational, Poly> weight_decompose(const DiagonalAction& B, const Poly& p);

/// Monomial fields x^m e_j of degree <= degree_bound commuting with B,
/// i.e. weight(m) = lambda_j.
std::vector<FieldMonomial> centralizer_monomials(const DiagonalAction& B, int degree_bound);

}  // namespace liesym

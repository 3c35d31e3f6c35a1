#pragma once

#include <optional>
#include <vector>

#include "liesym/lie.hpp"
#include "liesym/linalg.hpp"
#include "liesym/poly.hpp"
#include "liesym/vector_field.hpp"

namespace liesym {

/// Certificate for [h, f] = lambda * f.
struct CofactorCertificate {
  Poly cofactor;
  VectorField residual;  // [h, f] - lambda * f, zero on success
  int degree_bound = 0;
};

/// Linearly independent fields of degree <= degree_bound, in reduced
/// echelon form over the field-monomial coordinates.
struct FieldBasis {
  int degree_bound = 0;
  std::vector<VectorField> basis;
};

struct NormalizerElement {
  VectorField field;
  Poly cofactor;
};

struct NormalizerBasis {
  int degree_bound = 0;
  int cofactor_degree_bound = 0;
  std::vector<NormalizerElement> basis;
};

/// h is an infinitesimal symmetry of f iff [h, f] = 0; residual is [h, f].
ResidualCheck check_symmetry(const VectorField& h, const VectorField& f);

/// max(0, deg [h,f] - low degree of f).
int default_cofactor_bound(const VectorField& h, const VectorField& f);

/// Looks for a polynomial lambda of degree <= bound with [h, f] = lambda f.
/// Without a bound, default_cofactor_bound() is used. Throws if f = 0.
std::optional<CofactorCertificate> check_orbital_symmetry(const VectorField& h, const VectorField& f,
                                                          std::optional<int> cofactor_degree_bound = {});

/// Basis of {h : deg h <= degree_bound, [h, f] = 0}.
FieldBasis centralizer_basis(const VectorField& f, int degree_bound);

/// Basis of the solutions (h, lambda) of [h, f] = lambda f.
NormalizerBasis normalizer_basis(const VectorField& f, int degree_bound, int cofactor_degree_bound);

/// f(T x) = T f(x)? T is n x n and must be invertible.
bool check_linear_symmetry(const RationalMatrix& T, const VectorField& f);

/// (g(x), Dg(x) y) as a field on Q^2n with variables (x, y).
VectorField prolong(const VectorField& g);

/// Point-symmetry condition for x'' = h(x, x'):
///   D^2 g(x)(y,y) + Dg(x) h(x,y) = D_1 h(x,y) g(x) + D_2 h(x,y) Dg(x) y.
/// g lives on Q^n, h has n components in the 2n variables (x, y).
/// The residual is left side minus right side.
ResidualCheck check_second_order_symmetry(const VectorField& g, const VectorField& h);

/// All g of degree <= degree_bound satisfying the point-symmetry condition.
FieldBasis second_order_symmetries(const VectorField& h, int degree_bound);

/// True iff v lies in the rational span of the given fields.
bool in_span(const std::vector<VectorField>& basis, const VectorField& v);

}  // namespace liesym

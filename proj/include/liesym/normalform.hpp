#pragma once

#include <vector>

#include "liesym/linalg.hpp"
#include "liesym/toral.hpp"
#include "liesym/vector_field.hpp"

namespace liesym {

/// Truncated Poincare-Dulac normalisation of x' = f(x).
///
/// `transformation` maps solutions of x' = normal_form(x) to solutions of
/// x' = f(x) modulo terms of degree > truncation_degree, and equals
/// (id + h_2) o (id + h_3) o ... o (id + h_N) truncated at N.
struct NormalFormResult {
  int truncation_degree = 0;
  DiagonalAction linear_part{std::vector<Rational>{0}};
  VectorField normal_form;
  std::vector<VectorField> generators;  // h_2, ..., h_N, each homogeneous
  VectorField transformation;
  std::vector<FieldMonomial> resonant_monomials;  // degrees 2..N
};

struct NormalFormReport {
  bool valid = false;
  bool commutes = false;             // [A, f*_r] = 0 for every r
  bool generators_consistent = false;  // generators compose to the transformation
  int residual_degree = -1;          // lowest degree <= N where conjugacy fails, -1 if none
  VectorField conjugacy_residual;    // (D Phi f* - f o Phi) truncated at N
};

/// x^m e_j of exactly this degree with sum m_i lambda_i - lambda_j = 0.
std::vector<FieldMonomial> resonant_monomials(const DiagonalAction& A, int degree);

/// Diagonal of Df(0). Throws if f(0) != 0 or Df(0) is not diagonal.
DiagonalAction diagonal_linear_part(const VectorField& f);

/// Normalises degree by degree up to `truncation_degree` (>= 1). Each
/// nonresonant term a x^m e_j is removed with generator coefficient
/// a / (sum m_i lambda_i - lambda_j); resonant terms stay.
NormalFormResult normal_form(const VectorField& f, int truncation_degree);

/// (id + h_2) o ... o (id + h_N), truncated at N.
VectorField compose_generators(const std::vector<VectorField>& generators, std::size_t nvars, int truncation_degree);

NormalFormReport verify_normal_form(const NormalFormResult& result, const VectorField& f);

/// For f* in normal form and phi with X_{f*}(phi) free of terms of degree
/// <= N, checks X_{A_s}(phi truncated at N) = 0. Throws std::invalid_argument
/// if the truncated first-integral hypothesis fails.
bool truncated_first_integral_inheritance_check(const VectorField& fstar, const Poly& phi, int truncation_degree);

}  // namespace liesym

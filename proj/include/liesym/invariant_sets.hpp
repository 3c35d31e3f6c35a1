#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "liesym/kernels.hpp"
#include "liesym/lie.hpp"
#include "liesym/poly.hpp"
#include "liesym/vector_field.hpp"

namespace liesym {

struct FirstIntegralResult {
  bool holds = false;
  bool constant_warning = false;  // phi is constant: trivially conserved
  Poly lie_derivative;
};

/// Certificate for X_f(psi) = mu * psi.
struct SemiInvariantCertificate {
  Poly psi;
  Poly cofactor;
  bool valid = false;
  bool constant_warning = false;
  int degree_bound = 0;  // bound used for the cofactor search
};

struct InvariantVarietyResult {
  bool invariant = false;
  /// cofactors[i][j] = mu_ij with X_f(phi_i) = sum_j mu_ij phi_j; empty rows
  /// when not invariant.
  std::vector<std::vector<Poly>> cofactors;
  int degree_bound = 0;
};

/// Minors of the matrix whose columns are the given fields. Entries are
/// ordered by row subset, then column subset, both lexicographic; rows
/// ascending, columns in the given order.
struct MinorFamily {
  std::size_t size = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Minor> minors;
};

FirstIntegralResult first_integral_check(const VectorField& f, const Poly& phi);

/// Finds mu with deg mu <= deg X_f(psi) - low degree(psi). Throws if psi = 0.
SemiInvariantCertificate semi_invariant_cofactor(const VectorField& f, const Poly& psi);

/// Solves X_f(phi_i) = sum_j mu_ij phi_j with deg mu_ij <= mu_degree_bound.
InvariantVarietyResult invariant_variety_check(const VectorField& f, const std::vector<Poly>& phis,
                                               int mu_degree_bound);

/// All size x size minors of (fields[0] | fields[1] | ...).
MinorFamily minors(const std::vector<VectorField>& fields, std::size_t size);

/// phi = det(f, h) on Q^2 with the check X_f(phi) = div f * phi.
/// Throws if phi is identically zero.
SemiInvariantCertificate integrating_factor(const VectorField& f, const VectorField& h);

/// phi = det(f, h_1, ..., h_{n-1}) with the check X_f(phi) = div f * phi.
SemiInvariantCertificate jacobi_multiplier(const VectorField& f, const std::vector<VectorField>& hs);

/// All (s+1) x (s+1) minors of D Phi. Empty when s >= min(rows, cols).
MinorFamily jacobian_rank_minors(const VectorField& Phi, std::size_t s);

/// Exact rank of D Phi at a rational point.
std::size_t jacobian_rank_at(const VectorField& Phi, std::span<const Rational> point);

/// Looks for g on Q^r with X_f(phi_i) = g_i(phi_1, ..., phi_r), deg g_i <= bound.
std::optional<VectorField> reduce_by_invariants(const VectorField& f, const std::vector<Poly>& phis,
                                                int target_degree_bound);

}  // namespace liesym

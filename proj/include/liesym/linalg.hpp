#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "liesym/monomial.hpp"
#include "liesym/poly.hpp"
#include "liesym/rational.hpp"
#include "liesym/vector_field.hpp"

namespace liesym {

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Rational>& data() const { return data_; }

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduces M in place to reduced row echelon form and returns the pivot
/// columns in increasing order. Uses the parallel elimination kernel.
std::vector<std::size_t> rref(RationalMatrix& M);

std::size_t rank(RationalMatrix M);

/// Basis of {x : M x = 0}, returned as the rows of a matrix in reduced
/// row echelon form (so the result is canonical for the subspace).
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& M);

/// One solution of M x = b with all free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& M, std::span<const Rational> b);

/// Brings a list of vectors to reduced row echelon form, dropping zero rows.
std::vector<std::vector<Rational>> echelon_basis(std::vector<std::vector<Rational>> vectors);

/// Coefficient coordinates for polynomial-valued linear systems.
///
/// Unknowns are indexed 0..n-1. Each unknown contributes a vector of
/// polynomials (one per equation block); LinearSystem collects the monomials
/// that appear and assembles the coefficient matrix, one row per
/// (block, monomial) pair.
class LinearSystem {
 public:
  LinearSystem(std::size_t blocks, std::size_t nvars) : blocks_(blocks), nvars_(nvars) {}

  /// Adds a column; `image` holds one polynomial per block.
  std::size_t add_unknown(std::vector<Poly> image);
  std::size_t unknowns() const { return columns_.size(); }

  /// Null space of the assembled homogeneous system, echelon-canonical.
  std::vector<std::vector<Rational>> nullspace() const;
  /// Solves sum_k c_k * image_k = rhs; nullopt if no solution.
  std::optional<std::vector<Rational>> solve(const std::vector<Poly>& rhs) const;

 private:
  struct RowKey {
    std::size_t block;
    Monomial mono;
  };
  RationalMatrix assemble(const std::vector<Poly>* rhs) const;

  std::size_t blocks_;
  std::size_t nvars_;
  std::vector<std::vector<Poly>> columns_;
};

/// Generic polynomial ansatz: c_0 * m_0 + ... with one unknown per monomial
/// of degree <= max_degree (AscendingGraded order).
std::vector<Monomial> ansatz_monomials(std::size_t nvars, int max_degree);

/// Polynomial from coefficients over a monomial list.
Poly poly_from_coeffs(std::size_t nvars, std::span<const Monomial> monos, std::span<const Rational> coeffs);

/// A monomial vector field x^m e_j.
struct FieldMonomial {
  Monomial mono;
  std::size_t component;
  bool operator==(const FieldMonomial&) const = default;
};

/// All x^m e_j with deg m <= max_degree, ordered by monomial (AscendingGraded)
/// then component.
std::vector<FieldMonomial> field_ansatz(std::size_t nvars, int max_degree);

VectorField field_from_coeffs(std::size_t nvars, std::span<const FieldMonomial> basis,
                              std::span<const Rational> coeffs);

VectorField monomial_field(std::size_t nvars, const FieldMonomial& fm);

}  // namespace liesym

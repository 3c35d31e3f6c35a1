#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "liesym/poly.hpp"

namespace liesym {

/// Ordered list of polynomial components over a common variable set.
///
/// When the component count equals nvars() this is a vector field on Q^n;
/// otherwise it is read as a polynomial map Q^n -> Q^r.
class VectorField {
 public:
  VectorField() : nvars_(0) {}
  /// Zero field with `components` components.
  VectorField(std::size_t nvars, std::size_t components);
  explicit VectorField(std::vector<Poly> components);
  VectorField(std::initializer_list<Poly> components)
      : VectorField(std::vector<Poly>(components)) {}

  static VectorField identity(std::size_t nvars);
  /// Linear field x -> M x for a row-major rows x nvars matrix.
  static VectorField linear(std::size_t nvars, std::span<const Rational> matrix);
  /// Diagonal linear field x -> diag(weights) x.
  static VectorField diagonal(std::span<const Rational> weights);

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return comps_.size(); }
  bool is_square() const { return comps_.size() == nvars_; }
  bool is_zero() const;
  int degree() const;
  int low_degree() const;

  const Poly& operator[](std::size_t i) const { return comps_[i]; }
  Poly& operator[](std::size_t i) { return comps_[i]; }
  const std::vector<Poly>& components() const { return comps_; }

  auto begin() const { return comps_.begin(); }
  auto end() const { return comps_.end(); }

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  VectorField& operator*=(const Rational& c);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(VectorField a, const Rational& c) { return a *= c; }
  friend VectorField operator*(const Rational& c, VectorField a) { return a *= c; }
  /// Scalar polynomial times field, componentwise.
  friend VectorField operator*(const Poly& p, const VectorField& f);

  bool operator==(const VectorField& other) const {
    return nvars_ == other.nvars_ && comps_ == other.comps_;
  }

  VectorField homogeneous_part(int degree) const;
  VectorField truncate(int max_degree) const;
  VectorField embed(std::size_t new_nvars, std::size_t offset = 0) const;
  std::vector<Rational> evaluate(std::span<const Rational> point) const;

  /// "(c1, c2, ...)" with canonical component text.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t nvars_;
  std::vector<Poly> comps_;
};

/// Dense matrix of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

  /// Matrix whose columns are the given fields (all of equal length).
  static PolyMatrix from_columns(std::span<const VectorField> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }

  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  PolyMatrix submatrix(std::span<const std::size_t> row_idx,
                       std::span<const std::size_t> col_idx) const;

  /// Matrix-vector product with a field of length cols().
  VectorField apply(const VectorField& v) const;

  bool operator==(const PolyMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Poly> data_;
};

/// Entry (i, j) = dF_i / dx_j.
PolyMatrix jacobian(const VectorField& F);

/// F o G for F: Q^m -> Q^k and G: Q^n -> Q^m. Throws on dimension mismatch.
VectorField compose(const VectorField& F, const VectorField& G);
Poly compose(const Poly& p, const VectorField& G);

/// compose() with every intermediate product truncated at max_degree.
/// Only valid when G has no constant term.
VectorField compose_truncated(const VectorField& F, const VectorField& G, int max_degree);

/// Exact determinant. Cofactor expansion up to 3x3, fraction-free Bareiss
/// elimination above that. Throws on non-square input.
Poly determinant(const PolyMatrix& M);

/// Cofactor expansion for any size; kept as the independent reference.
Poly determinant_cofactor(const PolyMatrix& M);

/// Bareiss elimination for any size.
Poly determinant_bareiss(const PolyMatrix& M);

}  // namespace liesym

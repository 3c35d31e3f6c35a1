#include "liesym/linalg.hpp"

#include <stdexcept>

#include "liesym/kernels.hpp"

namespace liesym {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
}

std::vector<std::size_t> rref(RationalMatrix& M) { return parallel::rref(M); }

std::size_t rank(RationalMatrix M) { return rref(M).size(); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& M) {
  RationalMatrix R = M;
  const auto pivots = rref(R);
  std::vector<bool> is_pivot(R.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < R.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(R.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -R(i, f);
    basis.push_back(std::move(v));
  }
  return echelon_basis(std::move(basis));
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& M, std::span<const Rational> b) {
  if (b.size() != M.rows()) throw std::invalid_argument("right-hand side length mismatch");
  const std::size_t n = M.cols();
  RationalMatrix A(M.rows(), n + 1);
  for (std::size_t r = 0; r < M.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) A(r, c) = M(r, c);
    A(r, n) = b[r];
  }
  const auto pivots = rref(A);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = A(i, n);
  return x;
}

std::vector<std::vector<Rational>> echelon_basis(std::vector<std::vector<Rational>> vectors) {
  if (vectors.empty()) return {};
  const std::size_t cols = vectors.front().size();
  RationalMatrix A(vectors.size(), cols);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != cols) throw std::invalid_argument("vectors have different lengths");
    for (std::size_t c = 0; c < cols; ++c) A(r, c) = vectors[r][c];
  }
  const auto pivots = rref(A);
  std::vector<std::vector<Rational>> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.emplace_back(A.row(r).begin(), A.row(r).end());
  return out;
}

std::size_t LinearSystem::add_unknown(std::vector<Poly> image) {
  if (image.size() != blocks_) throw std::invalid_argument("unknown image has wrong block count");
  for (const auto& p : image)
    if (p.nvars() != nvars_) throw std::invalid_argument("unknown image has wrong variable count");
  columns_.push_back(std::move(image));
  return columns_.size() - 1;
}

RationalMatrix LinearSystem::assemble(const std::vector<Poly>* rhs) const {
  // Row keys in (block, ascending graded monomial) order.
  std::vector<std::map<Monomial, std::size_t, AscendingGraded>> rows(blocks_);
  auto collect = [&](const std::vector<Poly>& image) {
    for (std::size_t b = 0; b < blocks_; ++b)
      for (const auto& [m, c] : image[b].terms()) rows[b].try_emplace(m, 0);
  };
  for (const auto& col : columns_) collect(col);
  if (rhs) collect(*rhs);
  std::size_t next = 0;
  for (auto& block : rows)
    for (auto& [m, idx] : block) idx = next++;

  const std::size_t ncols = columns_.size() + (rhs ? 1 : 0);
  RationalMatrix A(next, ncols);
  auto place = [&](const std::vector<Poly>& image, std::size_t col) {
    for (std::size_t b = 0; b < blocks_; ++b)
      for (const auto& [m, c] : image[b].terms()) A(rows[b].at(m), col) = c;
  };
  for (std::size_t k = 0; k < columns_.size(); ++k) place(columns_[k], k);
  if (rhs) place(*rhs, columns_.size());
  return A;
}

std::vector<std::vector<Rational>> LinearSystem::nullspace() const {
  if (columns_.empty()) return {};
  RationalMatrix A = assemble(nullptr);
  if (A.rows() == 0) {
    std::vector<std::vector<Rational>> basis;
    for (std::size_t k = 0; k < columns_.size(); ++k) {
      std::vector<Rational> v(columns_.size());
      v[k] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  return liesym::nullspace(A);
}

std::optional<std::vector<Rational>> LinearSystem::solve(const std::vector<Poly>& rhs) const {
  if (rhs.size() != blocks_) throw std::invalid_argument("right-hand side has wrong block count");
  RationalMatrix A = assemble(&rhs);
  const std::size_t n = columns_.size();
  if (A.rows() == 0) return std::vector<Rational>(n);
  RationalMatrix M(A.rows(), n);
  std::vector<Rational> b(A.rows());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) M(r, c) = A(r, c);
    b[r] = A(r, n);
  }
  if (n == 0) {
    for (const auto& v : b)
      if (sgn(v) != 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  return liesym::solve(M, b);
}

std::vector<Monomial> ansatz_monomials(std::size_t nvars, int max_degree) {
  return monomials_up_to(nvars, max_degree);
}

Poly poly_from_coeffs(std::size_t nvars, std::span<const Monomial> monos, std::span<const Rational> coeffs) {
  if (monos.size() != coeffs.size()) throw std::invalid_argument("coefficient count mismatch");
  Poly p(nvars);
  for (std::size_t i = 0; i < monos.size(); ++i) p.add_term(monos[i], coeffs[i]);
  return p;
}

std::vector<FieldMonomial> field_ansatz(std::size_t nvars, int max_degree) {
  std::vector<FieldMonomial> out;
  for (const auto& m : monomials_up_to(nvars, max_degree))
    for (std::size_t j = 0; j < nvars; ++j) out.push_back({m, j});
  return out;
}

VectorField field_from_coeffs(std::size_t nvars, std::span<const FieldMonomial> basis,
                              std::span<const Rational> coeffs) {
  if (basis.size() != coeffs.size()) throw std::invalid_argument("coefficient count mismatch");
  VectorField f(nvars, nvars);
  for (std::size_t i = 0; i < basis.size(); ++i) f[basis[i].component].add_term(basis[i].mono, coeffs[i]);
  return f;
}

VectorField monomial_field(std::size_t nvars, const FieldMonomial& fm) {
  VectorField f(nvars, nvars);
  f[fm.component].add_term(fm.mono, Rational(1));
  return f;
}

}  // namespace liesym

#include "liesym/kernels.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liesym {

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

void accumulate(Poly::TermMap& acc, const Monomial& m, const Rational& c) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) acc.erase(it);
  }
}

Poly from_terms(std::size_t nvars, const Poly::TermMap& acc) {
  Poly out(nvars);
  for (const auto& [m, c] : acc) out.add_term(m, c);
  return out;
}

// Pivot step shared by both rref variants; returns the nonzero columns of
// the normalised pivot row at or after `col`.
std::vector<std::size_t> normalise_pivot_row(RationalMatrix& M, std::size_t r, std::size_t col) {
  const Rational inv = 1 / M(r, col);
  std::vector<std::size_t> nz;
  for (std::size_t c = col; c < M.cols(); ++c) {
    if (sgn(M(r, c)) == 0) continue;
    M(r, c) *= inv;
    nz.push_back(c);
  }
  return nz;
}

void eliminate_row(RationalMatrix& M, std::size_t i, std::size_t r, std::size_t col,
                   const std::vector<std::size_t>& nz) {
  if (sgn(M(i, col)) == 0) return;
  const Rational factor = M(i, col);
  for (auto c : nz) M(i, c) -= factor * M(r, c);
}

std::optional<std::size_t> find_pivot(const RationalMatrix& M, std::size_t from, std::size_t col) {
  for (std::size_t p = from; p < M.rows(); ++p)
    if (sgn(M(p, col)) != 0) return p;
  return std::nullopt;
}

void swap_rows(RationalMatrix& M, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < M.cols(); ++c) std::swap(M(a, c), M(b, c));
}

std::vector<Monomial> enumerate_monomials(std::size_t nvars, int max_degree) {
  std::vector<Monomial> all;
  for (int d = 1; d <= max_degree; ++d) {
    auto slice = monomials_of_degree(nvars, d);
    all.insert(all.end(), slice.begin(), slice.end());
  }
  return all;
}

bool has_zero_weight(const Monomial& m, const std::vector<std::vector<Rational>>& rows) {
  for (const auto& w : rows) {
    Rational s(0);
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (m[i] != 0) s += w[i] * m[i];
    if (sgn(s) != 0) return false;
  }
  return true;
}

std::size_t weight_width(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) throw std::invalid_argument("weight matrix has no rows");
  const std::size_t n = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("weight rows have different lengths");
  return n;
}

}  // namespace

namespace serial {

Poly multiply(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
  Poly::TermMap acc;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) accumulate(acc, ma * mb, ca * cb);
  return from_terms(a.nvars(), acc);
}

std::vector<std::size_t> rref(RationalMatrix& M) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < M.cols() && r < M.rows(); ++col) {
    auto p = find_pivot(M, r, col);
    if (!p) continue;
    swap_rows(M, *p, r);
    const auto nz = normalise_pivot_row(M, r, col);
    for (std::size_t i = 0; i < M.rows(); ++i)
      if (i != r) eliminate_row(M, i, r, col, nz);
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::vector<Minor> minors(const PolyMatrix& M, std::size_t size) {
  std::vector<Minor> out;
  for (const auto& rows : index_subsets(M.rows(), size))
    for (const auto& cols : index_subsets(M.cols(), size))
      out.push_back({rows, cols, determinant(M.submatrix(rows, cols))});
  return out;
}

std::vector<Monomial> zero_weight_monomials(const std::vector<std::vector<Rational>>& weight_rows, int max_degree) {
  const std::size_t n = weight_width(weight_rows);
  std::vector<Monomial> out;
  for (auto& m : enumerate_monomials(n, max_degree))
    if (has_zero_weight(m, weight_rows)) out.push_back(std::move(m));
  return out;
}

}  // namespace serial

namespace parallel {

Poly multiply(const Poly& a, const Poly& b, std::size_t grain) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
  if (a.size() * b.size() < grain || a.size() < 2) return serial::multiply(a, b);
  std::vector<const Poly::TermMap::value_type*> left;
  left.reserve(a.size());
  for (const auto& t : a.terms()) left.push_back(&t);
  const auto n = static_cast<std::ptrdiff_t>(left.size());
  Poly::TermMap acc;
#pragma omp parallel
  {
    Poly::TermMap local;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const auto& [ma, ca] = *left[static_cast<std::size_t>(i)];
      for (const auto& [mb, cb] : b.terms()) accumulate(local, ma * mb, ca * cb);
    }
#pragma omp critical(liesym_multiply_merge)
    for (const auto& [m, c] : local) accumulate(acc, m, c);
  }
  return from_terms(a.nvars(), acc);
}

std::vector<std::size_t> rref(RationalMatrix& M) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const auto rows = static_cast<std::ptrdiff_t>(M.rows());
  const bool big = M.rows() * M.cols() >= 4096;
  for (std::size_t col = 0; col < M.cols() && r < M.rows(); ++col) {
    auto p = find_pivot(M, r, col);
    if (!p) continue;
    swap_rows(M, *p, r);
    const auto nz = normalise_pivot_row(M, r, col);
#pragma omp parallel for schedule(dynamic, 16) if (big)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
      const auto row = static_cast<std::size_t>(i);
      if (row != r) eliminate_row(M, row, r, col, nz);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::vector<Minor> minors(const PolyMatrix& M, std::size_t size) {
  const auto row_sets = index_subsets(M.rows(), size);
  const auto col_sets = index_subsets(M.cols(), size);
  std::vector<Minor> out(row_sets.size() * col_sets.size());
  const auto total = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(dynamic) if (total > 8)
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const auto& rows = row_sets[idx / col_sets.size()];
    const auto& cols = col_sets[idx % col_sets.size()];
    out[idx] = {rows, cols, determinant(M.submatrix(rows, cols))};
  }
  return out;
}

std::vector<Monomial> zero_weight_monomials(const std::vector<std::vector<Rational>>& weight_rows, int max_degree) {
  const std::size_t n = weight_width(weight_rows);
  auto all = enumerate_monomials(n, max_degree);
  std::vector<char> keep(all.size(), 0);
  const auto total = static_cast<std::ptrdiff_t>(all.size());
#pragma omp parallel for schedule(static) if (total > 1024)
  for (std::ptrdiff_t i = 0; i < total; ++i)
    keep[static_cast<std::size_t>(i)] = has_zero_weight(all[static_cast<std::size_t>(i)], weight_rows) ? 1 : 0;
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (keep[i]) out.push_back(std::move(all[i]));
  return out;
}

}  // namespace parallel

}  // namespace liesym

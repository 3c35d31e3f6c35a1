#include "liesym/vector_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace liesym {

VectorField::VectorField(std::size_t nvars, std::size_t components)
    : nvars_(nvars), comps_(components, Poly(nvars)) {}

VectorField::VectorField(std::vector<Poly> components) : comps_(std::move(components)) {
  if (comps_.empty()) throw std::invalid_argument("vector field needs at least one component");
  nvars_ = comps_.front().nvars();
  for (const auto& c : comps_)
    if (c.nvars() != nvars_) throw std::invalid_argument("vector field components disagree on variable count");
}

VectorField VectorField::identity(std::size_t nvars) {
  VectorField f(nvars, nvars);
  for (std::size_t i = 0; i < nvars; ++i) f.comps_[i] = Poly::variable(nvars, i);
  return f;
}

VectorField VectorField::linear(std::size_t nvars, std::span<const Rational> matrix) {
  if (nvars == 0 || matrix.size() % nvars != 0) throw std::invalid_argument("matrix size does not match nvars");
  const std::size_t rows = matrix.size() / nvars;
  VectorField f(nvars, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < nvars; ++j)
      f.comps_[i].add_term(Monomial::unit(nvars, j), matrix[i * nvars + j]);
  return f;
}

VectorField VectorField::diagonal(std::span<const Rational> weights) {
  const std::size_t n = weights.size();
  VectorField f(n, n);
  for (std::size_t i = 0; i < n; ++i) f.comps_[i].add_term(Monomial::unit(n, i), weights[i]);
  return f;
}

bool VectorField::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Poly& p) { return p.is_zero(); });
}

int VectorField::degree() const {
  int d = -1;
  for (const auto& c : comps_) d = std::max(d, c.degree());
  return d;
}

int VectorField::low_degree() const {
  int d = -1;
  for (const auto& c : comps_) {
    if (c.is_zero()) continue;
    d = d < 0 ? c.low_degree() : std::min(d, c.low_degree());
  }
  return d;
}

VectorField VectorField::operator-() const {
  VectorField r = *this;
  for (auto& c : r.comps_) c = -c;
  return r;
}

VectorField& VectorField::operator+=(const VectorField& other) {
  if (other.nvars_ != nvars_ || other.size() != size()) throw std::invalid_argument("vector field shape mismatch");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += other.comps_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  if (other.nvars_ != nvars_ || other.size() != size()) throw std::invalid_argument("vector field shape mismatch");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= other.comps_[i];
  return *this;
}

VectorField& VectorField::operator*=(const Rational& c) {
  for (auto& p : comps_) p *= c;
  return *this;
}

VectorField operator*(const Poly& p, const VectorField& f) {
  VectorField r = f;
  for (auto& c : r.comps_) c = p * c;
  return r;
}

VectorField VectorField::homogeneous_part(int degree) const {
  VectorField r = *this;
  for (auto& c : r.comps_) c = c.homogeneous_part(degree);
  return r;
}

VectorField VectorField::truncate(int max_degree) const {
  VectorField r = *this;
  for (auto& c : r.comps_) c = c.truncate(max_degree);
  return r;
}

VectorField VectorField::embed(std::size_t new_nvars, std::size_t offset) const {
  VectorField r = *this;
  r.nvars_ = new_nvars;
  for (auto& c : r.comps_) c = c.embed(new_nvars, offset);
  return r;
}

std::vector<Rational> VectorField::evaluate(std::span<const Rational> point) const {
  std::vector<Rational> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) out.push_back(c.evaluate(point));
  return out;
}

std::string VectorField::to_string(const std::vector<std::string>& names) const {
  std::string out = "(";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) out += ", ";
    out += comps_[i].to_string(names);
  }
  return out + ")";
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, Poly(nvars)) {}

PolyMatrix PolyMatrix::from_columns(std::span<const VectorField> columns) {
  if (columns.empty()) throw std::invalid_argument("matrix needs at least one column");
  const std::size_t rows = columns.front().size();
  const std::size_t nvars = columns.front().nvars();
  PolyMatrix M(rows, columns.size(), nvars);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows || columns[c].nvars() != nvars)
      throw std::invalid_argument("columns have different shapes");
    for (std::size_t r = 0; r < rows; ++r) M(r, c) = columns[c][r];
  }
  return M;
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
  PolyMatrix S(row_idx.size(), col_idx.size(), nvars_);
  for (std::size_t r = 0; r < row_idx.size(); ++r)
    for (std::size_t c = 0; c < col_idx.size(); ++c) S(r, c) = (*this)(row_idx[r], col_idx[c]);
  return S;
}

VectorField PolyMatrix::apply(const VectorField& v) const {
  if (v.size() != cols_ || v.nvars() != nvars_) throw std::invalid_argument("matrix-vector shape mismatch");
  VectorField out(nvars_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

PolyMatrix jacobian(const VectorField& F) {
  PolyMatrix J(F.size(), F.nvars(), F.nvars());
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = 0; j < F.nvars(); ++j) J(i, j) = partial(F[i], j);
  return J;
}

namespace {

// Substitutes G into p, caching powers of each component of G.
class Substitution {
 public:
  Substitution(const VectorField& G, int max_degree) : G_(G), max_degree_(max_degree), powers_(G.size()) {}

  Poly apply(const Poly& p) {
    if (p.nvars() != G_.size())
      throw std::invalid_argument("compose: inner map has " + std::to_string(G_.size()) +
                                  " components, outer expects " + std::to_string(p.nvars()) + " variables");
    Poly out(G_.nvars());
    for (const auto& [m, c] : p.terms()) {
      if (max_degree_ >= 0 && m.degree() > max_degree_) continue;
      Poly t(G_.nvars(), c);
      for (std::size_t i = 0; i < m.nvars() && !t.is_zero(); ++i) {
        if (m[i] == 0) continue;
        t = cut(t * power(i, m[i]));
      }
      out += t;
    }
    return out;
  }

 private:
  Poly cut(const Poly& p) const { return max_degree_ >= 0 ? p.truncate(max_degree_) : p; }

  const Poly& power(std::size_t i, unsigned e) {
    auto& cache = powers_[i];
    if (cache.empty()) cache.emplace_back(G_.nvars(), Rational(1));
    while (cache.size() <= e) cache.push_back(cut(cache.back() * G_[i]));
    return cache[e];
  }

  const VectorField& G_;
  int max_degree_;
  std::vector<std::vector<Poly>> powers_;
};

}  // namespace

Poly compose(const Poly& p, const VectorField& G) {
  Substitution s(G, -1);
  return s.apply(p);
}

VectorField compose(const VectorField& F, const VectorField& G) {
  if (F.nvars() != G.size())
    throw std::invalid_argument("compose: dimension mismatch (" + std::to_string(G.size()) + " -> " +
                                std::to_string(F.nvars()) + ")");
  Substitution s(G, -1);
  std::vector<Poly> comps;
  for (const auto& c : F) comps.push_back(s.apply(c));
  return VectorField(std::move(comps));
}

VectorField compose_truncated(const VectorField& F, const VectorField& G, int max_degree) {
  if (F.nvars() != G.size()) throw std::invalid_argument("compose: dimension mismatch");
  for (const auto& g : G)
    if (sgn(g.constant_term()) != 0) throw std::invalid_argument("truncated compose needs G(0) = 0");
  Substitution s(G, max_degree);
  std::vector<Poly> comps;
  for (const auto& c : F) comps.push_back(s.apply(c));
  return VectorField(std::move(comps));
}

namespace {

void require_square(const PolyMatrix& M) {
  if (M.rows() != M.cols())
    throw std::invalid_argument("determinant of non-square " + std::to_string(M.rows()) + "x" +
                                std::to_string(M.cols()) + " matrix");
}

Poly cofactor_rec(const PolyMatrix& M, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = M.rows();
  if (row == n) return Poly(M.nvars(), Rational(1));
  Poly sum(M.nvars());
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (!M(row, c).is_zero()) {
      std::vector<std::size_t> rest = cols;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      Poly sub = cofactor_rec(M, rest, row + 1);
      if (!sub.is_zero()) {
        Poly t = M(row, c) * sub;
        if (sign > 0) sum += t; else sum -= t;
      }
    }
    sign = -sign;
  }
  return sum;
}

}  // namespace

Poly determinant_cofactor(const PolyMatrix& M) {
  require_square(M);
  if (M.rows() == 0) return Poly(M.nvars(), Rational(1));
  std::vector<std::size_t> cols(M.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return cofactor_rec(M, cols, 0);
}

Poly determinant_bareiss(const PolyMatrix& M) {
  require_square(M);
  const std::size_t n = M.rows();
  if (n == 0) return Poly(M.nvars(), Rational(1));
  PolyMatrix A = M;
  Poly prev(M.nvars(), Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && A(swap, k).is_zero()) ++swap;
      if (swap == n) return Poly(M.nvars());
      for (std::size_t c = 0; c < n; ++c) std::swap(A(k, c), A(swap, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = A(k, k) * A(i, j) - A(i, k) * A(k, j);
        A(i, j) = divide_exact(num, prev);
      }
      A(i, k) = Poly(M.nvars());
    }
    prev = A(k, k);
  }
  Poly det = A(n - 1, n - 1);
  return negate ? -det : det;
}

Poly determinant(const PolyMatrix& M) {
  require_square(M);
  return M.rows() <= 3 ? determinant_cofactor(M) : determinant_bareiss(M);
}

}  // namespace liesym

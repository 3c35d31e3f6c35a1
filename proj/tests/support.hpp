#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "liesym/parser.hpp"
#include "liesym/poly.hpp"
#include "liesym/vector_field.hpp"

namespace liesym::testing {

inline std::vector<std::string> xs(std::size_t n) { return default_var_names(n); }

inline Poly P(const std::string& text, std::size_t n) { return parse_poly(text, xs(n)); }

inline Poly P(const std::string& text, const std::vector<std::string>& vars) { return parse_poly(text, vars); }

inline VectorField F(const std::vector<std::string>& comps, std::size_t n) {
  std::vector<Poly> ps;
  for (const auto& c : comps) ps.push_back(P(c, n));
  return VectorField(std::move(ps));
}

inline std::string S(const Poly& p) { return p.to_string(); }
inline std::string S(const VectorField& f) { return f.to_string(); }

/// Seeded source of small random polynomial data.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int range = 5, int max_den = 3) {
    int num = integer(-range, range);
    int den = integer(1, max_den);
    return make_rational(num, den);
  }

  Rational nonzero_rational(int range = 5, int max_den = 3) {
    Rational q;
    do q = rational(range, max_den);
    while (sgn(q) == 0);
    return q;
  }

  Monomial monomial(std::size_t n, int min_deg, int max_deg) {
    const int d = integer(min_deg, max_deg);
    std::vector<std::uint32_t> e(n, 0);
    for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1))];
    return Monomial(std::move(e));
  }

  Poly poly(std::size_t n, int max_deg, int max_terms = 4, int min_deg = 0) {
    Poly p(n);
    const int terms = integer(0, max_terms);
    for (int t = 0; t < terms; ++t) p.add_term(monomial(n, min_deg, max_deg), rational());
    return p;
  }

  VectorField field(std::size_t n, int max_deg, int max_terms = 3, int min_deg = 0) {
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < n; ++i) comps.push_back(poly(n, max_deg, max_terms, min_deg));
    return VectorField(std::move(comps));
  }

  std::vector<Rational> point(std::size_t n) {
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(rational(4, 3));
    return p;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

// ---- evaluation oracles, written without the library's calculus --------

inline Rational power(const Rational& base, unsigned e) {
  Rational r(1);
  for (unsigned k = 0; k < e; ++k) r *= base;
  return r;
}

/// d/dt p(x + t v) at t = 0, from the term list.
inline Rational directional(const Poly& p, const std::vector<Rational>& x, const std::vector<Rational>& v) {
  Rational total(0);
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0 || sgn(v[i]) == 0) continue;
      Rational t = c * m[i] * v[i];
      for (std::size_t k = 0; k < m.nvars(); ++k) t *= power(x[k], k == i ? m[k] - 1 : m[k]);
      total += t;
    }
  }
  return total;
}

/// [f, g](x) = Dg(x) f(x) - Df(x) g(x), pointwise.
inline std::vector<Rational> bracket_at(const VectorField& f, const VectorField& g, const std::vector<Rational>& x) {
  const auto fx = f.evaluate(x);
  const auto gx = g.evaluate(x);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(directional(g[i], x, fx) - directional(f[i], x, gx));
  return out;
}

/// Leibniz permutation expansion of a rational matrix.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Rational det(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational t(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) t *= a[i][perm[i]];
    det += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

inline std::vector<std::vector<Rational>> evaluate_matrix(const PolyMatrix& M, const std::vector<Rational>& x) {
  std::vector<std::vector<Rational>> out(M.rows(), std::vector<Rational>(M.cols()));
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) out[r][c] = M(r, c).evaluate(x);
  return out;
}

}  // namespace liesym::testing

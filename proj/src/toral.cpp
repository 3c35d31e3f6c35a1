#include "liesym/toral.hpp"

#include <algorithm>
#include <stdexcept>

#include "liesym/kernels.hpp"

namespace liesym {

DiagonalAction::DiagonalAction(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("diagonal action needs at least one weight");
}

DiagonalAction DiagonalAction::parse(std::string_view text) {
  std::vector<Rational> w;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    w.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return DiagonalAction(std::move(w));
}

std::vector<mpz_class> DiagonalAction::integer_weights() const {
  mpz_class den_lcm = 1;
  for (const auto& q : weights_) den_lcm = lcm(den_lcm, mpz_class(q.get_den()));
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& q : weights_) {
    mpz_class v = q.get_num() * (den_lcm / q.get_den());
    g = gcd(g, v);
    ints.push_back(v);
  }
  if (g != 0)
    for (auto& v : ints) v /= g;
  return ints;
}

std::string DiagonalAction::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ',';
    out += liesym::to_string(weights_[i]);
  }
  return out;
}

Rational weight(const DiagonalAction& B, const Monomial& m, std::optional<std::size_t> component) {
  if (m.nvars() != B.size())
    throw std::invalid_argument("monomial has " + std::to_string(m.nvars()) + " variables, action has " +
                                std::to_string(B.size()));
  Rational w(0);
  for (std::size_t i = 0; i < m.nvars(); ++i)
    if (m[i] != 0) w += B[i] * m[i];
  if (component) {
    if (*component >= B.size()) throw std::out_of_range("component index out of range");
    w -= B[*component];
  }
  return w;
}

namespace {

std::vector<Monomial> minimal_elements(const std::vector<Monomial>& zero_weight) {
  std::vector<Monomial> gens;
  for (const auto& m : zero_weight) {
    const bool reducible = std::any_of(zero_weight.begin(), zero_weight.end(), [&](const Monomial& d) {
      return d.degree() < m.degree() && d.divides(m);
    });
    if (!reducible) gens.push_back(m);
  }
  return gens;
}

}  // namespace

std::vector<Monomial> invariant_monomial_generators(const std::vector<DiagonalAction>& torus, int degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
  if (torus.empty()) throw std::invalid_argument("torus needs at least one weight row");
  std::vector<std::vector<Rational>> rows;
  for (const auto& B : torus) {
    if (B.size() != torus.front().size()) throw std::invalid_argument("weight rows have different lengths");
    rows.push_back(B.weights());
  }
  return minimal_elements(parallel::zero_weight_monomials(rows, degree_bound));
}

std::vector<Monomial> invariant_monomial_generators(const DiagonalAction& B, int degree_bound) {
  return invariant_monomial_generators(std::vector<DiagonalAction>{B}, degree_bound);
}

bool invariant_algebra_is_trivial(const DiagonalAction& B) {
  const auto& w = B.weights();
  const bool all_pos = std::all_of(w.begin(), w.end(), [](const Rational& q) { return sgn(q) > 0; });
  const bool all_neg = std::all_of(w.begin(), w.end(), [](const Rational& q) { return sgn(q) < 0; });
  return all_pos || all_neg;
}

std::vector<IntVector> monomial_relations(const std::vector<Monomial>& generators) {
  if (generators.empty()) throw std::invalid_argument("relations need at least one generator");
  const std::size_t n = generators.front().nvars();
  const std::size_t r = generators.size();
  RationalMatrix E(n, r);
  for (std::size_t c = 0; c < r; ++c) {
    if (generators[c].nvars() != n) throw std::invalid_argument("generators have different variable counts");
    for (std::size_t i = 0; i < n; ++i) E(i, c) = generators[c][i];
  }
  std::vector<IntVector> out;
  for (const auto& v : nullspace(E)) {
    mpz_class den = 1;
    for (const auto& q : v) den = lcm(den, mpz_class(q.get_den()));
    IntVector iv;
    mpz_class g = 0;
    for (const auto& q : v) {
      iv.push_back(q.get_num() * (den / q.get_den()));
      g = gcd(g, iv.back());
    }
    const auto first = std::find_if(iv.begin(), iv.end(), [](const mpz_class& z) { return z != 0; });
    if (first != iv.end() && *first < 0) g = -g;
    for (auto& z : iv) z /= g;
    out.push_back(std::move(iv));
  }
  return out;
}

Poly relation_binomial(const IntVector& relation) {
  const std::size_t r = relation.size();
  Monomial plus(r), minus(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (!relation[i].fits_uint_p() && relation[i] > 0) throw std::overflow_error("relation exponent too large");
    if (relation[i] > 0) plus[i] = static_cast<Monomial::exponent_type>(relation[i].get_ui());
    if (relation[i] < 0) minus[i] = static_cast<Monomial::exponent_type>(mpz_class(-relation[i]).get_ui());
  }
  return Poly(plus, Rational(1)) - Poly(minus, Rational(1));
}

std::map<Rational, Poly> weight_decompose(const DiagonalAction& B, const Poly& p) {
  if (p.nvars() != B.size()) throw std::invalid_argument("polynomial and action disagree on variable count");
  std::map<Rational, Poly> parts;
  for (const auto& [m, c] : p.terms()) {
    auto it = parts.try_emplace(weight(B, m), Poly(p.nvars())).first;
    it->second.add_term(m, c);
  }
  return parts;
}

std::vector<FieldMonomial> centralizer_monomials(const DiagonalAction& B, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  std::vector<FieldMonomial> out;
  for (const auto& fm : field_ansatz(B.size(), degree_bound))
    if (sgn(weight(B, fm.mono, fm.component)) == 0) out.push_back(fm);
  return out;
}

}  // namespace liesym

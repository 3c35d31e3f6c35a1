#include "liesym/poly.hpp"

#include <stdexcept>

#include "liesym/kernels.hpp"

namespace liesym {

namespace {

void require_same_ring(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("variable count mismatch: " + std::to_string(a.nvars()) + " vs " +
                                std::to_string(b.nvars()));
}

}  // namespace

Poly::Poly(std::size_t nvars, const Rational& constant) : nvars_(nvars) {
  if (sgn(constant) != 0) terms_.emplace(Monomial(nvars), constant);
}

Poly::Poly(const Monomial& m, const Rational& coeff) : nvars_(m.nvars()) {
  if (sgn(coeff) != 0) terms_.emplace(m, coeff);
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  return Poly(Monomial::unit(nvars, index), Rational(1));
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

int Poly::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

int Poly::low_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coeff(Monomial(nvars_)); }

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("monomial has wrong variable count");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_ring(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_ring(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  return parallel::multiply(a, b);
}

Poly Poly::pow(unsigned e) const {
  Poly result(nvars_, Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::homogeneous_part(int degree) const {
  return filter([degree](const Monomial& m) { return m.degree() == degree; });
}

Poly Poly::truncate(int max_degree) const {
  return filter([max_degree](const Monomial& m) { return m.degree() <= max_degree; });
}

Poly Poly::filter(const std::function<bool(const Monomial&)>& keep) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (keep(m)) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_)
    throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) +
                                " coordinates, expected " + std::to_string(nvars_));
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_ && sgn(t) != 0; ++i) {
      for (Monomial::exponent_type e = 0; e < m[i]; ++e) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

Poly Poly::embed(std::size_t new_nvars, std::size_t offset) const {
  if (offset + nvars_ > new_nvars) throw std::invalid_argument("embedding does not fit");
  Poly r(new_nvars);
  for (const auto& [m, c] : terms_) {
    Monomial big(new_nvars);
    for (std::size_t i = 0; i < nvars_; ++i) big[offset + i] = m[i];
    r.terms_.emplace(std::move(big), c);
  }
  return r;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_constant()) {
      out += liesym::to_string(mag);
    } else if (mag == 1) {
      out += m.to_string(names);
    } else {
      out += liesym::to_string(mag) + "*" + m.to_string(names);
    }
  }
  return out;
}

Poly arith(const Poly& a, const Poly& b, ArithOp op) {
  require_same_ring(a, b);
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  throw std::invalid_argument("unknown arithmetic op");
}

Poly partial(const Poly& p, std::size_t var) {
  if (var >= p.nvars())
    throw std::out_of_range("partial: variable index " + std::to_string(var + 1) + " out of range 1.." +
                            std::to_string(p.nvars()));
  Poly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * m[var]);
  }
  return r;
}

std::pair<Poly, Poly> divide(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const Monomial& lm = b.leading_monomial();
  const Rational& lc = b.leading_coeff();
  Poly q(a.nvars()), r(a.nvars()), rest = a;
  while (!rest.is_zero()) {
    const Monomial m = rest.leading_monomial();
    const Rational c = rest.leading_coeff();
    if (lm.divides(m)) {
      Poly t(m / lm, c / lc);
      q += t;
      rest -= t * b;
    } else {
      r.add_term(m, c);
      rest.add_term(m, -c);
    }
  }
  return {q, r};
}

Poly divide_exact(const Poly& a, const Poly& b) {
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

}  // namespace liesym

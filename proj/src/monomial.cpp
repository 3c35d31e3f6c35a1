#include "liesym/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace liesym {

bool Monomial::divides(const Monomial& other) const {
  if (other.nvars() != nvars()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  r *= other;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  if (other.nvars() != nvars()) throw std::invalid_argument("monomial variable count mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  return *this;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw std::domain_error("monomial does not divide");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

bool AscendingGraded::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

namespace {

void fill_degree(std::size_t var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  const std::size_t n = cur.nvars();
  if (var + 1 == n) {
    cur[var] = static_cast<Monomial::exponent_type>(remaining);
    out.push_back(cur);
    cur[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = static_cast<Monomial::exponent_type>(e);
    fill_degree(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Monomial cur(nvars);
  fill_degree(0, degree, cur, out);
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, int max_degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto slice = monomials_of_degree(nvars, d);
    out.insert(out.end(), slice.begin(), slice.end());
  }
  return out;
}

std::vector<std::string> default_var_names(std::size_t nvars, const std::string& stem) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

}  // namespace liesym

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "liesym/monomial.hpp"
#include "liesym/rational.hpp"

namespace liesym {

/// Sparse multivariate polynomial over the rationals.
///
/// Terms live in a map keyed by graded-lex descending monomials, so
/// iteration visits the leading term first. Zero coefficients are never
/// stored and every monomial has exactly nvars() exponents.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Poly() : nvars_(0) {}
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  Poly(std::size_t nvars, const Rational& constant);
  Poly(const Monomial& m, const Rational& coeff);

  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly constant(std::size_t nvars, const Rational& c) { return Poly(nvars, c); }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Smallest total degree among nonzero terms; -1 for the zero polynomial.
  int low_degree() const;

  Rational coeff(const Monomial& m) const;
  Rational constant_term() const;
  /// Adds c*m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  bool operator==(const Poly& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
  }

  Poly pow(unsigned e) const;

  /// Sum of the terms of exactly this total degree.
  Poly homogeneous_part(int degree) const;
  /// Drops all terms of degree > max_degree.
  Poly truncate(int max_degree) const;
  /// Keeps only terms accepted by the predicate.
  Poly filter(const std::function<bool(const Monomial&)>& keep) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Embeds into a ring with more variables; old variable i becomes new
  /// variable offset + i.
  Poly embed(std::size_t new_nvars, std::size_t offset = 0) const;

  /// Canonical text: graded-lex descending, sign-normalised
  /// ("-x1^2*x2 - x2^3", "1/3*x2^2"), "0" for the zero polynomial.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

enum class ArithOp { add, sub, mul };

/// Checked binary arithmetic; throws std::invalid_argument on a variable
/// count mismatch.
Poly arith(const Poly& a, const Poly& b, ArithOp op);

/// Partial derivative with respect to variable `var` (0-based).
Poly partial(const Poly& p, std::size_t var);

/// Exact quotient a / b. Throws std::domain_error if b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

/// Division with remainder by the graded-lex leading term; returns {q, r}.
std::pair<Poly, Poly> divide(const Poly& a, const Poly& b);

}  // namespace liesym

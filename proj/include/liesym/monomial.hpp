#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace liesym {

/// Exponent vector x1^e1 * ... * xn^en.
class Monomial {
 public:
  using exponent_type = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<exponent_type> exps) : exps_(exps) {}
  explicit Monomial(std::vector<exponent_type> exps) : exps_(std::move(exps)) {}

  static Monomial unit(std::size_t nvars, std::size_t var) {
    Monomial m(nvars);
    m.exps_.at(var) = 1;
    return m;
  }

  std::size_t nvars() const { return exps_.size(); }
  exponent_type operator[](std::size_t i) const { return exps_[i]; }
  exponent_type& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<exponent_type>& exponents() const { return exps_; }

  int degree() const {
    int d = 0;
    for (auto e : exps_) d += static_cast<int>(e);
    return d;
  }
  bool is_constant() const { return degree() == 0; }

  /// Componentwise <=.
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);
  /// Requires divides(*this) on the argument side; throws otherwise.
  Monomial operator/(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;

  /// Renders as "x1^2*x3" using the given names (default x1..xn); "1" if constant.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::vector<exponent_type> exps_;
};

/// Graded lex with x1 > x2 > ... > xn. Returns true when a is strictly
/// greater than b, so ordered containers using it iterate leading term first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Ascending total degree, graded lex descending within one degree. This is
/// the coordinate order used for coefficient vectors and for listing bases.
struct AscendingGraded {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials in nvars variables of exactly the given degree, grlex descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

/// All monomials of degree <= max_degree in AscendingGraded order.
std::vector<Monomial> monomials_up_to(std::size_t nvars, int max_degree);

std::vector<std::string> default_var_names(std::size_t nvars, const std::string& stem = "x");

}  // namespace liesym

#pragma once

// Data-parallel kernels. Each kernel has a serial reference in
// liesym::serial and an OpenMP version in liesym::parallel; the library
// calls the parallel one, tests compare the two on random inputs, and
// bench/ times them against each other.

#include <cstddef>
#include <vector>

#include "liesym/linalg.hpp"
#include "liesym/monomial.hpp"
#include "liesym/poly.hpp"
#include "liesym/rational.hpp"
#include "liesym/vector_field.hpp"

namespace liesym {

/// One entry of a minor family: row and column index sets plus the value.
struct Minor {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Poly value;
  bool operator==(const Minor&) const = default;
};

/// Every k-subset of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k);

namespace serial {

Poly multiply(const Poly& a, const Poly& b);
std::vector<std::size_t> rref(RationalMatrix& M);
std::vector<Minor> minors(const PolyMatrix& M, std::size_t size);
/// Monomials of degree 1..max_degree whose weight row products all vanish.
std::vector<Monomial> zero_weight_monomials(const std::vector<std::vector<Rational>>& weight_rows,
                                            int max_degree);

}  // namespace serial

namespace parallel {

/// Below this many term pairs the parallel multiply runs serially.
inline constexpr std::size_t kMultiplyGrain = 2048;

Poly multiply(const Poly& a, const Poly& b, std::size_t grain = kMultiplyGrain);
std::vector<std::size_t> rref(RationalMatrix& M);
std::vector<Minor> minors(const PolyMatrix& M, std::size_t size);
std::vector<Monomial> zero_weight_monomials(const std::vector<std::vector<Rational>>& weight_rows,
                                            int max_degree);

}  // namespace parallel

}  // namespace liesym

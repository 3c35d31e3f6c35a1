// Serial reference against OpenMP kernel, same inputs for both.

#include <benchmark/benchmark.h>

#include <random>

#include "liesym/kernels.hpp"

using namespace liesym;

namespace {

Poly random_poly(std::mt19937& rng, std::size_t nvars, int maxdeg, int terms) {
  std::uniform_int_distribution<int> coeff(-9, 9), exp(0, maxdeg);
  Poly p(nvars, Rational(0));
  for (int t = 0; t < terms; ++t) {
    std::vector<Monomial::exponent_type> e(nvars);
    for (auto& x : e) x = static_cast<Monomial::exponent_type>(exp(rng));
    p += Poly(Monomial(std::move(e)), Rational(coeff(rng), 7));
  }
  return p;
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-5, 5);
  RationalMatrix M(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) M(r, c) = Rational(d(rng), 1 + (r + c) % 3);
  return M;
}

PolyMatrix random_poly_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  PolyMatrix M(rows, cols, 3);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) M(r, c) = random_poly(rng, 3, 2, 4);
  return M;
}

template <bool Parallel>
void BM_Multiply(benchmark::State& state) {
  std::mt19937 rng(1);
  const int terms = static_cast<int>(state.range(0));
  const Poly a = random_poly(rng, 4, 6, terms), b = random_poly(rng, 4, 6, terms);
  for (auto _ : state) {
    if constexpr (Parallel) benchmark::DoNotOptimize(parallel::multiply(a, b));
    else benchmark::DoNotOptimize(serial::multiply(a, b));
  }
}

template <bool Parallel>
void BM_Rref(benchmark::State& state) {
  std::mt19937 rng(2);
  const RationalMatrix M = random_matrix(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    RationalMatrix A = M;
    if constexpr (Parallel) benchmark::DoNotOptimize(parallel::rref(A));
    else benchmark::DoNotOptimize(serial::rref(A));
  }
}

template <bool Parallel>
void BM_Minors(benchmark::State& state) {
  std::mt19937 rng(3);
  const PolyMatrix M = random_poly_matrix(rng, 6, 4);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    if constexpr (Parallel) benchmark::DoNotOptimize(parallel::minors(M, k));
    else benchmark::DoNotOptimize(serial::minors(M, k));
  }
}

template <bool Parallel>
void BM_ZeroWeight(benchmark::State& state) {
  const std::vector<std::vector<Rational>> rows{{2, -2, 3, -3, 1}};
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    if constexpr (Parallel) benchmark::DoNotOptimize(parallel::zero_weight_monomials(rows, d));
    else benchmark::DoNotOptimize(serial::zero_weight_monomials(rows, d));
  }
}

}  // namespace

BENCHMARK(BM_Multiply<false>)->Name("multiply/serial")->Arg(50)->Arg(200);
BENCHMARK(BM_Multiply<true>)->Name("multiply/parallel")->Arg(50)->Arg(200);
BENCHMARK(BM_Rref<false>)->Name("rref/serial")->Arg(20)->Arg(40);
BENCHMARK(BM_Rref<true>)->Name("rref/parallel")->Arg(20)->Arg(40);
BENCHMARK(BM_Minors<false>)->Name("minors/serial")->Arg(2)->Arg(4);
BENCHMARK(BM_Minors<true>)->Name("minors/parallel")->Arg(2)->Arg(4);
BENCHMARK(BM_ZeroWeight<false>)->Name("zero_weight/serial")->Arg(6)->Arg(9);
BENCHMARK(BM_ZeroWeight<true>)->Name("zero_weight/parallel")->Arg(6)->Arg(9);

BENCHMARK_MAIN();

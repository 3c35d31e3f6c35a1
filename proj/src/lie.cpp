#include "liesym/lie.hpp"

#include <stdexcept>
#include <string>

namespace liesym {

namespace {

void require_square_pair(const VectorField& f, const VectorField& g) {
  if (!f.is_square() || !g.is_square())
    throw std::invalid_argument("bracket needs square vector fields");
  if (f.nvars() != g.nvars())
    throw std::invalid_argument("bracket dimension mismatch: " + std::to_string(f.nvars()) + " vs " +
                                std::to_string(g.nvars()));
}

}  // namespace

Poly lie_derivative(const VectorField& f, const Poly& phi) {
  if (f.size() != phi.nvars() || f.nvars() != phi.nvars())
    throw std::invalid_argument("lie derivative dimension mismatch: field of size " + std::to_string(f.size()) +
                                " on " + std::to_string(f.nvars()) + " variables, function in " +
                                std::to_string(phi.nvars()));
  Poly out(phi.nvars());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    Poly d = partial(phi, i);
    if (!d.is_zero()) out += d * f[i];
  }
  return out;
}

VectorField lie_bracket(const VectorField& f, const VectorField& g) {
  require_square_pair(f, g);
  VectorField out(f.nvars(), f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = lie_derivative(f, g[i]) - lie_derivative(g, f[i]);
  return out;
}

Poly divergence(const VectorField& f) {
  if (!f.is_square()) throw std::invalid_argument("divergence needs a square field");
  Poly out(f.nvars());
  for (std::size_t i = 0; i < f.size(); ++i) out += partial(f[i], i);
  return out;
}

ResidualCheck check_solution_preserving(const VectorField& Phi, const VectorField& f, const VectorField& g) {
  if (!f.is_square() || f.nvars() != Phi.nvars())
    throw std::invalid_argument("solution-preserving check: f must be a field on the domain of Phi");
  if (!g.is_square() || g.nvars() != Phi.size())
    throw std::invalid_argument("solution-preserving check: g must be a field on the codomain of Phi");
  VectorField lhs(Phi.nvars(), Phi.size());
  for (std::size_t i = 0; i < Phi.size(); ++i) lhs[i] = lie_derivative(f, Phi[i]);
  VectorField residual = lhs - compose(g, Phi);
  return {residual.is_zero(), std::move(residual)};
}

TruncatedSeries<Poly> lie_series_transport(const VectorField& f, const Poly& phi, int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  TruncatedSeries<Poly> s{order, {phi}};
  Poly cur = phi;
  for (int k = 1; k <= order; ++k) {
    cur = lie_derivative(f, cur) * Rational(1, k);
    s.coefficients.push_back(cur);
  }
  return s;
}

TruncatedSeries<VectorField> adjoint_series(const VectorField& h, const VectorField& f, int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  require_square_pair(h, f);
  TruncatedSeries<VectorField> s{order, {f}};
  VectorField cur = f;
  for (int k = 1; k <= order; ++k) {
    cur = lie_bracket(h, cur) * Rational(1, k);
    s.coefficients.push_back(cur);
  }
  return s;
}

}  // namespace liesym

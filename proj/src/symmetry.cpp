#include "liesym/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

namespace liesym {

namespace {

std::vector<Poly> as_blocks(const VectorField& f) { return f.components(); }

FieldBasis basis_from_nullspace(std::size_t nvars, int bound, const std::vector<FieldMonomial>& coords,
                                const std::vector<std::vector<Rational>>& null) {
  FieldBasis out{bound, {}};
  for (const auto& v : null) out.basis.push_back(field_from_coeffs(nvars, coords, v));
  return out;
}

void require_second_order_shapes(const VectorField& g, const VectorField& h) {
  const std::size_t n = g.nvars();
  if (!g.is_square()) throw std::invalid_argument("second-order symmetry: g must be a field on Q^n");
  if (h.size() != n || h.nvars() != 2 * n)
    throw std::invalid_argument("second-order symmetry: h must have n components in 2n variables");
}

}  // namespace

ResidualCheck check_symmetry(const VectorField& h, const VectorField& f) {
  VectorField b = lie_bracket(h, f);
  return {b.is_zero(), std::move(b)};
}

int default_cofactor_bound(const VectorField& h, const VectorField& f) {
  const int d = lie_bracket(h, f).degree();
  return std::max(0, d - f.low_degree());
}

std::optional<CofactorCertificate> check_orbital_symmetry(const VectorField& h, const VectorField& f,
                                                          std::optional<int> cofactor_degree_bound) {
  if (f.is_zero()) throw std::invalid_argument("orbital symmetry check needs f != 0");
  const VectorField bracket = lie_bracket(h, f);
  const int bound = cofactor_degree_bound.value_or(default_cofactor_bound(h, f));
  if (bound < 0) throw std::invalid_argument("cofactor degree bound must be nonnegative");
  if (bracket.is_zero()) return CofactorCertificate{Poly(f.nvars()), bracket, bound};

  const auto monos = ansatz_monomials(f.nvars(), bound);
  LinearSystem sys(f.size(), f.nvars());
  for (const auto& m : monos) sys.add_unknown(as_blocks(Poly(m, Rational(1)) * f));
  auto sol = sys.solve(as_blocks(bracket));
  if (!sol) return std::nullopt;
  Poly lambda = poly_from_coeffs(f.nvars(), monos, *sol);
  VectorField residual = bracket - lambda * f;
  if (!residual.is_zero()) return std::nullopt;
  return CofactorCertificate{std::move(lambda), std::move(residual), bound};
}

FieldBasis centralizer_basis(const VectorField& f, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  if (!f.is_square()) throw std::invalid_argument("centralizer needs a square field");
  const std::size_t n = f.nvars();
  const auto coords = field_ansatz(n, degree_bound);
  LinearSystem sys(n, n);
  for (const auto& fm : coords) sys.add_unknown(as_blocks(lie_bracket(monomial_field(n, fm), f)));
  return basis_from_nullspace(n, degree_bound, coords, sys.nullspace());
}

NormalizerBasis normalizer_basis(const VectorField& f, int degree_bound, int cofactor_degree_bound) {
  if (degree_bound < 0 || cofactor_degree_bound < 0) throw std::invalid_argument("degree bounds must be nonnegative");
  if (!f.is_square()) throw std::invalid_argument("normalizer needs a square field");
  const std::size_t n = f.nvars();
  const auto coords = field_ansatz(n, degree_bound);
  const auto lambda_monos = ansatz_monomials(n, cofactor_degree_bound);
  LinearSystem sys(n, n);
  for (const auto& fm : coords) sys.add_unknown(as_blocks(lie_bracket(monomial_field(n, fm), f)));
  for (const auto& m : lambda_monos) sys.add_unknown(as_blocks(-(Poly(m, Rational(1)) * f)));

  NormalizerBasis out{degree_bound, cofactor_degree_bound, {}};
  for (const auto& v : sys.nullspace()) {
    std::span<const Rational> all(v);
    VectorField h = field_from_coeffs(n, coords, all.first(coords.size()));
    Poly lambda = poly_from_coeffs(n, lambda_monos, all.subspan(coords.size()));
    out.basis.push_back({std::move(h), std::move(lambda)});
  }
  return out;
}

bool check_linear_symmetry(const RationalMatrix& T, const VectorField& f) {
  const std::size_t n = f.nvars();
  if (!f.is_square()) throw std::invalid_argument("linear symmetry check needs a square field");
  if (T.rows() != n || T.cols() != n) throw std::invalid_argument("matrix size does not match the field");
  if (rank(T) != n) throw std::invalid_argument("matrix is singular");
  const VectorField Tx = VectorField::linear(n, T.data());
  const VectorField lhs = compose(f, Tx);
  VectorField rhs(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(T(i, j)) != 0) rhs[i] += f[j] * T(i, j);
  return lhs == rhs;
}

VectorField prolong(const VectorField& g) {
  if (!g.is_square()) throw std::invalid_argument("prolongation needs a square field");
  const std::size_t n = g.nvars();
  VectorField out(2 * n, 2 * n);
  const PolyMatrix J = jacobian(g);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = g[i].embed(2 * n);
    for (std::size_t k = 0; k < n; ++k)
      if (!J(i, k).is_zero()) out[n + i] += J(i, k).embed(2 * n) * Poly::variable(2 * n, n + k);
  }
  return out;
}

ResidualCheck check_second_order_symmetry(const VectorField& g, const VectorField& h) {
  require_second_order_shapes(g, h);
  const std::size_t n = g.nvars();
  const std::size_t N = 2 * n;
  auto y = [&](std::size_t k) { return Poly::variable(N, n + k); };

  const VectorField G = g.embed(N);
  // Dg(x) y, as polynomials in (x, y).
  std::vector<Poly> dg_y(n, Poly(N));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Poly d = partial(G[i], k);
      if (!d.is_zero()) dg_y[i] += d * y(k);
    }

  VectorField residual(N, n);
  for (std::size_t i = 0; i < n; ++i) {
    Poly lhs(N), rhs(N);
    for (std::size_t k = 0; k < n; ++k) {
      Poly dk = partial(G[i], k);
      if (dk.is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l) {
        Poly dkl = partial(dk, l);
        if (!dkl.is_zero()) lhs += dkl * y(k) * y(l);
      }
      lhs += dk * h[k];
    }
    for (std::size_t k = 0; k < n; ++k) {
      Poly dx = partial(h[i], k);
      if (!dx.is_zero() && !G[k].is_zero()) rhs += dx * G[k];
      Poly dy = partial(h[i], n + k);
      if (!dy.is_zero() && !dg_y[k].is_zero()) rhs += dy * dg_y[k];
    }
    residual[i] = lhs - rhs;
  }
  return {residual.is_zero(), std::move(residual)};
}

FieldBasis second_order_symmetries(const VectorField& h, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  if (h.nvars() % 2 != 0 || h.size() * 2 != h.nvars())
    throw std::invalid_argument("second-order symmetries: h must have n components in 2n variables");
  const std::size_t n = h.size();
  const auto coords = field_ansatz(n, degree_bound);
  LinearSystem sys(n, 2 * n);
  for (const auto& fm : coords)
    sys.add_unknown(check_second_order_symmetry(monomial_field(n, fm), h).residual.components());
  return basis_from_nullspace(n, degree_bound, coords, sys.nullspace());
}

bool in_span(const std::vector<VectorField>& basis, const VectorField& v) {
  if (v.is_zero()) return true;
  if (basis.empty()) return false;
  LinearSystem sys(v.size(), v.nvars());
  for (const auto& b : basis) sys.add_unknown(b.components());
  return sys.solve(v.components()).has_value();
}

}  // namespace liesym

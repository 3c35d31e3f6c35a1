#include "liesym/invariant_sets.hpp"

#include <algorithm>
#include <stdexcept>

#include "liesym/linalg.hpp"

namespace liesym {

FirstIntegralResult first_integral_check(const VectorField& f, const Poly& phi) {
  Poly d = lie_derivative(f, phi);
  return {d.is_zero(), phi.is_constant(), std::move(d)};
}

SemiInvariantCertificate semi_invariant_cofactor(const VectorField& f, const Poly& psi) {
  if (psi.is_zero()) throw std::invalid_argument("semi-invariant candidate is zero");
  const Poly xf = lie_derivative(f, psi);
  SemiInvariantCertificate cert{psi, Poly(psi.nvars()), false, psi.is_constant(), 0};
  if (xf.is_zero()) {
    cert.valid = true;
    return cert;
  }
  cert.degree_bound = xf.degree() - psi.low_degree();
  if (cert.degree_bound < 0) return cert;
  const auto monos = ansatz_monomials(psi.nvars(), cert.degree_bound);
  LinearSystem sys(1, psi.nvars());
  for (const auto& m : monos) sys.add_unknown({Poly(m, Rational(1)) * psi});
  if (auto sol = sys.solve({xf})) {
    cert.cofactor = poly_from_coeffs(psi.nvars(), monos, *sol);
    cert.valid = cert.cofactor * psi == xf;
  }
  return cert;
}

InvariantVarietyResult invariant_variety_check(const VectorField& f, const std::vector<Poly>& phis,
                                               int mu_degree_bound) {
  if (phis.empty()) throw std::invalid_argument("invariant variety check needs at least one polynomial");
  if (mu_degree_bound < 0) throw std::invalid_argument("cofactor degree bound must be nonnegative");
  const std::size_t nv = f.nvars();
  const auto monos = ansatz_monomials(nv, mu_degree_bound);
  LinearSystem sys(1, nv);
  for (const auto& phi : phis)
    for (const auto& m : monos) sys.add_unknown({Poly(m, Rational(1)) * phi});

  InvariantVarietyResult out{true, {}, mu_degree_bound};
  for (const auto& phi : phis) {
    auto sol = sys.solve({lie_derivative(f, phi)});
    if (!sol) {
      out.invariant = false;
      out.cofactors.clear();
      return out;
    }
    std::vector<Poly> row;
    std::span<const Rational> coeffs(*sol);
    for (std::size_t j = 0; j < phis.size(); ++j)
      row.push_back(poly_from_coeffs(nv, monos, coeffs.subspan(j * monos.size(), monos.size())));
    out.cofactors.push_back(std::move(row));
  }
  return out;
}

MinorFamily minors(const std::vector<VectorField>& fields, std::size_t size) {
  if (fields.empty()) throw std::invalid_argument("minors need at least one field");
  const PolyMatrix M = PolyMatrix::from_columns(fields);
  if (size < 1 || size > std::min(M.rows(), M.cols()))
    throw std::invalid_argument("minor size " + std::to_string(size) + " out of range 1.." +
                                std::to_string(std::min(M.rows(), M.cols())));
  return {size, M.rows(), M.cols(), parallel::minors(M, size)};
}

namespace {

SemiInvariantCertificate determinant_certificate(const VectorField& f, const std::vector<VectorField>& hs) {
  if (!f.is_square()) throw std::invalid_argument("f must be a vector field");
  const std::size_t n = f.nvars();
  if (hs.size() + 1 != n)
    throw std::invalid_argument("need exactly " + std::to_string(n - 1) + " auxiliary fields in dimension " +
                                std::to_string(n));
  std::vector<VectorField> cols{f};
  for (const auto& h : hs) {
    if (!h.is_square() || h.nvars() != n) throw std::invalid_argument("auxiliary field has the wrong dimension");
    cols.push_back(h);
  }
  Poly phi = determinant(PolyMatrix::from_columns(cols));
  if (phi.is_zero()) throw std::invalid_argument("det(f, h...) vanishes identically");
  Poly div = divergence(f);
  const bool valid = lie_derivative(f, phi) == div * phi;
  const bool constant = phi.is_constant();
  const int bound = div.degree();
  return {std::move(phi), std::move(div), valid, constant, bound};
}

}  // namespace

SemiInvariantCertificate integrating_factor(const VectorField& f, const VectorField& h) {
  if (f.nvars() != 2 || !f.is_square()) throw std::invalid_argument("integrating factor needs a planar field");
  return determinant_certificate(f, {h});
}

SemiInvariantCertificate jacobi_multiplier(const VectorField& f, const std::vector<VectorField>& hs) {
  return determinant_certificate(f, hs);
}

MinorFamily jacobian_rank_minors(const VectorField& Phi, std::size_t s) {
  const PolyMatrix J = jacobian(Phi);
  const std::size_t dim = std::min(J.rows(), J.cols());
  if (s > dim) throw std::invalid_argument("rank " + std::to_string(s) + " exceeds " + std::to_string(dim));
  MinorFamily fam{s + 1, J.rows(), J.cols(), {}};
  if (s < dim) fam.minors = parallel::minors(J, s + 1);
  return fam;
}

std::size_t jacobian_rank_at(const VectorField& Phi, std::span<const Rational> point) {
  const PolyMatrix J = jacobian(Phi);
  RationalMatrix A(J.rows(), J.cols());
  for (std::size_t r = 0; r < J.rows(); ++r)
    for (std::size_t c = 0; c < J.cols(); ++c) A(r, c) = J(r, c).evaluate(point);
  return rank(std::move(A));
}

std::optional<VectorField> reduce_by_invariants(const VectorField& f, const std::vector<Poly>& phis,
                                                int target_degree_bound) {
  if (phis.empty()) throw std::invalid_argument("reduction needs at least one invariant");
  if (target_degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  const std::size_t r = phis.size();
  const VectorField Phi(phis);
  const auto monos = ansatz_monomials(r, target_degree_bound);
  LinearSystem sys(1, f.nvars());
  for (const auto& m : monos) sys.add_unknown({compose(Poly(m, Rational(1)), Phi)});

  VectorField g(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    auto sol = sys.solve({lie_derivative(f, phis[i])});
    if (!sol) return std::nullopt;
    g[i] = poly_from_coeffs(r, monos, *sol);
  }
  return g;
}

}  // namespace liesym

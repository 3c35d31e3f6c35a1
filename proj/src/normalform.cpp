#include "liesym/normalform.hpp"

#include <stdexcept>

#include "liesym/lie.hpp"

namespace liesym {

std::vector<FieldMonomial> resonant_monomials(const DiagonalAction& A, int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  std::vector<FieldMonomial> out;
  for (const auto& m : monomials_of_degree(A.size(), degree))
    for (std::size_t j = 0; j < A.size(); ++j)
      if (sgn(weight(A, m, j)) == 0) out.push_back({m, j});
  return out;
}

DiagonalAction diagonal_linear_part(const VectorField& f) {
  if (!f.is_square()) throw std::invalid_argument("normal form needs a square field");
  const std::size_t n = f.nvars();
  std::vector<Rational> lambda(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(f[i].constant_term()) != 0) throw std::invalid_argument("f(0) != 0: origin is not stationary");
    for (std::size_t j = 0; j < n; ++j) {
      Rational a = f[i].coeff(Monomial::unit(n, j));
      if (i == j) lambda[i] = a;
      else if (sgn(a) != 0) throw std::invalid_argument("linear part is not diagonal");
    }
  }
  return DiagonalAction(std::move(lambda));
}

namespace {

// Solves (I + Dh) G = v modulo degree > N with the Neumann series of -Dh.
VectorField apply_inverse_jacobian(const VectorField& h, const VectorField& v, int N) {
  const PolyMatrix Dh = jacobian(h);
  VectorField result = v;
  VectorField term = v;
  while (true) {
    term = (-Dh.apply(term)).truncate(N);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

}  // namespace

NormalFormResult normal_form(const VectorField& f, int truncation_degree) {
  if (truncation_degree < 1) throw std::invalid_argument("truncation degree must be at least 1");
  const int N = truncation_degree;
  const std::size_t n = f.nvars();
  NormalFormResult out;
  out.truncation_degree = N;
  out.linear_part = diagonal_linear_part(f);
  const DiagonalAction& A = out.linear_part;

  VectorField current = f.truncate(N);
  VectorField Phi = VectorField::identity(n);
  const VectorField id = VectorField::identity(n);

  for (int r = 2; r <= N; ++r) {
    VectorField h(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const Poly part = current[j].homogeneous_part(r);
      for (const auto& [m, c] : part.terms()) {
        const Rational w = weight(A, m, j);
        if (sgn(w) != 0) h[j].add_term(m, c / w);
      }
    }
    for (const auto& fm : resonant_monomials(A, r)) out.resonant_monomials.push_back(fm);
    out.generators.push_back(h);
    if (h.is_zero()) continue;

    const VectorField step = id + h;
    current = apply_inverse_jacobian(h, compose_truncated(current, step, N), N);
    Phi = compose_truncated(Phi, step, N);
  }
  out.normal_form = std::move(current);
  out.transformation = std::move(Phi);
  return out;
}

VectorField compose_generators(const std::vector<VectorField>& generators, std::size_t nvars, int truncation_degree) {
  const VectorField id = VectorField::identity(nvars);
  VectorField Phi = id;
  for (const auto& h : generators) Phi = compose_truncated(Phi, id + h, truncation_degree);
  return Phi;
}

NormalFormReport verify_normal_form(const NormalFormResult& result, const VectorField& f) {
  const int N = result.truncation_degree;
  const std::size_t n = f.nvars();
  const VectorField& fstar = result.normal_form;
  const VectorField& Phi = result.transformation;
  NormalFormReport rep;

  const VectorField As = diagonal_linear_part(fstar).field();
  rep.commutes = true;
  for (int r = 2; r <= N; ++r)
    if (!lie_bracket(As, fstar.homogeneous_part(r)).is_zero()) rep.commutes = false;

  rep.generators_consistent = compose_generators(result.generators, n, N) == Phi.truncate(N);

  bool has_constant = false;
  for (const auto& c : Phi) has_constant = has_constant || sgn(c.constant_term()) != 0;
  const VectorField lhs = jacobian(Phi).apply(fstar).truncate(N);
  const VectorField rhs = has_constant ? compose(f, Phi).truncate(N) : compose_truncated(f, Phi, N);
  rep.conjugacy_residual = lhs - rhs;
  for (int d = 0; d <= N && rep.residual_degree < 0; ++d)
    if (!rep.conjugacy_residual.homogeneous_part(d).is_zero()) rep.residual_degree = d;

  rep.valid = rep.commutes && rep.generators_consistent && rep.residual_degree < 0;
  return rep;
}

bool truncated_first_integral_inheritance_check(const VectorField& fstar, const Poly& phi, int truncation_degree) {
  const Poly xf = lie_derivative(fstar, phi);
  if (!xf.truncate(truncation_degree).is_zero())
    throw std::invalid_argument("phi is not a first integral of f* up to degree " + std::to_string(truncation_degree));
  const VectorField As = diagonal_linear_part(fstar).field();
  return lie_derivative(As, phi.truncate(truncation_degree)).is_zero();
}

}  // namespace liesym

#pragma once

#include <vector>

#include "liesym/poly.hpp"
#include "liesym/vector_field.hpp"

namespace liesym {

/// X_f(phi) = D phi * f.
Poly lie_derivative(const VectorField& f, const Poly& phi);

/// [f, g] = Dg * f - Df * g. Both fields must be square on the same ring.
VectorField lie_bracket(const VectorField& f, const VectorField& g);

/// Trace of Df.
Poly divergence(const VectorField& f);

/// Outcome of an exact identity check. `residual` is the difference of the
/// two sides and is zero exactly when `holds`.
struct ResidualCheck {
  bool holds = false;
  VectorField residual;
};

/// Tests D Phi(x) f(x) = g(Phi(x)) for Phi: Q^n -> Q^m, f on Q^n, g on Q^m.
/// The residual is D Phi * f - g o Phi.
ResidualCheck check_solution_preserving(const VectorField& Phi, const VectorField& f, const VectorField& g);

/// Truncated series sum_k c_k t^k with the 1/k! already folded into c_k.
template <typename T>
struct TruncatedSeries {
  int order = 0;
  std::vector<T> coefficients;
};

/// Coefficients X_f^k(phi) / k! for k = 0..order.
TruncatedSeries<Poly> lie_series_transport(const VectorField& f, const Poly& phi, int order);

/// Coefficients (ad h)^k(f) / k! for k = 0..order, with (ad h)(f) = [h, f].
TruncatedSeries<VectorField> adjoint_series(const VectorField& h, const VectorField& f, int order);

}  // namespace liesym

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torpoly/numeric.hpp"
#include "torpoly/poly.hpp"
#include "torpoly/weights.hpp"

namespace torpoly {

/// The positive normalization constant c(n) of the Plancherel measure.
/// Only c(1) = 1/(4 pi^2) is built in; other ranks stay symbolic unless a
/// value q * pi^e is supplied.
struct PlancherelConstant {
  int n = 1;
  // c(n) = factor * pi^pi_exponent when known
  std::optional<std::pair<Rat, int>> exact;

  static PlancherelConstant known(int n);
  static PlancherelConstant with_value(int n, const Rat& factor, int pi_exponent);

  bool is_known() const { return exact.has_value(); }
  Real value() const;       // throws std::domain_error when symbolic
  Real two_pi_value() const;  // 2 pi c(n)
  std::string description() const;  // e.g. "1/(4*pi^2)"
};

/// Plancherel density of the sigma-principal series as a polynomial in z,
/// unit -c(n): the product over the positive roots of g of
/// <z e_1 + Lambda(sigma) + rho_M, alpha> / <rho_G, alpha>.
/// Even in z, degree 2n.
RatPoly plancherel_poly_product(int n, const WeightM& sigma);

/// The same polynomial for the Kostant M-type sigma_{tau(m),k}, in the
/// interpolation-node form
/// (-1)^k dim(tau(m)) prod_{j != k} (t^2 - lambda_j^2)/(lambda_k^2 - lambda_j^2)
/// with lambda_j = m + tau_{j+1} + n - j. Unit -c(n).
RatPoly plancherel_poly_factored(int n, const HalfIntVec& tau, long m, int k);

/// sum_k prod_{j != k} (t - s_j)/(s_k - s_j); identically the constant 1.
/// The expansion is returned as computed so callers can assert the identity.
RatPoly lagrange_unity(const std::vector<Rat>& nodes);

/// sum_k (-1)^k P_{sigma_{tau(m),k}}; collapses to the constant dim(tau(m)).
RatPoly alternating_plancherel_sum(int n, const HalfIntVec& tau, long m);

/// P_sigma = P_{w0 sigma} as exact polynomials.
bool w_invariance_check(int n, const WeightM& sigma);

}  // namespace torpoly

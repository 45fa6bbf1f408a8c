#pragma once

#include <vector>

#include "torpoly/poly.hpp"
#include "torpoly/weights.hpp"

namespace torpoly {

/// Casimir eigenvalues are exact rationals in the normalization where the
/// invariant form is B/(2(d-1)).
using CasimirValue = Rat;

/// Weyl dimension formula for G = Spin(2n+1,1):
/// prod_{i<j} ((k_i+rho_i)^2 - (k_j+rho_j)^2) / (rho_i^2 - rho_j^2).
/// Throws std::logic_error if the exact quotient fails to be a positive
/// integer.
Int dim_G(const WeightG& w);

/// Weyl dimension formula for K = Spin(2n+1), root system B_n.
Int dim_K(const WeightK& w);

/// Weyl dimension formula for M = Spin(2n), root system D_n.
Int dim_M(const WeightM& w);

/// Casimir eigenvalue sum_j (k_j+rho_j)^2 - sum_j rho_j^2.
CasimirValue casimir_G(const WeightG& w);

/// Casimir eigenvalue of K with the rho-shift rho_j + 1/2.
CasimirValue casimir_K(const WeightK& w);

/// Principal-series constant c(sigma) = sum_{j>=2}(k_j+rho_j)^2 - sum_{j>=1} rho_j^2;
/// the Casimir acts on the sigma-principal series by -lambda^2 + c(sigma).
CasimirValue c_sigma(const WeightM& s);

/// Multiplicity-one restriction to K: all K-weights interlacing w,
/// k_{j-1}(tau) >= k_j(nu) >= |k_j(tau)|, in the same integrality class.
/// Ordered lexicographically by coordinates.
std::vector<WeightK> branch_G_to_K(const WeightG& w);

/// Componentwise bounds tau_j + m - 1 <= k_j(nu) <= tau_{j-1} + m + 1 for the
/// K-types of Lambda^p p* tensor tau(m)|_K.
struct BranchingBox {
  int n = 0;
  std::vector<std::int64_t> lower_dbl;
  std::vector<std::int64_t> upper_dbl;
};

BranchingBox branching_box(int n, const HalfIntVec& tau, long m);

/// Certified lower bound for the spectral gap C_p(m): minimizes
/// casimir_G(tau(m)) - casimir_K(nu) over the branching box intersected
/// with K-dominance. Independent of p (the box is); p is range-checked only.
Rat spectral_gap_bound(int n, const HalfIntVec& tau, long m, int p);

/// dim tau(m) as an exact polynomial in m (degree n(n+1)/2), obtained by
/// interpolation through dimension values; Weyl's formula guarantees
/// polynomiality.
RatPoly dim_ray_polynomial(int n, const HalfIntVec& tau);

}  // namespace torpoly

#pragma once

#include <optional>
#include <vector>

#include "torpoly/half_int.hpp"
#include "torpoly/numeric.hpp"
#include "torpoly/plancherel.hpp"
#include "torpoly/poly.hpp"
#include "torpoly/weights.hpp"

namespace torpoly {

/// P_tau(m) = 2 pi sum_k (-1)^k int_0^{lambda_k(m)} P_{sigma_{tau(m),k}}(t) dt
/// as an exact polynomial in m of degree n(n+1)/2 + 1, unit 2 pi c(n).
/// The logarithm of the L2-torsion of tau(m) is vol(X) P_tau(m).
struct TorsionPolynomial {
  int n = 1;
  HalfIntVec tau;
  RatPoly poly;  // in m, unit TwoPiCn

  int degree() const { return poly.degree(); }
  Rat eval_in_unit(long m) const { return poly.eval(Rat(static_cast<long>(m))); }
};

/// Closed route: the interpolation-node form of the Plancherel polynomials
/// with lambda_j = m + tau_{j+1} + n - j, expanded in exact bivariate
/// arithmetic, integrated in t and specialized at t = lambda_k(m).
/// Throws std::logic_error if the degree differs from n(n+1)/2 + 1.
TorsionPolynomial torsion_polynomial(int n, const HalfIntVec& tau);

/// Independent route: exact values of the alternating integral sum at
/// integer m (root-product Plancherel polynomials over the Kostant M-types),
/// fitted by Lagrange interpolation. Shares no code with the bivariate path
/// beyond polynomial plumbing.
TorsionPolynomial torsion_polynomial_by_interpolation(int n, const HalfIntVec& tau);

/// Residual P_tau(m) + m * dim(tau(m)) in unit 2 pi c(n); the leading terms
/// cancel, leaving degree <= n(n+1)/2.
struct LeadingTermReport {
  RatPoly residual;       // in m, unit TwoPiCn
  int expected_degree = 0;  // n(n+1)/2
  bool degree_ok = false;
};

LeadingTermReport leading_term_report(int n, const HalfIntVec& tau);

/// Value at s = 0 of the regularized Mellin transform
/// E(s) = int_0^inf t^{s-1} e^{-t c^2} int_R e^{-t x^2} P_sigma(ix) dx dt,
/// which equals -2 pi int_0^c P_sigma(t) dt. Returned in unit 2 pi c(n).
Rat mellin_value(int n, const WeightM& sigma, const Rat& c);

/// sum_k (-1)^{k+1} mellin_value(sigma_{tau(m),k}, lambda_{tau(m),k});
/// reproduces P_tau(m) exactly, in unit 2 pi c(n).
Rat alternating_mellin_sum(int n, const HalfIntVec& tau, long m);

/// Gamma(i+1/2) Gamma(-i-1/2) = (-1)^{i+1} 2 pi / (2i+1), checked with the
/// recursion Gamma(z+1) = z Gamma(z) in exact arithmetic over the unit
/// sqrt(pi). Certifies the term-wise Mellin regularization of the Gaussian
/// transform monomial by monomial.
bool gamma_monomial_identity(unsigned i);

/// (2i-1)!! / (2t)^i: the ratio of the 2i-th Gaussian moment
/// int e^{-t x^2} x^{2i} dx to the Gaussian integral sqrt(pi/t).
Rat gaussian_moment_ratio(unsigned i, const Rat& t);

/// int_R e^{-t x^2} x^{2i} dx, numeric collapse of the exact ratio.
Real gaussian_moment(unsigned i, const Rat& t);

/// Identity contribution to the heat trace per unit volume:
/// I(t,tau(m))/vol(X) = 2 sum_k (-1)^{k+1} e^{-t lambda_k^2}
///                        int_R e^{-t x^2} P_{sigma_{tau(m),k}}(ix) dx,
/// evaluated in closed form through Gaussian moments. The rational parts
/// (moment ratios, polynomial coefficients) stay exact; only the common
/// factor sqrt(pi/t), the exponentials and c(n) are collapsed numerically.
struct IdentityTrace {
  int n = 1;
  HalfIntVec tau;
  long m = 1;
  Rat t;
  Real value;
};

IdentityTrace identity_trace(int n, const HalfIntVec& tau, long m, const Rat& t, const Real& c_n);

/// vol(X) * P_tau(m). `numeric` is present when c(n) is available and holds
/// the actual value; `in_unit` is always present, in unit 2 pi c(n).
struct L2Torsion {
  Real in_unit;
  std::optional<Real> numeric;
};

L2Torsion l2_torsion(int n, const HalfIntVec& tau, long m, const Real& vol,
                     const std::optional<Real>& c_n);

}  // namespace torpoly

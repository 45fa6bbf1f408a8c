#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "torpoly/rep.hpp"
#include "torpoly/weights.hpp"

namespace torpoly {

/// One constituent of the nilpotent-cohomology decomposition of V_tau as an
/// MA-module: the a*-coordinate lambda, the M-type sigma and the length of
/// the Weyl element producing it.
struct KostantDatum {
  Rat lambda;
  WeightM sigma;
  int length = 0;
};

/// The 2(n+1) Kostant triples for tau: (lambda_k, sigma_k, k) for k = 0..n,
/// where lambda_k = tau_{k+1} + n - k and sigma_k has coordinates
/// (tau_1+1, ..., tau_k+1, tau_{k+2}, ..., tau_{n+1}), followed by the
/// mirrored triples (-lambda_k, w0 sigma_k, 2n-k).
std::vector<KostantDatum> kostant_data(int n, const HalfIntVec& tau);

/// First datum violating casimir_G(tau) = lambda^2 + c(sigma), if any.
std::optional<KostantDatum> casimir_mismatch(int n, const HalfIntVec& tau);

inline bool check_casimir_compat(int n, const HalfIntVec& tau) {
  return !casimir_mismatch(n, tau).has_value();
}

/// Formal sum of M-weight vectors with signed integer multiplicities.
/// Weights are length-n vectors in doubled coordinates.
class SignedWeightMultiset {
 public:
  void add(const std::vector<std::int64_t>& weight, long long multiplicity);
  SignedWeightMultiset& operator+=(const SignedWeightMultiset& rhs);
  SignedWeightMultiset& operator*=(long long scalar);
  SignedWeightMultiset negated() const;

  bool empty() const { return entries_.empty(); }
  long long total_multiplicity() const;
  const std::map<std::vector<std::int64_t>, long long>& entries() const { return entries_; }

  bool operator==(const SignedWeightMultiset&) const = default;

 private:
  std::map<std::vector<std::int64_t>, long long> entries_;
};

/// As M-modules, n carries the weights +-e_j (j = 2..n+1) and p adds one
/// zero weight (p is equivalent to a + n).
enum class ExteriorSource { NilpotentN, TangentP };

/// M-weights of Lambda^p of the source, each p-subset contributing +1.
SignedWeightMultiset exterior_power_weights(int n, int p, ExteriorSource source);

/// Checks the weight-level identity
/// sum_{p=1}^{d} (-1)^p p Lambda^p p* = sum_{p=0}^{d-1} (-1)^{p+1} Lambda^p n*
/// by brute-force expansion of both exterior algebras, d = 2n+1.
bool verify_alter2(int n);

/// Character of the sigma-principal series on the torsion test function:
/// exp(-t(lambda^2 + lambda_{tau,k}^2)) when the contragredient of sigma
/// matches a Kostant M-type of tau, zero otherwise.
struct ThetaCharacter {
  bool nonzero = false;
  int k = -1;             // matching Kostant index in 0..n
  Rat exponent_coeff;     // lambda^2 + lambda_{tau,k}^2
  Rat neg_log;            // t * exponent_coeff; the value is exp(-neg_log)
};

ThetaCharacter theta_character(int n, const HalfIntVec& tau, const WeightM& sigma,
                               const Rat& lambda, const Rat& t);

}  // namespace torpoly

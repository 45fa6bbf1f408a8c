#pragma once

#include <cstdint>
#include <vector>

#include "torpoly/half_int.hpp"

namespace torpoly {

// Highest weights for the groups attached to hyperbolic (2n+1)-space:
// G = Spin(2n+1,1), its maximal compact K = Spin(2n+1) and M = Spin(2n).
// G-weights have n+1 coordinates (e_1..e_{n+1}); K- and M-weights have n
// coordinates (e_2..e_{n+1}), stored 0-based.

/// Half-sums of positive roots in coordinates: rho_j = n+1-j.
struct RhoVectors {
  int n = 0;
  std::vector<std::int64_t> rho_g;  // j = 1..n+1, strictly decreasing to 0
  std::vector<std::int64_t> rho_m;  // j = 2..n+1
};

RhoVectors rho_vectors(int n);

/// G-weight, dominance k_1 >= ... >= k_n >= |k_{n+1}|.
class WeightG {
 public:
  WeightG(int n, HalfIntVec coords);

  int rank() const { return n_; }
  const HalfIntVec& coords() const { return k_; }
  std::int64_t doubled(std::size_t i) const { return k_.doubled(i); }
  Rat at(std::size_t i) const { return k_.at(i); }

  bool operator==(const WeightG&) const = default;

 private:
  int n_;
  HalfIntVec k_;
};

/// K-weight, dominance k_2 >= ... >= k_{n+1} >= 0.
class WeightK {
 public:
  WeightK(int n, HalfIntVec coords);

  int rank() const { return n_; }
  const HalfIntVec& coords() const { return k_; }
  std::int64_t doubled(std::size_t i) const { return k_.doubled(i); }
  Rat at(std::size_t i) const { return k_.at(i); }

  bool operator==(const WeightK&) const = default;

 private:
  int n_;
  HalfIntVec k_;
};

/// M-weight, dominance k_2 >= ... >= k_n >= |k_{n+1}|.
class WeightM {
 public:
  WeightM(int n, HalfIntVec coords);

  int rank() const { return n_; }
  const HalfIntVec& coords() const { return k_; }
  std::int64_t doubled(std::size_t i) const { return k_.doubled(i); }
  Rat at(std::size_t i) const { return k_.at(i); }

  bool operator==(const WeightM&) const = default;

 private:
  int n_;
  HalfIntVec k_;
};

/// Validates a ray base: length n+1, weakly decreasing, nonnegative,
/// entries in (1/2)N. Throws std::invalid_argument otherwise.
void validate_ray_base(int n, const HalfIntVec& tau);

/// Highest weight (tau_1+m)e_1 + ... + (tau_{n+1}+m)e_{n+1}.
WeightG make_ray_weight(int n, const HalfIntVec& tau, long m);

/// Composition with the Cartan involution: negates the last coordinate.
WeightG theta_twist(const WeightG& w);

/// Action of the nontrivial restricted Weyl element: negates the last
/// coordinate. Involution.
WeightM w0_action(const WeightM& s);

/// Contragredient M-representation: identity for n even, w0 for n odd.
WeightM contragredient(const WeightM& s);

/// tau(m) differs from its theta-twist iff tau_{n+1}+m > 0; this is the
/// acyclicity condition for the associated flat bundle.
bool ray_is_acyclic(int n, const HalfIntVec& tau, long m);

}  // namespace torpoly

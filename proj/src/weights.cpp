#include "torpoly/weights.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace torpoly {

namespace {

void require_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank parameter n must be >= 1");
}

std::vector<std::int64_t> negate_last(const HalfIntVec& v) {
  auto dbl = v.doubled_values();
  dbl.back() = -dbl.back();
  return dbl;
}

}  // namespace

RhoVectors rho_vectors(int n) {
  require_rank(n);
  RhoVectors rho;
  rho.n = n;
  for (int j = 1; j <= n + 1; ++j) rho.rho_g.push_back(n + 1 - j);
  rho.rho_m.assign(rho.rho_g.begin() + 1, rho.rho_g.end());
  return rho;
}

WeightG::WeightG(int n, HalfIntVec coords) : n_(n), k_(std::move(coords)) {
  require_rank(n);
  if (k_.size() != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("WeightG: expected n+1 coordinates");
  for (std::size_t i = 0; i + 2 < k_.size(); ++i) {
    if (k_.doubled(i) < k_.doubled(i + 1))
      throw std::invalid_argument("WeightG: coordinates must be weakly decreasing");
  }
  if (k_.doubled(n - 1) < std::abs(k_.doubled(n)))
    throw std::invalid_argument("WeightG: need k_n >= |k_{n+1}|");
}

WeightK::WeightK(int n, HalfIntVec coords) : n_(n), k_(std::move(coords)) {
  require_rank(n);
  if (k_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("WeightK: expected n coordinates");
  for (std::size_t i = 0; i + 1 < k_.size(); ++i) {
    if (k_.doubled(i) < k_.doubled(i + 1))
      throw std::invalid_argument("WeightK: coordinates must be weakly decreasing");
  }
  if (k_.doubled(k_.size() - 1) < 0)
    throw std::invalid_argument("WeightK: need k_{n+1} >= 0");
}

WeightM::WeightM(int n, HalfIntVec coords) : n_(n), k_(std::move(coords)) {
  require_rank(n);
  if (k_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("WeightM: expected n coordinates");
  for (std::size_t i = 0; i + 2 < k_.size(); ++i) {
    if (k_.doubled(i) < k_.doubled(i + 1))
      throw std::invalid_argument("WeightM: coordinates must be weakly decreasing");
  }
  if (k_.size() >= 2 && k_.doubled(k_.size() - 2) < std::abs(k_.doubled(k_.size() - 1)))
    throw std::invalid_argument("WeightM: need k_n >= |k_{n+1}|");
}

void validate_ray_base(int n, const HalfIntVec& tau) {
  require_rank(n);
  if (tau.size() != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("ray base: expected n+1 coordinates");
  for (std::size_t i = 0; i + 1 < tau.size(); ++i) {
    if (tau.doubled(i) < tau.doubled(i + 1))
      throw std::invalid_argument("ray base: coordinates must be weakly decreasing");
  }
  if (tau.doubled(tau.size() - 1) < 0)
    throw std::invalid_argument("ray base: coordinates must be nonnegative");
}

WeightG make_ray_weight(int n, const HalfIntVec& tau, long m) {
  validate_ray_base(n, tau);
  if (m < 0) throw std::invalid_argument("make_ray_weight: m must be nonnegative");
  std::vector<std::int64_t> dbl = tau.doubled_values();
  for (auto& v : dbl) v += 2 * m;
  return WeightG(n, HalfIntVec(std::move(dbl)));
}

WeightG theta_twist(const WeightG& w) { return WeightG(w.rank(), HalfIntVec(negate_last(w.coords()))); }

WeightM w0_action(const WeightM& s) { return WeightM(s.rank(), HalfIntVec(negate_last(s.coords()))); }

WeightM contragredient(const WeightM& s) { return (s.rank() % 2 == 0) ? s : w0_action(s); }

bool ray_is_acyclic(int n, const HalfIntVec& tau, long m) {
  validate_ray_base(n, tau);
  return tau.doubled(tau.size() - 1) + 2 * m > 0;
}

}  // namespace torpoly

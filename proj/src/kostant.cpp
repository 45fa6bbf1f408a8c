#include "torpoly/kostant.hpp"

#include <stdexcept>

namespace torpoly {

std::vector<KostantDatum> kostant_data(int n, const HalfIntVec& tau) {
  validate_ray_base(n, tau);
  std::vector<KostantDatum> first;
  for (int k = 0; k <= n; ++k) {
    const Rat lambda = tau.at(k) + Rat(static_cast<long>(n - k));
    std::vector<std::int64_t> dbl(n);
    for (int i = 1; i <= n; ++i) dbl[i - 1] = (i <= k) ? tau.doubled(i - 1) + 2 : tau.doubled(i);
    first.push_back({lambda, WeightM(n, HalfIntVec(std::move(dbl))), k});
  }
  std::vector<KostantDatum> data = first;
  for (const auto& d : first) data.push_back({-d.lambda, w0_action(d.sigma), 2 * n - d.length});
  return data;
}

std::optional<KostantDatum> casimir_mismatch(int n, const HalfIntVec& tau) {
  const Rat top = casimir_G(WeightG(n, tau));
  for (const auto& d : kostant_data(n, tau)) {
    if (top != d.lambda * d.lambda + c_sigma(d.sigma)) return d;
  }
  return std::nullopt;
}

void SignedWeightMultiset::add(const std::vector<std::int64_t>& weight, long long multiplicity) {
  if (multiplicity == 0) return;
  auto it = entries_.find(weight);
  if (it == entries_.end()) {
    entries_.emplace(weight, multiplicity);
    return;
  }
  it->second += multiplicity;
  if (it->second == 0) entries_.erase(it);
}

SignedWeightMultiset& SignedWeightMultiset::operator+=(const SignedWeightMultiset& rhs) {
  for (const auto& [w, mult] : rhs.entries_) add(w, mult);
  return *this;
}

SignedWeightMultiset& SignedWeightMultiset::operator*=(long long scalar) {
  if (scalar == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [w, mult] : entries_) mult *= scalar;
  return *this;
}

SignedWeightMultiset SignedWeightMultiset::negated() const {
  SignedWeightMultiset out = *this;
  out *= -1;
  return out;
}

long long SignedWeightMultiset::total_multiplicity() const {
  long long total = 0;
  for (const auto& [w, mult] : entries_) total += mult;
  return total;
}

SignedWeightMultiset exterior_power_weights(int n, int p, ExteriorSource source) {
  if (n < 1) throw std::invalid_argument("exterior_power_weights: n must be >= 1");
  // weight list of the source module, doubled coordinates
  std::vector<std::vector<std::int64_t>> gens;
  for (int j = 0; j < n; ++j) {
    std::vector<std::int64_t> plus(n, 0), minus(n, 0);
    plus[j] = 2;
    minus[j] = -2;
    gens.push_back(plus);
    gens.push_back(minus);
  }
  if (source == ExteriorSource::TangentP) gens.emplace_back(n, 0);

  const int dim = static_cast<int>(gens.size());
  if (p < 0 || p > dim) throw std::invalid_argument("exterior_power_weights: p out of range");

  SignedWeightMultiset out;
  std::vector<int> idx(p);
  for (int i = 0; i < p; ++i) idx[i] = i;
  while (true) {
    std::vector<std::int64_t> sum(n, 0);
    for (const int i : idx) {
      for (int c = 0; c < n; ++c) sum[c] += gens[i][c];
    }
    out.add(sum, 1);
    // next p-combination of {0..dim-1}
    int i = p - 1;
    while (i >= 0 && idx[i] == dim - p + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

bool verify_alter2(int n) {
  const int d = 2 * n + 1;
  SignedWeightMultiset lhs;
  for (int p = 1; p <= d; ++p) {
    auto term = exterior_power_weights(n, p, ExteriorSource::TangentP);
    term *= (p % 2 == 0) ? p : -p;
    lhs += term;
  }
  SignedWeightMultiset rhs;
  for (int p = 0; p <= d - 1; ++p) {
    auto term = exterior_power_weights(n, p, ExteriorSource::NilpotentN);
    term *= (p % 2 == 0) ? -1 : 1;
    rhs += term;
  }
  return lhs == rhs;
}

ThetaCharacter theta_character(int n, const HalfIntVec& tau, const WeightM& sigma,
                               const Rat& lambda, const Rat& t) {
  if (t <= 0) throw std::invalid_argument("theta_character: t must be positive");
  const WeightM dual = contragredient(sigma);
  for (const auto& d : kostant_data(n, tau)) {
    if (d.sigma == dual) {
      ThetaCharacter res;
      res.nonzero = true;
      res.k = (d.length <= n) ? d.length : 2 * n - d.length;
      res.exponent_coeff = lambda * lambda + d.lambda * d.lambda;
      res.neg_log = t * res.exponent_coeff;
      return res;
    }
  }
  return {};
}

}  // namespace torpoly

#include "torpoly/plancherel.hpp"

#include <cstdlib>
#include <stdexcept>

#include "torpoly/rep.hpp"

namespace torpoly {

PlancherelConstant PlancherelConstant::known(int n) {
  PlancherelConstant c;
  c.n = n;
  if (n == 1) c.exact = {make_rat(1, 4), -2};
  return c;
}

PlancherelConstant PlancherelConstant::with_value(int n, const Rat& factor, int pi_exponent) {
  if (factor <= 0) throw std::invalid_argument("PlancherelConstant: c(n) must be positive");
  PlancherelConstant c;
  c.n = n;
  c.exact = {factor, pi_exponent};
  return c;
}

Real PlancherelConstant::value() const {
  if (!exact) throw std::domain_error("PlancherelConstant: c(n) is symbolic for n = " + std::to_string(n));
  return to_real(exact->first) * pow(pi_real(), exact->second);
}

Real PlancherelConstant::two_pi_value() const { return 2 * pi_real() * value(); }

std::string PlancherelConstant::description() const {
  if (!exact) return "symbolic";
  const auto& [factor, e] = *exact;
  const std::string num = to_string(Rat(factor.get_num()));
  std::string den = to_string(Rat(factor.get_den()));
  if (e == 0) return is_integer(factor) ? num : num + "/" + den;
  const std::string pi_pow = (e == -1 || e == 1) ? "pi" : "pi^" + std::to_string(std::abs(e));
  if (e < 0) {
    if (factor.get_den() == 1) return num + "/" + pi_pow;
    return num + "/(" + den + "*" + pi_pow + ")";
  }
  return (is_integer(factor) ? num : num + "/" + den) + "*" + pi_pow;
}

namespace {

std::vector<Rat> ray_lambdas(int n, const HalfIntVec& tau, long m) {
  std::vector<Rat> lambda(n + 1);
  for (int j = 0; j <= n; ++j)
    lambda[j] = tau.at(j) + Rat(static_cast<long>(m)) + Rat(static_cast<long>(n - j));
  return lambda;
}

}  // namespace

RatPoly plancherel_poly_product(int n, const WeightM& sigma) {
  if (sigma.rank() != n) throw std::invalid_argument("plancherel_poly_product: rank mismatch");
  const auto rho = rho_vectors(n).rho_g;
  // coordinates of z e_1 + Lambda(sigma) + rho_M; index 0 is the symbolic z
  std::vector<Rat> a(n + 2);
  for (int j = 1; j <= n + 1; ++j)
    a[j] = (j == 1) ? Rat(0) : sigma.at(j - 2) + Rat(static_cast<long>(rho[j - 1]));

  // the normalization of the invariant form cancels between numerator and
  // denominator of every factor, so the plain coordinate pairing suffices
  RatPoly acc = RatPoly::constant(Rat(1), Unit::MinusCn);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n + 1; ++j) {
      const Rat den_plus(static_cast<long>(rho[i - 1] + rho[j - 1]));
      const Rat den_minus(static_cast<long>(rho[i - 1] - rho[j - 1]));
      if (den_plus == 0 || den_minus == 0)
        throw std::logic_error("plancherel_poly_product: vanishing <rho_G, alpha>");
      if (i == 1) {
        acc = acc * RatPoly({a[j], Rat(1)});   // <., e_1 + e_j> = z + a_j
        acc = acc * RatPoly({-a[j], Rat(1)});  // <., e_1 - e_j> = z - a_j
      } else {
        acc *= (a[i] + a[j]) * (a[i] - a[j]);
      }
      acc *= Rat(1) / (den_plus * den_minus);
    }
  }
  return acc;
}

RatPoly plancherel_poly_factored(int n, const HalfIntVec& tau, long m, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("plancherel_poly_factored: k out of range");
  if (!ray_is_acyclic(n, tau, m))
    throw std::domain_error("plancherel_poly_factored: tau(m) is not acyclic (tau_{n+1} + m = 0)");
  const auto lambda = ray_lambdas(n, tau, m);
  const Rat dim(dim_G(make_ray_weight(n, tau, m)));

  RatPoly acc = RatPoly::constant((k % 2 == 0) ? dim : -dim, Unit::MinusCn);
  const Rat lk2 = lambda[k] * lambda[k];
  for (int j = 0; j <= n; ++j) {
    if (j == k) continue;
    const Rat lj2 = lambda[j] * lambda[j];
    if (lk2 == lj2) throw std::logic_error("plancherel_poly_factored: coincident lambda nodes");
    acc = acc * RatPoly({-lj2, Rat(0), Rat(1)});
    acc *= Rat(1) / (lk2 - lj2);
  }
  return acc;
}

RatPoly lagrange_unity(const std::vector<Rat>& nodes) {
  if (nodes.empty()) throw std::invalid_argument("lagrange_unity: no nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i] == nodes[j]) throw std::invalid_argument("lagrange_unity: duplicate nodes");
    }
  }
  RatPoly sum;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    RatPoly term = RatPoly::constant(Rat(1));
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == k) continue;
      term = term * RatPoly({-nodes[j], Rat(1)});
      term *= Rat(1) / (nodes[k] - nodes[j]);
    }
    sum += term;
  }
  return sum;
}

RatPoly alternating_plancherel_sum(int n, const HalfIntVec& tau, long m) {
  RatPoly sum({}, Unit::MinusCn);
  for (int k = 0; k <= n; ++k) {
    RatPoly term = plancherel_poly_factored(n, tau, m, k);
    if (k % 2 == 1) term *= Rat(-1);
    sum += term;
  }
  return sum;
}

bool w_invariance_check(int n, const WeightM& sigma) {
  return plancherel_poly_product(n, sigma) == plancherel_poly_product(n, w0_action(sigma));
}

}  // namespace torpoly

#include "torpoly/torsion.hpp"

#include <stdexcept>

#include "torpoly/kostant.hpp"
#include "torpoly/rep.hpp"

namespace torpoly {

namespace {

// lambda_j(m) = m + b_j with b_j = tau_{j+1} + n - j, j = 0..n
std::vector<Rat> lambda_offsets(int n, const HalfIntVec& tau) {
  std::vector<Rat> b(n + 1);
  for (int j = 0; j <= n; ++j) b[j] = tau.at(j) + Rat(static_cast<long>(n - j));
  return b;
}

Rat rho_square_product(int n) {
  const auto rho = rho_vectors(n).rho_g;
  Rat d(1);
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j)
      d *= Rat(static_cast<long>(rho[i] * rho[i] - rho[j] * rho[j]));
  }
  return d;
}

}  // namespace

TorsionPolynomial torsion_polynomial(int n, const HalfIntVec& tau) {
  validate_ray_base(n, tau);
  const auto b = lambda_offsets(n, tau);
  const Rat denom = rho_square_product(n);

  RatPoly sum({}, Unit::TwoPiCn);
  for (int k = 0; k <= n; ++k) {
    // prod_{j != k} (t^2 - lambda_j^2), lambda_j = m + b_j
    BiRatPoly poly_part = BiRatPoly::constant(Rat(1));
    for (int j = 0; j <= n; ++j) {
      if (j == k) continue;
      const BiRatPoly lam = BiRatPoly::linear_in_m(b[j], Rat(1));
      BiRatPoly factor = BiRatPoly::linear_in_t(Rat(0), Rat(1)) * BiRatPoly::linear_in_t(Rat(0), Rat(1));
      factor -= lam * lam;
      poly_part = poly_part * factor;
    }
    // prod_{i<j, i,j != k} (lambda_i^2 - lambda_j^2) = (b_i-b_j)(2m+b_i+b_j)...
    BiRatPoly node_part = BiRatPoly::constant(Rat(1));
    for (int i = 0; i <= n; ++i) {
      if (i == k) continue;
      for (int j = i + 1; j <= n; ++j) {
        if (j == k) continue;
        node_part = node_part * BiRatPoly::linear_in_m((b[i] + b[j]) * (b[i] - b[j]),
                                                       Rat(2) * (b[i] - b[j]));
      }
    }
    BiRatPoly integrand = poly_part * node_part;
    integrand *= Rat(1) / denom;
    RatPoly term = integrand.antiderivative_t().substitute_t_m_plus(b[k], Unit::TwoPiCn);
    if (k % 2 == 1) term *= Rat(-1);
    sum += term;
  }
  sum *= Rat(-1);  // the density unit is -c(n); rebased to +2 pi c(n)

  TorsionPolynomial result{n, tau, sum};
  const int expected = n * (n + 1) / 2 + 1;
  if (result.degree() != expected)
    throw std::logic_error("torsion_polynomial: degree " + std::to_string(result.degree()) +
                           ", expected " + std::to_string(expected));
  return result;
}

TorsionPolynomial torsion_polynomial_by_interpolation(int n, const HalfIntVec& tau) {
  validate_ray_base(n, tau);
  const int deg = n * (n + 1) / 2 + 1;
  std::vector<std::pair<Rat, Rat>> samples;
  for (long m = 1; m <= deg + 2; ++m)
    samples.emplace_back(Rat(static_cast<long>(m)), alternating_mellin_sum(n, tau, m));
  RatPoly fit = lagrange_interpolate(samples).with_unit(Unit::TwoPiCn);
  if (fit.degree() > deg)
    throw std::logic_error("torsion_polynomial_by_interpolation: degree exceeds n(n+1)/2+1");
  return {n, tau, fit};
}

LeadingTermReport leading_term_report(int n, const HalfIntVec& tau) {
  const TorsionPolynomial p = torsion_polynomial(n, tau);
  const RatPoly m_dim =
      (RatPoly::monomial(Rat(1), 1) * dim_ray_polynomial(n, tau)).with_unit(Unit::TwoPiCn);
  LeadingTermReport report;
  report.residual = p.poly + m_dim;
  report.expected_degree = n * (n + 1) / 2;
  report.degree_ok = report.residual.degree() <= report.expected_degree;
  return report;
}

Rat mellin_value(int n, const WeightM& sigma, const Rat& c) {
  if (c < 0) throw std::invalid_argument("mellin_value: upper limit must be nonnegative");
  // E(0) = -2 pi int_0^c P_sigma = 2 pi c(n) int_0^c Q_sigma with
  // P_sigma = -c(n) Q_sigma; the stored value is int_0^c Q_sigma.
  return plancherel_poly_product(n, sigma).antiderivative().eval(c);
}

Rat alternating_mellin_sum(int n, const HalfIntVec& tau, long m) {
  const auto data = kostant_data(n, make_ray_weight(n, tau, m).coords());
  Rat sum(0);
  for (int k = 0; k <= n; ++k) {
    const Rat value = mellin_value(n, data[k].sigma, data[k].lambda);
    sum += (k % 2 == 0) ? -value : value;
  }
  return sum;
}

bool gamma_monomial_identity(unsigned i) {
  // Gamma(i+1/2) = q_up sqrt(pi), ascending recursion from Gamma(1/2)
  Rat q_up(1);
  for (unsigned j = 0; j < i; ++j) q_up *= Rat(2 * static_cast<long>(j) + 1) / Rat(2);
  // Gamma(-i-1/2) = q_down sqrt(pi), descending via Gamma(z-1) = Gamma(z)/(z-1)
  Rat q_down(1);
  for (unsigned j = 0; j <= i; ++j) q_down /= Rat(-(2 * static_cast<long>(j) + 1)) / Rat(2);
  // identity divided by pi
  const Rat rhs = Rat(((i + 1) % 2 == 0) ? 2 : -2) / Rat(2 * static_cast<long>(i) + 1);
  return q_up * q_down == rhs;
}

Rat gaussian_moment_ratio(unsigned i, const Rat& t) {
  if (t <= 0) throw std::invalid_argument("gaussian_moment_ratio: t must be positive");
  Rat acc(1);
  for (unsigned j = 1; j <= i; ++j) acc *= Rat(2 * static_cast<long>(j) - 1) / (2 * t);
  return acc;
}

Real gaussian_moment(unsigned i, const Rat& t) {
  return sqrt(pi_real() / to_real(t)) * to_real(gaussian_moment_ratio(i, t));
}

IdentityTrace identity_trace(int n, const HalfIntVec& tau, long m, const Rat& t, const Real& c_n) {
  if (t <= 0) throw std::invalid_argument("identity_trace: t must be positive");
  if (m < 1) throw std::invalid_argument("identity_trace: m must be >= 1");

  const auto b = lambda_offsets(n, tau);
  Real total(0);
  for (int k = 0; k <= n; ++k) {
    const RatPoly q = plancherel_poly_factored(n, tau, m, k);
    // int e^{-t x^2} Q(ix) dx = sqrt(pi/t) * sum_i (-1)^i a_{2i} ratio_i
    Rat scaled(0);
    for (int i = 0; 2 * i <= q.degree(); ++i) {
      Rat term = q.coeff(2 * static_cast<std::size_t>(i)) * gaussian_moment_ratio(i, t);
      scaled += (i % 2 == 0) ? term : -term;
    }
    const Rat lambda_k = b[k] + Rat(static_cast<long>(m));
    const Real weight = exp(-to_real(t * lambda_k * lambda_k));
    const Real integral = -c_n * to_real(scaled);  // P(ix) = -c(n) Q(ix)
    total += ((k % 2 == 0) ? Real(-1) : Real(1)) * weight * integral;
  }
  total *= 2 * sqrt(pi_real() / to_real(t));
  return {n, tau, m, t, total};
}

L2Torsion l2_torsion(int n, const HalfIntVec& tau, long m, const Real& vol,
                     const std::optional<Real>& c_n) {
  if (m < 1) throw std::invalid_argument("l2_torsion: m must be >= 1");
  if (vol <= 0) throw std::invalid_argument("l2_torsion: volume must be positive");
  const TorsionPolynomial p = torsion_polynomial(n, tau);
  L2Torsion result;
  result.in_unit = vol * to_real(p.eval_in_unit(m));
  if (c_n) result.numeric = result.in_unit * 2 * pi_real() * (*c_n);
  return result;
}

}  // namespace torpoly

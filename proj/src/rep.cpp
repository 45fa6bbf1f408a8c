#include "torpoly/rep.hpp"

#include <cstdlib>
#include <stdexcept>

namespace torpoly {

namespace {

Int positive_integer_quotient(const Rat& num, const Rat& den, const char* what) {
  if (den == 0) throw std::logic_error(std::string(what) + ": zero denominator product");
  const Rat q = num / den;
  if (!is_integer(q) || q <= 0)
    throw std::logic_error(std::string(what) + ": quotient " + to_string(q) +
                           " is not a positive integer");
  return q.get_num();
}

}  // namespace

Int dim_G(const WeightG& w) {
  const int n = w.rank();
  const auto rho = rho_vectors(n).rho_g;
  Rat num(1), den(1);
  for (int i = 0; i <= n; ++i) {
    const Rat ai = w.at(i) + Rat(static_cast<long>(rho[i]));
    for (int j = i + 1; j <= n; ++j) {
      const Rat aj = w.at(j) + Rat(static_cast<long>(rho[j]));
      num *= ai * ai - aj * aj;
      den *= Rat(static_cast<long>(rho[i] * rho[i] - rho[j] * rho[j]));
    }
  }
  return positive_integer_quotient(num, den, "dim_G");
}

Int dim_K(const WeightK& w) {
  const int n = w.rank();
  // rho for B_n in these coordinates is rho_j + 1/2, j = 2..n+1
  Rat num(1), den(1);
  for (int i = 0; i < n; ++i) {
    const Rat ri = Rat(static_cast<long>(n - 1 - i)) + make_rat(1, 2);
    const Rat ai = w.at(i) + ri;
    num *= ai;
    den *= ri;
    for (int j = i + 1; j < n; ++j) {
      const Rat rj = Rat(static_cast<long>(n - 1 - j)) + make_rat(1, 2);
      const Rat aj = w.at(j) + rj;
      num *= ai * ai - aj * aj;
      den *= ri * ri - rj * rj;
    }
  }
  return positive_integer_quotient(num, den, "dim_K");
}

Int dim_M(const WeightM& w) {
  const int n = w.rank();
  const auto rho = rho_vectors(n).rho_m;
  Rat num(1), den(1);
  for (int i = 0; i < n; ++i) {
    const Rat ai = w.at(i) + Rat(static_cast<long>(rho[i]));
    for (int j = i + 1; j < n; ++j) {
      const Rat aj = w.at(j) + Rat(static_cast<long>(rho[j]));
      num *= ai * ai - aj * aj;
      den *= Rat(static_cast<long>(rho[i] * rho[i] - rho[j] * rho[j]));
    }
  }
  return positive_integer_quotient(num, den, "dim_M");
}

CasimirValue casimir_G(const WeightG& w) {
  const int n = w.rank();
  const auto rho = rho_vectors(n).rho_g;
  Rat sum(0);
  for (int j = 0; j <= n; ++j) {
    const Rat a = w.at(j) + Rat(static_cast<long>(rho[j]));
    sum += a * a - Rat(static_cast<long>(rho[j] * rho[j]));
  }
  return sum;
}

CasimirValue casimir_K(const WeightK& w) {
  const int n = w.rank();
  Rat sum(0);
  for (int j = 0; j < n; ++j) {
    const Rat r = Rat(static_cast<long>(n - 1 - j)) + make_rat(1, 2);
    const Rat a = w.at(j) + r;
    sum += a * a - r * r;
  }
  return sum;
}

CasimirValue c_sigma(const WeightM& s) {
  const int n = s.rank();
  const auto rho = rho_vectors(n);
  Rat sum(0);
  for (int j = 0; j < n; ++j) {
    const Rat a = s.at(j) + Rat(static_cast<long>(rho.rho_m[j]));
    sum += a * a;
  }
  for (const auto r : rho.rho_g) sum -= Rat(static_cast<long>(r * r));
  return sum;
}

std::vector<WeightK> branch_G_to_K(const WeightG& w) {
  const int n = w.rank();
  // interlacing intervals are independent and K-dominance is automatic
  std::vector<std::int64_t> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    lo[i] = std::abs(w.doubled(i + 1));
    hi[i] = w.doubled(i);
  }
  std::vector<WeightK> out;
  std::vector<std::int64_t> cur = lo;
  while (true) {
    out.emplace_back(n, HalfIntVec(cur));
    int i = n - 1;
    while (i >= 0) {
      cur[i] += 2;
      if (cur[i] <= hi[i]) break;
      cur[i] = lo[i];
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

BranchingBox branching_box(int n, const HalfIntVec& tau, long m) {
  validate_ray_base(n, tau);
  if (m < 1) throw std::invalid_argument("branching_box: m must be >= 1");
  BranchingBox box;
  box.n = n;
  for (int j = 2; j <= n + 1; ++j) {
    box.lower_dbl.push_back(tau.doubled(j - 1) + 2 * m - 2);
    box.upper_dbl.push_back(tau.doubled(j - 2) + 2 * m + 2);
  }
  return box;
}

Rat spectral_gap_bound(int n, const HalfIntVec& tau, long m, int p) {
  if (p < 0 || p > 2 * n + 1)
    throw std::invalid_argument("spectral_gap_bound: p out of range [0, 2n+1]");
  const auto box = branching_box(n, tau, m);
  const Rat top = casimir_G(make_ray_weight(n, tau, m));

  bool found = false;
  Rat best(0);
  std::vector<std::int64_t> cur(box.lower_dbl);
  while (true) {
    bool dominant = cur.back() >= 0;
    for (int i = 0; dominant && i + 1 < n; ++i) dominant = cur[i] >= cur[i + 1];
    if (dominant) {
      const Rat gap = top - casimir_K(WeightK(n, HalfIntVec(cur)));
      if (!found || gap < best) {
        best = gap;
        found = true;
      }
    }
    int i = n - 1;
    while (i >= 0) {
      cur[i] += 2;
      if (cur[i] <= box.upper_dbl[i]) break;
      cur[i] = box.lower_dbl[i];
      --i;
    }
    if (i < 0) break;
  }
  if (!found) throw std::logic_error("spectral_gap_bound: empty branching box");
  return best;
}

RatPoly dim_ray_polynomial(int n, const HalfIntVec& tau) {
  validate_ray_base(n, tau);
  const int deg = n * (n + 1) / 2;
  std::vector<std::pair<Rat, Rat>> points;
  for (int m = 0; m <= deg; ++m)
    points.emplace_back(Rat(m), Rat(dim_G(make_ray_weight(n, tau, m))));
  RatPoly fit = lagrange_interpolate(points);
  // one extra sample guards the interpolation against a degree slip
  const Rat check(dim_G(make_ray_weight(n, tau, deg + 1)));
  if (fit.eval(Rat(deg + 1)) != check)
    throw std::logic_error("dim_ray_polynomial: dimension values are not polynomial of expected degree");
  return fit;
}

}  // namespace torpoly

#include "moment/symmetric.hpp"

#include <algorithm>
#include <stdexcept>

namespace moment {

MonicPolynomial::MonicPolynomial(RationalPolynomial poly) : poly_(std::move(poly)) {
  if (poly_.is_zero() || poly_.leading() != 1) throw std::invalid_argument("polynomial is not monic");
}

std::vector<Rational> MonicPolynomial::elementary() const {
  const int n = degree();
  std::vector<Rational> sigma(n);
  for (int k = 1; k <= n; ++k) sigma[k - 1] = (k % 2 ? Rational(-1) : Rational(1)) * vieta_coefficient(k);
  return sigma;
}

std::vector<Rational> power_sums(std::span<const Rational> points, unsigned count) {
  std::vector<Rational> sums(count, Rational(0));
  for (const auto& x : points) {
    Rational xk = 1;
    for (unsigned k = 0; k < count; ++k) {
      xk *= x;
      sums[k] += xk;
    }
  }
  return sums;
}

std::vector<Rational> power_sums(std::span<const Rational> points) {
  return power_sums(points, static_cast<unsigned>(points.size()));
}

std::vector<Rational> elementary_from_power(std::span<const Rational> power, unsigned n) {
  if (power.size() < n) throw std::invalid_argument("need n power sums");
  std::vector<Rational> sigma(n + 1);
  sigma[0] = 1;
  for (unsigned j = 1; j <= n; ++j) {
    Rational acc = 0;
    for (unsigned i = 0; i < j; ++i) {
      const Rational term = power[j - i - 1] * sigma[i];
      acc += (i % 2 ? -term : term);
    }
    sigma[j] = ((j - 1) % 2 ? -acc : acc) / j;
  }
  sigma.erase(sigma.begin());
  return sigma;
}

std::vector<std::uint64_t> elementary_from_power_mod(std::span<const std::uint64_t> power, unsigned n,
                                                     std::uint64_t p, unsigned m) {
  if (power.size() < n) throw std::invalid_argument("need n power sums");
  if (p <= n) {
    throw std::domain_error("Girard-Newton division by j <= n is not invertible modulo p = " + std::to_string(p));
  }
  const std::uint64_t M = ipow(p, m);
  auto mulmod = [M](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % M);
  };
  std::vector<std::uint64_t> sigma(n + 1, 0);
  sigma[0] = 1 % M;
  for (unsigned j = 1; j <= n; ++j) {
    std::uint64_t acc = 0;
    for (unsigned i = 0; i < j; ++i) {
      const std::uint64_t term = mulmod(power[j - i - 1] % M, sigma[i]);
      acc = (i % 2) ? (acc + M - term) % M : (acc + term) % M;
    }
    if ((j - 1) % 2) acc = (M - acc) % M;
    sigma[j] = mulmod(acc, *inverse_mod(j, M));
  }
  sigma.erase(sigma.begin());
  return sigma;
}

MonicPolynomial vieta_polynomial(std::span<const Rational> points) {
  if (points.empty()) throw std::invalid_argument("need at least one root");
  RationalPolynomial g = RationalPolynomial::constant(1);
  for (const auto& s : points) g = g * RationalPolynomial{-s, Rational(1)};
  return MonicPolynomial(std::move(g));
}

GnDefect gn_defect(std::span<const Rational> s, std::span<const Rational> t, const FieldSpec& field) {
  if (s.size() != t.size()) throw std::invalid_argument("gn_defect: length mismatch");
  const auto ps = power_sums(s);
  const auto pt = power_sums(t);
  const auto gs = vieta_polynomial(s);
  const auto gt = vieta_polynomial(t);
  const auto es = gs.elementary();
  const auto et = gt.elementary();

  GnDefect d;
  for (std::size_t k = 0; k < ps.size(); ++k) d.power_defect = std::max(d.power_defect, abs_value(field, pt[k] - ps[k]));
  for (std::size_t j = 0; j < es.size(); ++j) {
    d.elementary_defect = std::max(d.elementary_defect, abs_value(field, et[j] - es[j]));
  }
  // G(t;x) - G(s;x) = sum_j (c_j(t) - c_j(s)) x^j with |x| <= 1
  const auto diff = gt.polynomial() - gs.polynomial();
  for (const auto& c : diff.coefficients()) {
    if (field.kind == FieldKind::PAdic) {
      d.sup_G_defect = std::max(d.sup_G_defect, abs_value(field, c));
    } else {
      d.sup_G_defect += abs_value(field, c);
    }
  }
  return d;
}

}  // namespace moment

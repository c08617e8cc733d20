#include "moment/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moment {

BigInt field_constant(const FieldSpec& field, unsigned n) {
  if (n < 2) throw std::invalid_argument("field_constant needs n >= 2");
  if (field.kind == FieldKind::PAdic) return 1;
  const unsigned base = n <= 6 ? 7 : 5;
  return pow(BigInt(base), field.eta * n);
}

BigInt theorem1_power(const FieldSpec& field, unsigned n) {
  return field_constant(field, n) * pow(BigInt(n), n);
}

double theorem1_constant(const FieldSpec& field, unsigned n) {
  const double log_c = std::log(to_double(field_constant(field, n)));
  return std::exp(log_c / (2.0 * n)) * std::sqrt(static_cast<double>(n));
}

BigInt ceil(const Rational& q) {
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  BigInt f = num / den;
  if (f * den != num && num > 0) f += 1;
  return f;
}

namespace {

Rational coefficient_abs_sum(const RationalPolynomial& p) {
  Rational s = 0;
  for (const auto& c : p.coefficients()) s += abs(c);
  return s;
}

// sup of |g| over [0, 1]
LipschitzNorm sup_abs_unit_interval(const RationalPolynomial& g) {
  LipschitzNorm best{abs(g(Rational(0))), true};
  auto offer = [&](const Rational& v, bool exact) {
    if (v > best.value || (v == best.value && !exact)) best = {v, exact};
  };
  offer(abs(g(Rational(1))), true);
  const RationalPolynomial dg = g.derivative();
  if (dg.is_zero()) return best;
  const Rational width(1, BigInt(1) << 40);
  const Rational slope = coefficient_abs_sum(dg.derivative());
  for (const auto& [a, b] : isolate_roots(dg, 0, 1, width)) {
    if (a == b) {
      offer(abs(g(a)), true);
      continue;
    }
    const Rational q = simplest_between(a, b);
    if (dg(q) == 0) {
      offer(abs(g(q)), true);
      continue;
    }
    // |g| on [a, b] is within (b - a) sup|g'| of |g(a)|, and g' vanishes at the root
    // so sup|g'| on [a, b] <= (b - a) sup|g''| on [0, 1].
    const Rational w = b - a;
    offer(std::max(abs(g(a)), abs(g(b))) + w * w * slope, false);
  }
  return best;
}

}  // namespace

LipschitzNorm lipschitz_norm(const Curve& curve, const FieldSpec& field) {
  if (field.kind == FieldKind::PAdic) throw std::invalid_argument("Lipschitz norm is defined over R and C");
  LipschitzNorm best{0, true};
  for (const auto& c : curve.coords()) {
    LipschitzNorm l;
    if (field.kind == FieldKind::Real) {
      l = sup_abs_unit_interval(c.derivative());
    } else {
      // |z| <= 1 in the max norm gives |z|_2 <= sqrt 2, and the two norms differ by at most sqrt 2
      l.exact = false;
      const auto& cs = c.coefficients();
      for (std::size_t k = 1; k < cs.size(); ++k) {
        l.value += abs(cs[k]) * static_cast<unsigned>(k) * pow(Rational(2), static_cast<unsigned>((k + 1) / 2));
      }
    }
    if (l.value > best.value || (l.value == best.value && !l.exact)) best = l;
  }
  return best;
}

namespace {

Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return det;
}

// Newton interpolation through (x_i, y_i).
RationalPolynomial interpolate(const std::vector<Rational>& x, std::vector<Rational> y) {
  const std::size_t n = x.size();
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      y[i] = (y[i] - y[i - 1]) / (x[i] - x[i - j]);
      if (i == j) break;
    }
  }
  RationalPolynomial p = RationalPolynomial::constant(y[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    p = p * RationalPolynomial{-x[i], Rational(1)} + RationalPolynomial::constant(y[i]);
  }
  return p;
}

}  // namespace

RationalPolynomial wronskian(const Curve& curve) {
  const unsigned n = curve.dimension();
  // rows[j][i] = gamma_i^(j+1)
  std::vector<std::vector<RationalPolynomial>> rows(n, std::vector<RationalPolynomial>(n));
  int degree_bound = 0;
  for (unsigned i = 0; i < n; ++i) {
    RationalPolynomial d = curve[i];
    for (unsigned j = 0; j < n; ++j) {
      d = d.derivative();
      rows[j][i] = d;
    }
    degree_bound += std::max(0, curve[i].degree());
  }
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= degree_bound; ++k) {
    const Rational t = k;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (unsigned j = 0; j < n; ++j)
      for (unsigned i = 0; i < n; ++i) m[j][i] = rows[j][i](t);
    xs.push_back(t);
    ys.push_back(determinant(std::move(m)));
  }
  return interpolate(xs, ys);
}

bool nondegenerate(const Curve& curve, const FieldSpec& field) {
  if (field.kind == FieldKind::PAdic) throw std::invalid_argument("nondegeneracy is decided over R and C");
  const RationalPolynomial w = wronskian(curve);
  if (w.is_zero()) return false;
  if (w.degree() == 0) return true;
  if (field.kind == FieldKind::Real) return count_distinct_roots(w, 0, 1) == 0;

  // C: the unit square lies in |z| <= sqrt 2. Reverse w and bound its roots from above
  // (Fujiwara): every root of w has |z| > sqrt 2 once 2 max_k |b_k|^(1/k) < 1/sqrt 2,
  // with b_k = a_k / a_0 and the last term halved.
  const auto& a = w.coefficients();
  if (a[0] == 0) return false;
  const int d = w.degree();
  for (int k = 1; k <= d; ++k) {
    Rational b = abs(a[k] / a[0]);
    if (k == d) b /= 2;
    // |b|^(1/k) < 1/(2 sqrt 2)  <=>  b^2 < 8^-k
    if (b * b >= Rational(1, pow(BigInt(8), static_cast<unsigned>(k)))) {
      throw std::domain_error("cannot certify nondegeneracy over C: Wronskian roots may meet the unit square");
    }
  }
  return true;
}

namespace {

BigInt degree_product(const Curve& curve) {
  BigInt prod = 1;
  for (const auto& c : curve.coords()) prod *= std::max(0, c.degree());
  return prod;
}

void require_nondegenerate(const Curve& curve, const FieldSpec& field) {
  if (!nondegenerate(curve, field)) throw std::invalid_argument("degenerate curve: Wronskian vanishes on O");
}

}  // namespace

BigInt bezout_syzygy_bound(const Curve& curve, const FieldSpec& field) {
  require_nondegenerate(curve, field);
  const BigInt side = 2 * ceil(lipschitz_norm(curve, field).value) + 1;
  return pow(side, curve.dimension() * field.eta) * degree_product(curve);
}

double bezout_constant(const Curve& curve, const FieldSpec& field) {
  require_nondegenerate(curve, field);
  const double side = to_double(BigInt(2 * ceil(lipschitz_norm(curve, field).value) + 1));
  const double n = curve.dimension();
  return std::pow(side, field.eta / 2.0) * std::pow(to_double(degree_product(curve)), 1.0 / (2 * n));
}

double fewnomial_constant(const Curve& curve) {
  const double side = to_double(BigInt(2 * ceil(lipschitz_norm(curve).value) + 1));
  const double n = curve.dimension();
  const double M = static_cast<double>(curve.monomial_count());
  const double log_inner = M * (M - 1) / 2 * std::log(2.0) + M * std::log(n + 1);
  return std::sqrt(side) * std::exp(log_inner / (2 * n));
}

BigInt max_falling_power_bound(unsigned n) {
  BigInt best = 0;
  BigInt falling = 1;
  for (unsigned m = 1; m <= n; ++m) {
    falling *= n - m + 1;
    best = std::max(best, BigInt(falling * pow(BigInt(m), n - m)));
  }
  return best;
}

BigInt refined_diagonal_bound(unsigned n) {
  if (n < 2) throw std::invalid_argument("refined_diagonal_bound needs n >= 2");
  if (n <= 3) return factorial(n);
  return max_falling_power_bound(n);
}

BigInt stirling2(unsigned n, unsigned m) {
  std::vector<BigInt> row(m + 1, 0);
  row[0] = 1;  // S(0, 0)
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned k = std::min(i, m); k >= 1; --k) row[k] = k * row[k] + row[k - 1];
    row[0] = 0;
  }
  return row[m];
}

BigInt stirling_variant(unsigned n) {
  BigInt sum = 0;
  BigInt falling = 1;
  for (unsigned m = 1; m <= n; ++m) {
    falling *= n - m + 1;
    sum += stirling2(n, m) * falling;
  }
  return sum;
}

BigInt archimedean_factorial_bound(const FieldSpec& field, unsigned n) {
  if (field.kind == FieldKind::PAdic) throw std::invalid_argument("the 5^(eta n) n! bound is archimedean");
  return pow(BigInt(5), field.eta * n) * factorial(n);
}

}  // namespace moment

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "moment/local_field.hpp"
#include "moment/polynomial.hpp"
#include "moment/rational.hpp"

namespace moment {

/// Power sums p_1..p_n and elementary symmetric values sigma_0..sigma_n of one point set.
struct SymmetricData {
  std::vector<Rational> power;       // p_1, ..., p_n
  std::vector<Rational> elementary;  // sigma_0 = 1, sigma_1, ..., sigma_n
};

/// prod_i (X - s_i); degree equals the number of roots that produced it.
class MonicPolynomial {
 public:
  explicit MonicPolynomial(RationalPolynomial poly);

  int degree() const { return poly_.degree(); }
  const RationalPolynomial& polynomial() const { return poly_; }
  /// Coefficient of X^(n-k), which is (-1)^k sigma_k.
  Rational vieta_coefficient(unsigned k) const { return poly_.coefficient(degree() - k); }
  /// (sigma_1, ..., sigma_n) read back from the coefficients.
  std::vector<Rational> elementary() const;

  template <typename X>
  X operator()(const X& x) const { return poly_(x); }

 private:
  RationalPolynomial poly_;
};

/// p_k = sum_i points_i^k for k = 1..n, n = points.size().
std::vector<Rational> power_sums(std::span<const Rational> points);
std::vector<Rational> power_sums(std::span<const Rational> points, unsigned count);

/// (sigma_1, ..., sigma_n) from (p_1, ..., p_n) via
///   (-1)^(j-1) j sigma_j = sum_{i<j} (-1)^i p_{j-i} sigma_i.
std::vector<Rational> elementary_from_power(std::span<const Rational> power, unsigned n);

/// The same recurrence over Z/p^m. Throws std::domain_error when some j <= n is not
/// invertible mod p (p <= n), the case where the transfer loses p-adic precision.
std::vector<std::uint64_t> elementary_from_power_mod(std::span<const std::uint64_t> power, unsigned n,
                                                     std::uint64_t p, unsigned m);

MonicPolynomial vieta_polynomial(std::span<const Rational> points);

struct GnDefect {
  Rational power_defect;       // max_k |p_k(t) - p_k(s)|
  Rational elementary_defect;  // max_j |sigma_j(t) - sigma_j(s)|
  Rational sup_G_defect;       // sup_{x in O} |G(t;x) - G(s;x)|: exact over Q_p, coefficient-sum bound over R
};

GnDefect gn_defect(std::span<const Rational> s, std::span<const Rational> t, const FieldSpec& field);

}  // namespace moment

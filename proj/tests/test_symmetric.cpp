#include <algorithm>
#include <random>

#include "doctest.h"
#include "moment/symmetric.hpp"
#include "oracles.hpp"

using namespace moment;

namespace {

std::vector<Rational> rationals(std::initializer_list<long long> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("power sums") {
  CHECK(power_sums(rationals({1, 2})) == rationals({3, 5}));
  CHECK(power_sums(rationals({0, 0, 0})) == rationals({0, 0, 0}));
  CHECK(power_sums(rationals({1, 2, 3})) == rationals({6, 14, 36}));
}

TEST_CASE("elementary from power sums") {
  CHECK(elementary_from_power(rationals({3, 5}), 2) == rationals({3, 2}));
  CHECK(elementary_from_power(rationals({0, 0, 0}), 3) == rationals({0, 0, 0}));
  CHECK(elementary_from_power(rationals({6, 14, 36}), 3) == rationals({6, 11, 6}));
}

TEST_CASE("modular transfer refuses p <= n") {
  const std::vector<std::uint64_t> power{6, 14, 36};
  const auto sigma = elementary_from_power_mod(power, 3, 5, 2);
  CHECK(sigma == std::vector<std::uint64_t>{6, 11, 6});
  CHECK_THROWS_AS(elementary_from_power_mod(power, 3, 3, 2), std::domain_error);
}

TEST_CASE("vieta polynomial") {
  CHECK(vieta_polynomial(rationals({1, 2})).polynomial() == RationalPolynomial{2, -3, 1});
  CHECK(vieta_polynomial(rationals({0})).polynomial() == RationalPolynomial{0, 1});
  CHECK(vieta_polynomial(rationals({1, 1})).polynomial() == RationalPolynomial{1, -2, 1});
}

TEST_CASE("roundtrip against direct expansion") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + rng() % 8;
    std::vector<Rational> s;
    for (unsigned i = 0; i < n; ++i)
      s.emplace_back(static_cast<long long>(rng() % 41) - 20, static_cast<long long>(rng() % 9) + 1);
    const auto expanded = oracle::expand_roots(s);
    const auto poly = vieta_polynomial(s);
    for (unsigned k = 0; k <= n; ++k) CHECK(poly.polynomial().coefficient(k) == expanded[k]);
    CHECK(elementary_from_power(power_sums(s), n) == poly.elementary());
    for (const auto& x : s) CHECK(poly(x) == 0);

    auto shuffled = s;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(power_sums(shuffled) == power_sums(s));
    CHECK(vieta_polynomial(shuffled).polynomial() == poly.polynomial());
  }
}

TEST_CASE("defects") {
  const auto q5 = FieldSpec::padic(5);
  const auto zero = gn_defect(rationals({1, 2}), rationals({2, 1}), FieldSpec::real());
  CHECK(zero.power_defect == 0);
  CHECK(zero.elementary_defect == 0);
  CHECK(zero.sup_G_defect == 0);

  const auto d = gn_defect(rationals({0, 1}), rationals({5, 1}), q5);
  CHECK(d.power_defect == Rational(1, 5));
  CHECK(d.elementary_defect == Rational(1, 5));

  CHECK_THROWS(gn_defect(rationals({1}), rationals({1, 2}), q5));
}

TEST_CASE("archimedean transfer factor") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 2 + rng() % 5;
    std::vector<Rational> s, t;
    for (unsigned i = 0; i < n; ++i) {
      s.emplace_back(static_cast<long long>(rng() % 1001), 1000);
      t.emplace_back(static_cast<long long>(rng() % 1001), 1000);
    }
    const auto d = gn_defect(s, t, FieldSpec::real());
    CHECK(to_double(d.elementary_defect) <= 2.0 * n * n * to_double(d.power_defect) + 1e-12);
  }
}

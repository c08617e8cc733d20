#include <random>

#include "doctest.h"
#include "moment/extension.hpp"
#include "oracles.hpp"

using namespace moment;

namespace {

std::vector<Rational> point(std::initializer_list<Rational> xs) { return xs; }

}  // namespace

TEST_CASE("extension operator examples") {
  const auto q5 = FieldSpec::padic(5);
  const auto one = TestFunction::padic(q5, 1, std::vector<Complex>(5, 1.0));
  CHECK(std::abs(extension_op(one, std::nullopt, point({0, 0})) - 1.0) < 1e-12);
  CHECK(std::abs(extension_op(one, std::nullopt, point({Rational(7), Rational(-3)})) - 1.0) < 1e-12);

  const auto comb = TestFunction::comb(2);
  CHECK(std::abs(extension_op(comb, std::nullopt, point({0, 0})) - 2.0) < 1e-12);

  const auto sc = Scale::padic(q5, 1);
  CHECK(square_function(one, sc, point({0, 0})) == doctest::Approx(1 / std::sqrt(5.0)));
}

TEST_CASE("real extension matches direct exponential sums") {
  std::mt19937_64 rng(2);
  const auto f = random_real_function(8, rng);
  std::vector<Complex> mass;
  for (const auto& v : f.values) mass.push_back(v / 8.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational x1(static_cast<long long>(rng() % 200) - 100, 7);
    const Rational x2(static_cast<long long>(rng() % 200) - 100, 3);
    const auto got = extension_op(f, std::nullopt, point({x1, x2}));
    const auto want = oracle::real_extension(mass, {to_double(x1), to_double(x2)});
    CHECK(std::abs(got - want) < 1e-10);
  }
}

TEST_CASE("pointwise invariants") {
  std::mt19937_64 rng(4);
  const auto q5 = FieldSpec::padic(5);
  const auto sc = Scale::padic(q5, 1);
  const auto f = random_padic_function(q5, 2, rng);
  const auto g = random_padic_function(q5, 2, rng);
  std::vector<Complex> sum(f.values.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = f.values[i] + g.values[i];
  const auto fg = TestFunction::padic(q5, 2, sum);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = point({Rational(static_cast<long long>(rng() % 625), 25), Rational(static_cast<long long>(rng() % 625), 125)});
    const auto e = extension_op(fg, std::nullopt, x);
    CHECK(std::abs(e - extension_op(f, std::nullopt, x) - extension_op(g, std::nullopt, x)) < 1e-10);
    CHECK(std::abs(extension_op(f, std::nullopt, x)) <= std::sqrt(5.0) * square_function(f, sc, x) + 1e-12);
    for (const auto& cell : partition(q5, sc)) {
      double mass = 0;
      for (std::size_t a = cell.index; a < 25; a += 5) mass += std::abs(f.values[a]) / 25;
      CHECK(std::abs(extension_op(f, cell, x)) <= mass + 1e-12);
    }
  }
}

TEST_CASE("random values follow the documented map") {
  std::mt19937_64 a(17), b(17);
  const auto v = random_values(4, a);
  for (const auto& z : v) {
    const double re = static_cast<double>(b() >> 11) * 0x1.0p-53 * 2 - 1;
    const double im = static_cast<double>(b() >> 11) * 0x1.0p-53 * 2 - 1;
    CHECK(z.real() == re);
    CHECK(z.imag() == im);
  }
}

TEST_CASE("Q_p norms agree with the Parseval oracle") {
  std::mt19937_64 rng(8);
  const auto q5 = FieldSpec::padic(5);
  for (unsigned precision : {1u, 2u, 3u}) {
    const auto f = random_padic_function(q5, precision, rng);
    const auto got = weighted_norms(2, f, Scale::padic(q5, 1), WeightSpec::for_field(q5));
    const auto [lhs, rhs] = oracle::padic_norms_parseval(f, 2, 1);
    CHECK(got.lhs_power == doctest::Approx(lhs).epsilon(1e-9));
    CHECK(got.rhs_power == doctest::Approx(rhs).epsilon(1e-9));
  }
  const auto q3 = FieldSpec::padic(3);
  const auto f = random_padic_function(q3, 2, rng);
  const auto got = weighted_norms(3, f, Scale::padic(q3, 1), WeightSpec::for_field(q3));
  const auto [lhs, rhs] = oracle::padic_norms_parseval(f, 3, 1);
  CHECK(got.lhs_power == doctest::Approx(lhs).epsilon(1e-9));
  CHECK(got.rhs_power == doctest::Approx(rhs).epsilon(1e-9));
}

TEST_CASE("real norms agree with the Fourier-side oracle") {
  std::mt19937_64 rng(12);
  for (std::uint64_t R : {2u, 4u}) {
    const auto f = random_real_function(2 * R, rng);
    std::vector<Complex> mass;
    for (const auto& v : f.values) mass.push_back(v / static_cast<double>(2 * R));
    const auto got = weighted_norms(2, f, Scale::archimedean(R), WeightSpec::for_field(FieldSpec::real()));
    const auto [lhs, rhs] = oracle::real_norms_fourier(mass, 2, R);
    CHECK(got.lhs_power == doctest::Approx(lhs).epsilon(1e-8));
    CHECK(got.rhs_power == doctest::Approx(rhs).epsilon(1e-8));
  }
  const auto f = random_real_function(4, rng);
  std::vector<Complex> mass;
  for (const auto& v : f.values) mass.push_back(v / 4.0);
  const std::vector<Rational> c{Rational(3, 2), Rational(-5, 4)};
  const auto got = weighted_norms(2, f, Scale::archimedean(2), WeightSpec::for_field(FieldSpec::real(), c));
  const auto [lhs, rhs] = oracle::real_norms_fourier(mass, 2, 2, {1.5, -1.25});
  CHECK(got.lhs_power == doctest::Approx(lhs).epsilon(1e-8));
  CHECK(got.rhs_power == doctest::Approx(rhs).epsilon(1e-8));
}

TEST_CASE("comb norms agree with the Fourier-side oracle") {
  for (std::uint64_t N : {1u, 3u, 5u}) {
    const auto got = comb_ratio(2, N);
    const auto [lhs, rhs] = oracle::real_norms_fourier(std::vector<Complex>(N, 1.0), 2, N);
    CHECK(got.lhs_power == doctest::Approx(lhs).epsilon(1e-8));
    CHECK(got.rhs_power == doctest::Approx(rhs).epsilon(1e-8));
  }
  CHECK(comb_ratio(2, 1).ratio == doctest::Approx(1.0));
}

TEST_CASE("single-cell functions have ratio one") {
  const auto q5 = FieldSpec::padic(5);
  std::vector<Complex> v(25, 0.0);
  v[3] = 1;
  v[8] = Complex(0.5, -0.25);
  const auto r = weighted_norms(2, TestFunction::padic(q5, 2, v), Scale::padic(q5, 1), WeightSpec::for_field(q5));
  CHECK(r.ratio == doctest::Approx(1.0).epsilon(1e-9));

  std::vector<Complex> w(8, 0.0);
  w[4] = 1;
  w[5] = Complex(0, 1);
  const auto real = weighted_norms(2, TestFunction::real(8, w), Scale::archimedean(4), WeightSpec::for_field(FieldSpec::real()));
  CHECK(real.ratio == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("norm errors") {
  const auto q5 = FieldSpec::padic(5);
  CHECK_THROWS_WITH_AS(weighted_norms(2, TestFunction::padic(q5, 1, std::vector<Complex>(5, 0.0)), Scale::padic(q5, 1),
                                      WeightSpec::for_field(q5)),
                       "zero function", std::invalid_argument);
  QuadratureSpec coarse;
  coarse.grid_step = Rational(1, 2);
  CHECK_THROWS_AS(comb_ratio(2, 3, coarse), std::invalid_argument);
}

TEST_CASE("weight is at least one on the unit interval") {
  for (int i = 0; i <= 100; ++i) CHECK(fejer_weight(i / 100.0) >= 1 - 1e-12);
  CHECK(fejer_weight(0.5) == doctest::Approx(std::numbers::pi * std::numbers::pi / 4));
}

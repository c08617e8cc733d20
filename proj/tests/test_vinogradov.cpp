#include "doctest.h"
#include "moment/budget.hpp"
#include "moment/vinogradov.hpp"
#include "oracles.hpp"

using namespace moment;

TEST_CASE("counts match the brute-force oracle") {
  for (unsigned n : {2u, 3u}) {
    for (std::uint64_t N : {1u, 2u, 3u, 5u}) {
      const BigInt expected = oracle::vinogradov_brute(n, static_cast<std::int64_t>(N));
      CHECK(count_solutions(Curve::moment(n), N, CountMethod::HashJoin).count == expected);
      CHECK(count_solutions(Curve::moment(n), N, CountMethod::BruteForce).count == expected);
      CHECK(permutation_count(n, N) == expected);
    }
  }
  CHECK(oracle::vinogradov_brute(2, 3) == 15);
  CHECK(oracle::vinogradov_brute(2, 10) == 190);
  CHECK(oracle::vinogradov_brute(3, 2) == 20);
  CHECK(oracle::vinogradov_brute(3, 5) == 545);
}

TEST_CASE("closed forms") {
  CHECK(permutation_count(2, 10) == 190);
  CHECK(permutation_count(3, 5) == 545);
  CHECK(permutation_count(2, 1) == 1);
  for (std::uint64_t N = 1; N <= 30; ++N) {
    CHECK(permutation_count(2, N) == BigInt(2 * N * N - N));
    CHECK(permutation_count(3, N) == BigInt(6 * N * N * N - 9 * N * N + 4 * N));
  }
  CHECK(diagonal_count(2, 10) == 100);
  CHECK(diagonal_count(3, 5) == 125);
  CHECK(diagonal_count(2, 1) == 1);
}

TEST_CASE("hash join agrees with the formula at larger N") {
  for (std::uint64_t N : {30u, 60u}) CHECK(count_solutions(Curve::moment(3), N, CountMethod::HashJoin).count == permutation_count(3, N));
  CHECK(count_solutions(Curve::moment(4), 12, CountMethod::HashJoin).count == permutation_count(4, 12));
  CHECK(count_solutions(Curve::moment(2), 200, CountMethod::HashJoin).count == 79800);
}

TEST_CASE("thread count does not change the count") {
  const auto one = count_solutions(Curve::moment(3), 40, CountMethod::HashJoin, {1});
  const auto four = count_solutions(Curve::moment(3), 40, CountMethod::HashJoin, {4});
  CHECK(one.count == four.count);
}

TEST_CASE("monotone and above the diagonal") {
  BigInt prev = 0;
  for (std::uint64_t N = 1; N <= 15; ++N) {
    const auto c = count_solutions(Curve::moment(3), N, CountMethod::HashJoin).count;
    CHECK(c > prev);
    CHECK(c >= diagonal_count(3, N));
    CHECK((c == diagonal_count(3, N)) == (N == 1));
    prev = c;
  }
}

TEST_CASE("asymptotic residuals") {
  const auto rows = asymptotic_report(Curve::moment(2), {10, 100});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].residual == 10);
  CHECK(rows[0].scaled_residual == doctest::Approx(1.0));
  CHECK(rows[1].residual == 100);
  const auto three = asymptotic_report(Curve::moment(3), {10});
  CHECK(three[0].residual == 860);
  CHECK(three[0].scaled_residual == doctest::Approx(8.6));
}

TEST_CASE("non-moment curves and budgets") {
  const Curve skew("skew", {RationalPolynomial{0, 1}, RationalPolynomial{0, 0, 0, 1}});
  const auto a = count_solutions(skew, 8, CountMethod::HashJoin);
  const auto b = count_solutions(skew, 8, CountMethod::BruteForce);
  CHECK(a.count == b.count);
  CHECK_THROWS_AS(count_solutions(Curve::moment(3), 2000, CountMethod::HashJoin, {1, 1000}), BudgetExceeded);
}

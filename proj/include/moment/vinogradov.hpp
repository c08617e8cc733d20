#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moment/budget.hpp"
#include "moment/curve.hpp"
#include "moment/rational.hpp"

namespace moment {

enum class CountMethod { HashJoin, BruteForce, PermutationFormula };

std::string to_string(CountMethod method);

/// J(N) = #{(s, t) in [1,N]^(2n) : sum_i gamma(t_i) - gamma(s_i) = 0}.
struct CountResult {
  unsigned n = 0;
  std::uint64_t N = 0;
  BigInt count;
  CountMethod method = CountMethod::HashJoin;
  double elapsed = 0;  // seconds
};

struct CountOptions {
  unsigned threads = 1;
  std::uint64_t max_tuples = 2'000'000'000;  // N^n multisets (HashJoin) or N^(2n) pairs (BruteForce)
};

/// Exact count. HashJoin folds m(v)^2 over the level sets of t -> sum gamma(t_i);
/// BruteForce compares all N^(2n) pairs. The curve dimension gives n.
CountResult count_solutions(const Curve& curve, std::uint64_t N, CountMethod method,
                            const CountOptions& options = {});

/// Number of (s, t) in [1,N]^(2n) with t a rearrangement of s.
BigInt permutation_count(unsigned n, std::uint64_t N);

/// N^n.
BigInt diagonal_count(unsigned n, std::uint64_t N);

struct AsymptoticRow {
  std::uint64_t N = 0;
  BigInt count;
  BigInt main_term;  // n! N^n
  BigInt residual;   // main_term - count
  double scaled_residual = 0;  // residual / N^(n-1)
};

std::vector<AsymptoticRow> asymptotic_report(const Curve& curve, const std::vector<std::uint64_t>& Ns,
                                             const CountOptions& options = {});

}  // namespace moment

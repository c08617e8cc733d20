#include "moment/vinogradov.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "moment/parallel.hpp"

namespace moment {

std::string to_string(CountMethod method) {
  switch (method) {
    case CountMethod::HashJoin: return "HashJoin";
    case CountMethod::BruteForce: return "BruteForce";
    case CountMethod::PermutationFormula: return "PermutationFormula";
  }
  return "?";
}

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

BigInt to_big(u128 x) {
  BigInt r = static_cast<std::uint64_t>(x >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(x);
  return r;
}

u128 to_u128(const BigInt& z) {
  return static_cast<u128>(static_cast<std::uint64_t>(z >> 64)) << 64 | static_cast<std::uint64_t>(z & UINT64_MAX);
}

// values[k][t-1] = gamma_k(t) for the integer-scaled curve
std::vector<std::vector<i128>> coordinate_table(const Curve& curve, std::uint64_t N) {
  const Curve scaled = curve.integer_scaled();
  const unsigned n = scaled.dimension();
  const BigInt limit = BigInt(1) << 100;
  std::vector<std::vector<i128>> values(n, std::vector<i128>(N));
  for (unsigned k = 0; k < n; ++k) {
    for (std::uint64_t t = 1; t <= N; ++t) {
      const Rational v = scaled[k](Rational(t));
      const BigInt z = numerator(v);
      if (z * n >= limit || -z * n >= limit) throw std::invalid_argument("curve values too large for exact keys");
      const bool negative = z < 0;
      const BigInt mag = negative ? BigInt(-z) : z;
      const i128 x = static_cast<i128>(to_u128(mag));
      values[k][t - 1] = negative ? -x : x;
    }
  }
  return values;
}

struct Entry {
  u128 key;
  std::uint64_t weight;
  bool operator<(const Entry& o) const { return key < o.key; }
};

CountResult hash_join(const Curve& curve, std::uint64_t N, const CountOptions& options) {
  const unsigned n = curve.dimension();
  const BigInt multisets = binomial(static_cast<unsigned>(N + n - 1), n);
  if (multisets > BigInt(options.max_tuples)) {
    throw BudgetExceeded("hash join budget exceeded: " + multisets.str() + " multisets");
  }
  const auto values = coordinate_table(curve, N);

  // mixed-radix packing of sum_i gamma_k(t_i) - n min_k
  std::vector<i128> low(n);
  std::vector<u128> stride(n);
  BigInt space = 1;
  for (unsigned k = 0; k < n; ++k) {
    const auto [lo, hi] = std::minmax_element(values[k].begin(), values[k].end());
    low[k] = *lo * n;
    const i128 range = (*hi - *lo) * n + 1;
    const BigInt r = to_big(static_cast<u128>(range));
    if (space * r >= (BigInt(1) << 127)) throw std::invalid_argument("key space exceeds 128 bits");
    stride[k] = to_u128(space);
    space *= r;
  }

  std::vector<std::uint64_t> fact(n + 1, 1);
  for (unsigned i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;

  std::vector<std::vector<Entry>> per_chunk(N);
  parallel_for_chunks(N, options.threads, [&](std::size_t first) {
    auto& out = per_chunk[first];
    std::vector<std::uint64_t> t(n);
    std::vector<i128> partial((n + 1) * n, 0);
    std::function<void(unsigned, std::uint64_t)> rec = [&](unsigned level, std::uint64_t start) {
      if (level == n) {
        const i128* v = &partial[n * n];
        u128 key = 0;
        for (unsigned k = 0; k < n; ++k) key += static_cast<u128>(v[k] - low[k]) * stride[k];
        std::uint64_t denom = 1;
        unsigned run = 1;
        for (unsigned i = 1; i < n; ++i) {
          if (t[i] == t[i - 1]) {
            ++run;
          } else {
            denom *= fact[run];
            run = 1;
          }
        }
        denom *= fact[run];
        out.push_back(Entry{key, fact[n] / denom});
        return;
      }
      for (std::uint64_t r = start; r < N; ++r) {
        t[level] = r;
        for (unsigned k = 0; k < n; ++k) partial[(level + 1) * n + k] = partial[level * n + k] + values[k][r];
        rec(level + 1, r);
      }
    };
    t[0] = first;
    for (unsigned k = 0; k < n; ++k) partial[n + k] = values[k][first];
    rec(1, first);
  });

  std::vector<Entry> all;
  all.reserve(multisets.convert_to<std::size_t>());
  for (auto& chunk : per_chunk) {
    all.insert(all.end(), chunk.begin(), chunk.end());
    std::vector<Entry>().swap(chunk);
  }
  std::sort(all.begin(), all.end());
  u128 total = 0;
  for (std::size_t i = 0; i < all.size();) {
    u128 m = 0;
    std::size_t j = i;
    for (; j < all.size() && all[j].key == all[i].key; ++j) m += all[j].weight;
    total += m * m;
    i = j;
  }
  CountResult r;
  r.n = n;
  r.N = N;
  r.count = to_big(total);
  r.method = CountMethod::HashJoin;
  return r;
}

CountResult brute_force(const Curve& curve, std::uint64_t N, const CountOptions& options) {
  const unsigned n = curve.dimension();
  const auto tuples_opt = checked_pow(N, n);
  const auto pairs = tuples_opt ? checked_pow(*tuples_opt, 2) : std::nullopt;
  if (!pairs || *pairs > options.max_tuples) throw BudgetExceeded("brute force budget exceeded");
  const std::uint64_t T = *tuples_opt;
  const auto values = coordinate_table(curve, N);

  // sums[a * n + k] = sum_i gamma_k(t_i) for the a-th ordered tuple
  std::vector<i128> sums(T * n, 0);
  for (std::uint64_t a = 0; a < T; ++a) {
    std::uint64_t rest = a;
    for (unsigned i = 0; i < n; ++i) {
      const std::uint64_t ti = rest % N;
      rest /= N;
      for (unsigned k = 0; k < n; ++k) sums[a * n + k] += values[k][ti];
    }
  }
  const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(T, 256));
  std::vector<std::uint64_t> per_chunk(chunks, 0);
  parallel_for_chunks(chunks, options.threads, [&](std::size_t c) {
    const std::uint64_t from = T * c / chunks;
    const std::uint64_t to = T * (c + 1) / chunks;
    std::uint64_t hits = 0;
    for (std::uint64_t a = from; a < to; ++a) {
      const i128* sa = &sums[a * n];
      for (std::uint64_t b = 0; b < T; ++b) {
        const i128* sb = &sums[b * n];
        unsigned k = 0;
        while (k < n && sa[k] == sb[k]) ++k;
        hits += (k == n);
      }
    }
    per_chunk[c] = hits;
  });
  BigInt total = 0;
  for (auto h : per_chunk) total += h;
  CountResult r;
  r.n = n;
  r.N = N;
  r.count = total;
  r.method = CountMethod::BruteForce;
  return r;
}

}  // namespace

CountResult count_solutions(const Curve& curve, std::uint64_t N, CountMethod method, const CountOptions& options) {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  CountResult r;
  switch (method) {
    case CountMethod::HashJoin: r = hash_join(curve, N, options); break;
    case CountMethod::BruteForce: r = brute_force(curve, N, options); break;
    case CountMethod::PermutationFormula:
      if (!curve.is_moment()) throw std::invalid_argument("the permutation formula holds for the moment curve");
      r.n = curve.dimension();
      r.N = N;
      r.count = permutation_count(curve.dimension(), N);
      r.method = CountMethod::PermutationFormula;
      break;
  }
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

BigInt permutation_count(unsigned n, std::uint64_t N) {
  if (n < 1 || N < 1) throw std::invalid_argument("permutation_count needs n, N >= 1");
  const BigInt nfact = factorial(n);
  BigInt total = 0;
  // partitions of n as nonincreasing parts
  std::vector<unsigned> parts;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      const std::size_t len = parts.size();
      if (len > N) return;
      BigInt choose = 1;
      for (std::size_t i = 0; i < len; ++i) choose *= N - i;
      BigInt orderings = nfact;
      for (std::size_t i = 0; i < len;) {
        std::size_t j = i;
        while (j < len && parts[j] == parts[i]) ++j;
        choose /= factorial(static_cast<unsigned>(j - i));
        i = j;
      }
      for (auto part : parts) orderings /= factorial(part);
      total += choose * orderings * orderings;
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      rec(remaining - part, part);
      parts.pop_back();
    }
  };
  rec(n, n);
  return total;
}

BigInt diagonal_count(unsigned n, std::uint64_t N) { return pow(BigInt(N), n); }

std::vector<AsymptoticRow> asymptotic_report(const Curve& curve, const std::vector<std::uint64_t>& Ns,
                                             const CountOptions& options) {
  const unsigned n = curve.dimension();
  std::vector<AsymptoticRow> rows;
  for (auto N : Ns) {
    AsymptoticRow row;
    row.N = N;
    row.count = count_solutions(curve, N, CountMethod::HashJoin, options).count;
    row.main_term = factorial(n) * pow(BigInt(N), n);
    row.residual = row.main_term - row.count;
    row.scaled_residual = to_double(Rational(row.residual, pow(BigInt(N), n - 1)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace moment

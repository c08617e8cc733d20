#include "moment/syzygy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "moment/bounds.hpp"
#include "moment/parallel.hpp"

namespace moment {

std::string to_string(SyzygyMethod method) {
  switch (method) {
    case SyzygyMethod::CongruenceExact: return "CongruenceExact";
    case SyzygyMethod::PermutationOracle: return "PermutationOracle";
    case SyzygyMethod::RealSampled: return "RealSampled";
  }
  return "?";
}

bool SyzygyReport::contains(const CellTuple& J) const {
  return std::binary_search(members.begin(), members.end(), J,
                            [](const CellTuple& a, const CellTuple& b) { return a.indices() < b.indices(); });
}

std::vector<std::vector<std::uint64_t>> distinct_orderings(std::vector<std::uint64_t> indices) {
  std::sort(indices.begin(), indices.end());
  std::vector<std::vector<std::uint64_t>> out;
  do {
    out.push_back(indices);
  } while (std::next_permutation(indices.begin(), indices.end()));
  return out;
}

bool permutation_predicate(const CellTuple& I, const CellTuple& J) {
  if (I.size() != J.size()) return false;
  if (!(I.field() == J.field()) || !(I.scale() == J.scale())) {
    throw std::invalid_argument("permutation_predicate: tuples from different fields or scales");
  }
  auto a = I.indices();
  auto b = J.indices();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

SyzygyReport permutation_set(const CellTuple& I) {
  SyzygyReport r;
  r.base = I;
  r.epsilon = pow(I.scale().delta, static_cast<unsigned>(I.size()));
  r.method = SyzygyMethod::PermutationOracle;
  for (auto& idx : distinct_orderings(I.indices())) r.members.push_back(CellTuple::of(I.field(), I.scale(), idx));
  r.cardinality = r.members.size();
  return r;
}

double syzygy_bound(const FieldSpec& field, unsigned n) {
  return to_double(field_constant(field, n) * pow(BigInt(n), n));
}

namespace {

// ---------------------------------------------------------------------------
// Q_p congruence enumeration

struct Congruence {
  unsigned n = 0;
  std::uint64_t cells = 0;  // p^s
  std::uint64_t lift = 0;   // p^((n-1)s): residues mod p^(ns) per cell
  std::uint64_t M = 0;      // p^(ns)
  std::vector<std::vector<std::uint64_t>> pw;  // pw[k][r] = r^(k+1) mod M

  std::uint64_t pack(const std::uint64_t* v) const {
    std::uint64_t key = 0;
    for (unsigned k = n; k-- > 0;) key = key * M + v[k];
    return key;
  }
  std::uint64_t addmod(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= M ? s - M : s;
  }
};

Congruence make_congruence(const Curve& curve, const CellTuple& I, const EnumerationOptions& options) {
  if (!curve.is_moment()) throw std::invalid_argument("the exact Q_p decision supports the moment curve only");
  if (I.field().kind != FieldKind::PAdic) throw std::invalid_argument("expected a Q_p cell tuple");
  if (curve.dimension() != I.size()) throw std::invalid_argument("tuple length differs from curve dimension");
  const unsigned n = curve.dimension();
  const std::uint64_t p = I.field().prime;
  const unsigned s = I.scale().exponent;

  const auto insertions = checked_pow(p, (n - 1) * s * n);
  if (!insertions || *insertions > options.max_insertions) {
    throw BudgetExceeded("enumeration budget exceeded: p^((n-1)sn) = " + std::to_string(p) + "^" +
                         std::to_string((n - 1) * s * n) + " power-sum keys per side, budget " +
                         std::to_string(options.max_insertions));
  }
  Congruence c;
  c.n = n;
  c.cells = I.scale().cells_per_axis;
  c.lift = ipow(p, (n - 1) * s);
  c.M = ipow(p, n * s);
  c.pw.assign(n, std::vector<std::uint64_t>(c.M));
  for (std::uint64_t r = 0; r < c.M; ++r) {
    std::uint64_t x = r % c.M;
    for (unsigned k = 0; k < n; ++k) {
      c.pw[k][r] = x;
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * r % c.M);
    }
  }
  return c;
}

// Set of packed power-sum vectors; a dense bitset when the key space is small.
class KeySet {
 public:
  explicit KeySet(const Congruence& c) {
    const auto space = checked_pow(c.M, c.n);
    dense_ = space && *space <= (std::uint64_t{1} << 30);
    if (dense_) bits_.assign((*space + 63) / 64, 0);
  }
  void insert(std::uint64_t key) {
    if (dense_) {
      bits_[key >> 6] |= std::uint64_t{1} << (key & 63);
    } else {
      sorted_.push_back(key);
    }
  }
  void finalize() {
    if (!dense_) {
      std::sort(sorted_.begin(), sorted_.end());
      sorted_.erase(std::unique(sorted_.begin(), sorted_.end()), sorted_.end());
    }
  }
  bool contains(std::uint64_t key) const {
    if (dense_) return (bits_[key >> 6] >> (key & 63)) & 1U;
    return std::binary_search(sorted_.begin(), sorted_.end(), key);
  }

 private:
  bool dense_ = false;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> sorted_;
};

// Visits the packed key of every residue tuple (r_1, ..., r_n) with r_i in cell idx[i];
// stops early when visit returns true.
bool for_each_product_key(const Congruence& c, const std::vector<std::uint64_t>& idx,
                          const std::function<bool(std::uint64_t)>& visit) {
  const unsigned n = c.n;
  std::vector<std::uint64_t> partial((n + 1) * n, 0);
  std::function<bool(unsigned)> rec = [&](unsigned level) -> bool {
    if (level == n) return visit(c.pack(&partial[n * n]));
    const std::uint64_t* prev = &partial[level * n];
    std::uint64_t* next = &partial[(level + 1) * n];
    for (std::uint64_t b = 0; b < c.lift; ++b) {
      const std::uint64_t r = idx[level] + c.cells * b;
      for (unsigned k = 0; k < n; ++k) next[k] = c.addmod(prev[k], c.pw[k][r]);
      if (rec(level + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

KeySet base_keys(const Congruence& c, const CellTuple& I) {
  KeySet keys(c);
  for_each_product_key(c, I.indices(), [&](std::uint64_t key) {
    keys.insert(key);
    return false;
  });
  keys.finalize();
  return keys;
}

std::uint64_t multiset_probe_count(std::uint64_t M, unsigned n) {
  // C(M + n - 1, n), saturating
  BigInt count = binomial(static_cast<unsigned>(std::min<std::uint64_t>(M + n - 1, UINT32_MAX)), n);
  if (count > BigInt(UINT64_MAX)) return UINT64_MAX;
  return count.convert_to<std::uint64_t>();
}

// Codes (mixed radix over sorted cell indices) of the cell multisets of every
// nondecreasing residue tuple whose power sums lie in `keys`.
std::vector<std::uint64_t> probe_multisets(const Congruence& c, const KeySet& keys, unsigned threads) {
  const unsigned n = c.n;
  std::vector<std::vector<std::uint64_t>> per_chunk(c.M);
  parallel_for_chunks(c.M, threads, [&](std::size_t first) {
    std::vector<std::uint64_t> partial((n + 1) * n, 0);
    std::vector<std::uint64_t> t(n);
    std::vector<std::uint64_t> cells(n);
    auto& hits = per_chunk[first];
    auto record = [&] {
      for (unsigned i = 0; i < n; ++i) cells[i] = t[i] % c.cells;
      std::sort(cells.begin(), cells.end());
      std::uint64_t code = 0;
      for (unsigned i = n; i-- > 0;) code = code * c.cells + cells[i];
      if (std::find(hits.begin(), hits.end(), code) == hits.end()) hits.push_back(code);
    };
    std::function<void(unsigned, std::uint64_t)> rec = [&](unsigned level, std::uint64_t start) {
      const std::uint64_t* prev = &partial[level * n];
      std::uint64_t* next = &partial[(level + 1) * n];
      if (level + 1 == n) {
        for (std::uint64_t r = start; r < c.M; ++r) {
          for (unsigned k = 0; k < n; ++k) next[k] = c.addmod(prev[k], c.pw[k][r]);
          if (keys.contains(c.pack(next))) {
            t[level] = r;
            record();
          }
        }
        return;
      }
      for (std::uint64_t r = start; r < c.M; ++r) {
        t[level] = r;
        for (unsigned k = 0; k < n; ++k) next[k] = c.addmod(prev[k], c.pw[k][r]);
        rec(level + 1, r);
      }
    };
    t[0] = first;
    for (unsigned k = 0; k < n; ++k) partial[n + k] = c.pw[k][first];
    rec(1, first);
  });
  std::vector<std::uint64_t> codes;
  for (auto& h : per_chunk) codes.insert(codes.end(), h.begin(), h.end());
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

std::vector<std::uint64_t> decode_multiset(std::uint64_t code, std::uint64_t radix, unsigned n) {
  std::vector<std::uint64_t> cells(n);
  for (unsigned i = 0; i < n; ++i) {
    cells[i] = code % radix;
    code /= radix;
  }
  return cells;
}

void sort_members(SyzygyReport& r) {
  std::vector<std::size_t> order(r.members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::vector<std::uint64_t>> keys;
  keys.reserve(r.members.size());
  for (const auto& m : r.members) keys.push_back(m.indices());
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<CellTuple> members;
  std::vector<Witness> witnesses;
  for (auto i : order) {
    members.push_back(r.members[i]);
    if (!r.witnesses.empty()) witnesses.push_back(r.witnesses[i]);
  }
  r.members = std::move(members);
  r.witnesses = std::move(witnesses);
  r.cardinality = r.members.size();
}

}  // namespace

bool is_syzygy_nonarch(const Curve& curve, const CellTuple& I, const CellTuple& J, const EnumerationOptions& options) {
  if (!(I.field() == J.field()) || !(I.scale() == J.scale()) || I.size() != J.size()) {
    throw std::invalid_argument("is_syzygy_nonarch: tuples must share field, scale and length");
  }
  const Congruence c = make_congruence(curve, I, options);
  const KeySet keys = base_keys(c, I);
  return for_each_product_key(c, J.indices(), [&](std::uint64_t key) { return keys.contains(key); });
}

SyzygyReport syzygy_set_nonarch(const Curve& curve, const CellTuple& I, const EnumerationOptions& options) {
  const Congruence c = make_congruence(curve, I, options);
  const std::uint64_t probes = multiset_probe_count(c.M, c.n);
  if (probes > options.max_probes) {
    throw BudgetExceeded("enumeration budget exceeded: " + std::to_string(probes) + " probe tuples, budget " +
                         std::to_string(options.max_probes));
  }
  const KeySet keys = base_keys(c, I);
  SyzygyReport r;
  r.base = I;
  r.epsilon = pow(I.scale().delta, c.n);
  r.method = SyzygyMethod::CongruenceExact;
  for (auto code : probe_multisets(c, keys, options.threads)) {
    for (auto& idx : distinct_orderings(decode_multiset(code, c.cells, c.n))) {
      r.members.push_back(CellTuple::of(I.field(), I.scale(), idx));
    }
  }
  sort_members(r);
  return r;
}

namespace {

void for_each_multiset(unsigned n, std::uint64_t radix, const std::function<void(const std::vector<std::uint64_t>&)>& f) {
  std::vector<std::uint64_t> idx(n, 0);
  for (;;) {
    f(idx);
    int pos = static_cast<int>(n) - 1;
    while (pos >= 0 && idx[pos] + 1 == radix) --pos;
    if (pos < 0) return;
    const std::uint64_t v = idx[pos] + 1;
    for (unsigned i = pos; i < n; ++i) idx[i] = v;
  }
}

}  // namespace

ScaleSurvey survey_scale_nonarch(const FieldSpec& field, unsigned n, unsigned s, const EnumerationOptions& options) {
  const Scale scale = Scale::padic(field, s);
  const Curve curve = Curve::moment(n);
  ScaleSurvey survey;
  survey.field = field;
  survey.n = n;
  survey.s = s;
  for_each_multiset(n, scale.cells_per_axis, [&](const std::vector<std::uint64_t>& idx) {
    const CellTuple I = CellTuple::of(field, scale, idx);
    const SyzygyReport r = syzygy_set_nonarch(curve, I, options);
    ++survey.base_multisets;
    if (r.cardinality > survey.max_cardinality) {
      survey.max_cardinality = r.cardinality;
      survey.argmax = idx;
    }
    const SyzygyReport oracle = permutation_set(I);
    if (oracle.members == r.members) {
      ++survey.oracle_agreements;
    } else if (!survey.first_disagreement) {
      survey.first_disagreement = idx;
    }
  });
  return survey;
}

// ---------------------------------------------------------------------------
// R grid sampler

SyzygyReport syzygy_set_real(const Curve& curve, const CellTuple& I, const Rational& epsilon,
                             const Rational& grid_step, const EnumerationOptions& options) {
  if (I.field().kind != FieldKind::Real) throw std::invalid_argument("syzygy_set_real expects real cells");
  if (curve.dimension() != I.size()) throw std::invalid_argument("tuple length differs from curve dimension");
  if (epsilon < 0) throw std::invalid_argument("epsilon must be nonnegative");
  const unsigned n = curve.dimension();
  const Rational delta = I.scale().delta;
  const std::uint64_t R = I.scale().cells_per_axis;
  if (grid_step <= 0) throw std::invalid_argument("empty grid: grid step must be positive");
  if (grid_step > delta / 8) throw std::invalid_argument("grid step must be at most delta/8");
  const Rational per_cell = delta / grid_step;
  if (denominator(per_cell) != 1) throw std::invalid_argument("grid step must divide delta");
  const std::uint64_t G = numerator(per_cell).convert_to<std::uint64_t>();
  const std::uint64_t P = R * G;

  const BigInt pairs = pow(BigInt(G), n) * binomial(static_cast<unsigned>(P + n - 1), n);
  if (pairs > BigInt(options.max_probes)) {
    throw BudgetExceeded("sampler budget exceeded: " + pairs.str() + " grid pairs");
  }

  std::vector<std::vector<Rational>> exact(P);
  std::vector<std::vector<double>> approx(P);
  for (std::uint64_t q = 0; q < P; ++q) {
    exact[q] = curve(grid_step * q);
    approx[q].reserve(n);
    for (const auto& v : exact[q]) approx[q].push_back(to_double(v));
  }

  // I side: every grid tuple s in I, with its coordinate sums
  struct Side {
    std::vector<std::uint64_t> pts;
    std::vector<double> sum;
  };
  std::vector<Side> base;
  {
    const auto idx = I.indices();
    std::vector<std::uint64_t> pts(n);
    std::function<void(unsigned)> rec = [&](unsigned level) {
      if (level == n) {
        Side side{pts, std::vector<double>(n, 0.0)};
        for (auto q : pts)
          for (unsigned k = 0; k < n; ++k) side.sum[k] += approx[q][k];
        base.push_back(std::move(side));
        return;
      }
      for (std::uint64_t g = 0; g < G; ++g) {
        pts[level] = idx[level] * G + g;
        rec(level + 1);
      }
    };
    rec(0);
  }

  const double eps = to_double(epsilon);
  const double slack = 1e-9 * std::max(1.0, eps) + 1e-12;
  auto exact_close = [&](const std::vector<std::uint64_t>& s, const std::vector<std::uint64_t>& t) {
    for (unsigned k = 0; k < n; ++k) {
      Rational d = 0;
      for (unsigned i = 0; i < n; ++i) d += exact[t[i]][k] - exact[s[i]][k];
      if (abs(d) > epsilon) return false;
    }
    return true;
  };

  // t side: nondecreasing grid tuples, sharded by the first point.
  struct Found {
    std::uint64_t code;
    std::vector<std::uint64_t> s;
    std::vector<std::uint64_t> t;
  };
  std::vector<std::vector<Found>> per_chunk(P);
  parallel_for_chunks(P, options.threads, [&](std::size_t first) {
    auto& found = per_chunk[first];
    std::vector<std::uint64_t> t(n);
    std::vector<double> sum(n);
    std::function<void(unsigned, std::uint64_t)> rec = [&](unsigned level, std::uint64_t start) {
      if (level == n) {
        std::uint64_t code = 0;
        for (unsigned i = n; i-- > 0;) code = code * R + t[i] / G;
        for (const auto& f : found)
          if (f.code == code) return;
        std::fill(sum.begin(), sum.end(), 0.0);
        for (auto q : t)
          for (unsigned k = 0; k < n; ++k) sum[k] += approx[q][k];
        for (const auto& side : base) {
          bool close = true;
          for (unsigned k = 0; k < n && close; ++k) close = std::abs(sum[k] - side.sum[k]) <= eps + slack;
          if (close && exact_close(side.pts, t)) {
            found.push_back(Found{code, side.pts, t});
            return;
          }
        }
        return;
      }
      for (std::uint64_t q = start; q < P; ++q) {
        t[level] = q;
        rec(level + 1, q);
      }
    };
    t[0] = first;
    rec(1, first);
  });

  std::map<std::uint64_t, Found> witness_by_code;
  for (auto& chunk : per_chunk)
    for (auto& f : chunk) witness_by_code.try_emplace(f.code, std::move(f));

  SyzygyReport r;
  r.base = I;
  r.epsilon = epsilon;
  r.method = SyzygyMethod::RealSampled;
  for (const auto& [code, f] : witness_by_code) {
    std::vector<std::uint64_t> cells(n);
    for (unsigned i = 0; i < n; ++i) cells[i] = f.t[i] / G;
    for (auto& order : distinct_orderings(cells)) {
      // permute t so that t'_j lies in cell order[j]
      std::vector<bool> used(n, false);
      Witness w;
      for (unsigned i = 0; i < n; ++i) w.s.push_back(grid_step * f.s[i]);
      for (unsigned j = 0; j < n; ++j) {
        for (unsigned i = 0; i < n; ++i) {
          if (!used[i] && f.t[i] / G == order[j]) {
            used[i] = true;
            w.t.push_back(grid_step * f.t[i]);
            break;
          }
        }
      }
      r.members.push_back(CellTuple::of(I.field(), I.scale(), order));
      r.witnesses.push_back(std::move(w));
    }
  }
  sort_members(r);
  return r;
}

std::size_t max_cardinality_real(const Curve& curve, std::uint64_t R, const Rational& grid_step,
                                 const EnumerationOptions& options) {
  const FieldSpec field = FieldSpec::real();
  const Scale scale = Scale::archimedean(R);
  const unsigned n = curve.dimension();
  const Rational eps = pow(scale.delta, n);
  std::size_t best = 0;
  for_each_multiset(n, R, [&](const std::vector<std::uint64_t>& idx) {
    best = std::max(best, syzygy_set_real(curve, CellTuple::of(field, scale, idx), eps, grid_step, options).cardinality);
  });
  return best;
}

}  // namespace moment

#include "moment/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "moment/bounds.hpp"
#include "moment/extension.hpp"
#include "moment/local_field.hpp"
#include "moment/symmetric.hpp"
#include "moment/syzygy.hpp"
#include "moment/vinogradov.hpp"

namespace moment {

bool VerifySummary::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed || c.informational; });
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"local_field", "symmetric", "syzygy", "vinogradov", "extension", "bounds"};
  return names;
}

namespace {

struct Context {
  std::mt19937_64 rng;
  unsigned threads;
  std::vector<CheckResult>* out;
  std::string module;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    out->push_back({module, name, ok, false, detail});
  }
  void inform(const std::string& name, const std::string& detail) { out->push_back({module, name, true, true, detail}); }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational random_rational(std::int64_t range = 50, std::int64_t max_den = 20) {
    return Rational(uniform_int(-range, range), uniform_int(1, max_den));
  }
  double unit() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
};

// ---------------------------------------------------------------------------

void verify_local_field(Context& ctx) {
  {
    const FieldSpec F = FieldSpec::padic(3);
    const Scale sc = Scale::padic(F, 2);
    const auto cells = partition(F, sc);
    std::vector<int> hits(27, 0);
    for (const auto& c : cells)
      for (const auto& r : cell_representatives(c, 3)) ++hits[r.residue];
    ctx.check("partition Q_3 s=2 covers residues mod 27 once",
              cells.size() == 9 && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  }
  {
    bool hom = true, unit = true, kernel = true;
    for (std::uint64_t p : {2, 3, 5, 7}) {
      const FieldSpec F = FieldSpec::padic(p);
      for (int trial = 0; trial < 50; ++trial) {
        const Rational x(ctx.uniform_int(-500, 500), pow(BigInt(p), static_cast<unsigned>(ctx.uniform_int(0, 4))));
        const Rational y(ctx.uniform_int(-500, 500), pow(BigInt(p), static_cast<unsigned>(ctx.uniform_int(0, 4))));
        const auto ex = character(F, x), ey = character(F, y), exy = character(F, x + y);
        hom = hom && std::abs(exy - ex * ey) < 1e-12;
        unit = unit && std::abs(std::abs(ex) - 1) < 1e-12;
        kernel = kernel && ((character_phase(F, x) == 0) == (denominator(x) == 1));
      }
    }
    const FieldSpec R = FieldSpec::real();
    for (int trial = 0; trial < 50; ++trial) {
      const Rational x = ctx.random_rational(), y = ctx.random_rational();
      hom = hom && std::abs(character(R, x + y) - character(R, x) * character(R, y)) < 1e-12;
    }
    ctx.check("character is a unitary homomorphism", hom && unit);
    ctx.check("Q_p character is trivial exactly on O", kernel);
  }
  {
    bool mult = true, ultra = true;
    for (std::uint64_t p : {2, 3, 5}) {
      const FieldSpec F = FieldSpec::padic(p);
      for (int trial = 0; trial < 100; ++trial) {
        const Rational x = ctx.random_rational(500, 100), y = ctx.random_rational(500, 100);
        mult = mult && abs_value(F, x * y) == abs_value(F, x) * abs_value(F, y);
        ultra = ultra && abs_value(F, x + y) <= std::max(abs_value(F, x), abs_value(F, y));
      }
    }
    ctx.check("p-adic absolute value is multiplicative", mult);
    ctx.check("p-adic absolute value is ultrametric", ultra);
  }
}

// ---------------------------------------------------------------------------

void verify_symmetric(Context& ctx) {
  bool roundtrip = true, perm = true;
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = static_cast<unsigned>(ctx.uniform_int(1, 8));
    std::vector<Rational> s(n);
    for (auto& x : s) x = ctx.random_rational(20, 9);
    const auto ps = power_sums(s);
    roundtrip = roundtrip && elementary_from_power(ps, n) == vieta_polynomial(s).elementary();
    auto shuffled = s;
    std::shuffle(shuffled.begin(), shuffled.end(), ctx.rng);
    perm = perm && power_sums(shuffled) == ps &&
           vieta_polynomial(shuffled).polynomial() == vieta_polynomial(s).polynomial();
  }
  ctx.check("power sums -> elementary matches Vieta coefficients", roundtrip);
  ctx.check("power sums and G(s;X) are permutation invariant", perm);

  double worst = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = static_cast<unsigned>(ctx.uniform_int(2, 8));
    std::vector<Rational> s(n), t(n);
    for (unsigned i = 0; i < n; ++i) {
      s[i] = Rational(ctx.uniform_int(0, 1 << 20), 1 << 20);
      t[i] = std::clamp(Rational(s[i] + Rational(ctx.uniform_int(-64, 64), 1 << 20)), Rational(0), Rational(1));
    }
    const auto d = gn_defect(s, t, FieldSpec::real());
    if (d.power_defect > 0) worst = std::max(worst, to_double(d.elementary_defect / d.power_defect) / (2.0 * n * n));
  }
  std::ostringstream os;
  os << "max elementary/(2n^2 power) defect ratio " << worst;
  ctx.check("archimedean transfer loses at most 2n^2", worst <= 1 + 1e-12, os.str());

  bool ultra = true;
  const FieldSpec F = FieldSpec::padic(7);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = static_cast<unsigned>(ctx.uniform_int(2, 6));
    std::vector<Rational> s(n), t(n);
    for (unsigned i = 0; i < n; ++i) {
      s[i] = ctx.uniform_int(0, 2400);
      t[i] = s[i] + 7 * ctx.uniform_int(-50, 50);
    }
    const auto d = gn_defect(s, t, F);
    ultra = ultra && d.elementary_defect <= d.power_defect;
  }
  ctx.check("Q_7 transfer keeps the power-sum defect (p > n)", ultra);
}

// ---------------------------------------------------------------------------

void verify_syzygy(Context& ctx) {
  EnumerationOptions opts;
  opts.threads = ctx.threads;
  for (auto [p, n, s] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{{5, 2, 1}, {5, 2, 2}, {5, 3, 1}}) {
    const auto survey = survey_scale_nonarch(FieldSpec::padic(p), n, s, opts);
    std::ostringstream os;
    os << survey.oracle_agreements << "/" << survey.base_multisets << " bases, max |S| = " << survey.max_cardinality;
    ctx.check("strong diagonal Q_" + std::to_string(p) + " n=" + std::to_string(n) + " s=" + std::to_string(s),
              survey.oracle_agreements == survey.base_multisets &&
                  BigInt(survey.max_cardinality) <= pow(BigInt(n), n),
              os.str());
  }
  {
    const FieldSpec F = FieldSpec::padic(3);
    const Scale sc = Scale::padic(F, 1);
    const Curve c = Curve::moment(2);
    bool symmetric = true, reflexive = true;
    for (std::uint64_t a = 0; a < 9; ++a) {
      const std::vector<std::uint64_t> ia{a / 3, a % 3};
      const auto I = CellTuple::of(F, sc, ia);
      reflexive = reflexive && is_syzygy_nonarch(c, I, I, opts);
      for (std::uint64_t b = 0; b < 9; ++b) {
        const std::vector<std::uint64_t> jb{b / 3, b % 3};
        const auto J = CellTuple::of(F, sc, jb);
        symmetric = symmetric && is_syzygy_nonarch(c, I, J, opts) == is_syzygy_nonarch(c, J, I, opts);
      }
    }
    ctx.check("syzygy relation is symmetric and reflexive (Q_3, n=2)", symmetric && reflexive);
  }
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 3}, {2, 2}}) {
    const auto survey = survey_scale_nonarch(FieldSpec::padic(p), n, 1, opts);
    std::ostringstream os;
    os << "p=" << p << " n=" << n << " s=1: max |S| = " << survey.max_cardinality << " (n^n = " << pow(BigInt(n), n)
       << "), permutation sets " << survey.oracle_agreements << "/" << survey.base_multisets;
    ctx.inform("small prime p <= n", os.str());
  }
  {
    const FieldSpec R = FieldSpec::real();
    const Scale sc = Scale::archimedean(4);
    const Curve c = Curve::moment(2);
    const Rational eps = pow(sc.delta, 2);
    bool sound = true, reflexive = true;
    for (std::uint64_t a = 0; a < 16; ++a) {
      const std::vector<std::uint64_t> ia{a / 4, a % 4};
      const auto I = CellTuple::of(R, sc, ia);
      const auto rep = syzygy_set_real(c, I, eps, Rational(1, 32), opts);
      reflexive = reflexive && rep.contains(I);
      for (std::size_t k = 0; k < rep.members.size(); ++k) {
        const auto& w = rep.witnesses[k];
        for (unsigned d = 1; d <= 2; ++d) {
          Rational diff = 0;
          for (unsigned i = 0; i < 2; ++i) diff += pow(w.t[i], d) - pow(w.s[i], d);
          sound = sound && abs(diff) <= eps;
        }
        for (unsigned i = 0; i < 2; ++i) {
          sound = sound && w.s[i] >= sc.delta * I[i].index && w.s[i] < sc.delta * (I[i].index + 1);
          sound = sound && w.t[i] >= sc.delta * rep.members[k][i].index &&
                  w.t[i] < sc.delta * (rep.members[k][i].index + 1);
        }
      }
    }
    ctx.check("real sampler witnesses verify exactly", sound && reflexive);
  }
}

// ---------------------------------------------------------------------------

void verify_vinogradov(Context& ctx) {
  CountOptions opts;
  opts.threads = ctx.threads;
  bool formula = true, brute = true, monotone = true, diagonal = true;
  for (unsigned n : {2u, 3u}) {
    BigInt last = 0;
    for (std::uint64_t N = 1; N <= (n == 2 ? 30u : 15u); ++N) {
      const auto hj = count_solutions(Curve::moment(n), N, CountMethod::HashJoin, opts).count;
      formula = formula && hj == permutation_count(n, N);
      monotone = monotone && hj > last;
      diagonal = diagonal && hj >= diagonal_count(n, N) && ((hj == diagonal_count(n, N)) == (N == 1));
      if (N <= (n == 2 ? 12u : 5u)) brute = brute && hj == count_solutions(Curve::moment(n), N, CountMethod::BruteForce, opts).count;
      last = hj;
    }
  }
  ctx.check("hash join equals the permutation formula", formula);
  ctx.check("hash join equals brute force", brute);
  ctx.check("J(N) is strictly increasing", monotone);
  ctx.check("J(N) >= N^n with equality only at N = 1", diagonal);
  CountOptions one = opts, many = opts;
  one.threads = 1;
  many.threads = 4;
  ctx.check("hash join is thread-count independent",
            count_solutions(Curve::moment(3), 40, CountMethod::HashJoin, one).count ==
                count_solutions(Curve::moment(3), 40, CountMethod::HashJoin, many).count);
}

// ---------------------------------------------------------------------------

void verify_extension(Context& ctx) {
  const FieldSpec F = FieldSpec::padic(5);
  const Scale sc = Scale::padic(F, 1);
  QuadratureSpec quad;
  quad.threads = ctx.threads;
  bool linear = true, cs = true, modulus = true;
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_padic_function(F, 2, ctx.rng);
    const auto g = random_padic_function(F, 2, ctx.rng);
    std::vector<Complex> sum(f.values.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = f.values[i] + g.values[i];
    const auto fg = TestFunction::padic(F, 2, sum);
    const std::vector<Rational> x{Rational(ctx.uniform_int(0, 124), 125), Rational(ctx.uniform_int(0, 624), 625)};
    const auto ef = extension_op(f, std::nullopt, x);
    linear = linear && std::abs(extension_op(fg, std::nullopt, x) - ef - extension_op(g, std::nullopt, x)) < 1e-10;
    cs = cs && std::abs(ef) <= std::sqrt(5.0) * square_function(f, sc, x) + 1e-12;
    double l1 = 0;
    for (const auto& v : f.values) l1 += std::abs(v) / static_cast<double>(f.values.size());
    modulus = modulus && std::abs(ef) <= l1 + 1e-12;
  }
  ctx.check("extension is linear", linear);
  ctx.check("|E_O f| <= (#cells)^(1/2) S f pointwise", cs);
  ctx.check("|E_O f| <= integral |f|", modulus);

  const double bound = theorem1_constant(F, 2);
  double worst = 0;
  for (int trial = 0; trial < 10; ++trial) {
    worst = std::max(worst, weighted_norms(2, random_padic_function(F, 2, ctx.rng), sc, WeightSpec::for_field(F), quad).ratio);
  }
  std::ostringstream os;
  os << "max ratio " << worst << " vs " << bound;
  ctx.check("Q_5 ratio within theorem bound", worst <= bound + 1e-9, os.str());

  const FieldSpec R = FieldSpec::real();
  const double rbound = theorem1_constant(R, 2);
  double rworst = 0;
  for (int trial = 0; trial < 5; ++trial) {
    rworst = std::max(rworst, weighted_norms(2, random_real_function(16, ctx.rng), Scale::archimedean(4),
                                             WeightSpec::for_field(R), quad)
                                  .ratio);
  }
  std::ostringstream ros;
  ros << "max ratio " << rworst << " vs " << rbound;
  ctx.check("R ratio within theorem bound", rworst <= rbound * 1.02, ros.str());

  std::vector<Complex> single(16, 0.0);
  single[5] = 1.0;
  single[6] = Complex(0.25, -2.0);
  const auto one = weighted_norms(2, TestFunction::real(16, single), Scale::archimedean(4), WeightSpec::for_field(R), quad);
  ctx.check("single-cell f has ratio 1", std::abs(one.ratio - 1) < 1e-9);
}

// ---------------------------------------------------------------------------

void verify_bounds(Context& ctx) {
  bool power = true, wr = true, lip = true, refined = true, ordering = true;
  for (unsigned n = 2; n <= 12; ++n) {
    for (std::uint64_t p : {2, 3, 5}) power = power && theorem1_power(FieldSpec::padic(p), n) == pow(BigInt(n), n);
    const BigInt r = refined_diagonal_bound(n);
    refined = refined && r <= pow(BigInt(n), n) && (n <= 3 ? r == factorial(n) : r >= factorial(n));
    ordering = ordering &&
               std::pow(to_double(factorial(n)), 1.0 / (2 * n)) <= theorem1_constant(FieldSpec::padic(5), n) + 1e-12;
  }
  for (unsigned n = 2; n <= 6; ++n) {
    BigInt prod = 1;
    for (unsigned k = 1; k <= n; ++k) prod *= factorial(k);
    const auto w = wronskian(Curve::moment(n));
    wr = wr && w.degree() == 0 && abs(w.coefficient(0)) == Rational(prod);
  }
  for (unsigned n = 2; n <= 8; ++n) {
    const auto l = lipschitz_norm(Curve::moment(n));
    lip = lip && l.exact && l.value == n;
  }
  ctx.check("theorem1 constant^(2n) = n^n over Q_p", power);
  ctx.check("moment Wronskian = prod k!", wr);
  ctx.check("Lipschitz norm of the moment curve is n", lip);
  ctx.check("refined diagonal bound between n! and n^n", refined);
  ctx.check("(n!)^(1/2n) <= theorem1 constant over Q_p", ordering);
}

}  // namespace

VerifySummary run_verify(const std::string& suite, std::uint64_t seed, unsigned threads) {
  const std::vector<std::pair<std::string, std::function<void(Context&)>>> all{
      {"local_field", verify_local_field}, {"symmetric", verify_symmetric}, {"syzygy", verify_syzygy},
      {"vinogradov", verify_vinogradov},   {"extension", verify_extension}, {"bounds", verify_bounds}};
  const bool known = suite == "all" || std::any_of(all.begin(), all.end(), [&](const auto& e) { return e.first == suite; });
  if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
  VerifySummary summary;
  summary.suite = suite;
  summary.seed = seed;
  for (const auto& [name, run] : all) {
    if (suite != "all" && suite != name) continue;
    Context ctx{std::mt19937_64(seed), threads, &summary.checks, name};
    run(ctx);
  }
  return summary;
}

}  // namespace moment

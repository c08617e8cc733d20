#include "moment/extension.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "moment/parallel.hpp"

namespace moment {

TestFunction TestFunction::padic(const FieldSpec& field, unsigned precision, std::vector<Complex> values) {
  if (field.kind != FieldKind::PAdic) throw std::invalid_argument("padic test function needs Q_p");
  if (values.size() != ipow(field.prime, precision)) {
    throw std::invalid_argument("expected p^precision values");
  }
  TestFunction f;
  f.kind = TestKind::LocallyConstant;
  f.field = field;
  f.precision = precision;
  f.values = std::move(values);
  return f;
}

TestFunction TestFunction::real(std::uint64_t pieces, std::vector<Complex> values) {
  if (pieces == 0 || values.size() != pieces) throw std::invalid_argument("expected one value per piece");
  TestFunction f;
  f.kind = TestKind::LocallyConstant;
  f.field = FieldSpec::real();
  f.pieces = pieces;
  f.values = std::move(values);
  return f;
}

TestFunction TestFunction::comb(std::uint64_t N) {
  if (N == 0) throw std::invalid_argument("comb needs N >= 1");
  TestFunction f;
  f.kind = TestKind::AtomicComb;
  f.field = FieldSpec::real();
  f.pieces = N;
  f.values.assign(N, Complex(1.0, 0.0));
  return f;
}

bool TestFunction::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Complex& v) { return v == Complex(0.0, 0.0); });
}

std::vector<Complex> random_values(std::size_t count, std::mt19937_64& rng) {
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  std::vector<Complex> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double re = uniform();
    const double im = uniform();
    out.emplace_back(re, im);
  }
  return out;
}

TestFunction random_padic_function(const FieldSpec& field, unsigned precision, std::mt19937_64& rng) {
  return TestFunction::padic(field, precision, random_values(ipow(field.prime, precision), rng));
}

TestFunction random_real_function(std::uint64_t pieces, std::mt19937_64& rng) {
  return TestFunction::real(pieces, random_values(pieces, rng));
}

WeightSpec WeightSpec::for_field(const FieldSpec& field, std::vector<Rational> center) {
  return {std::move(center), field.kind == FieldKind::PAdic ? WeightProfile::IndicatorBall : WeightProfile::ShiftedFejer};
}

double fejer_weight(double u) {
  const double v = u - 0.5;
  const double quarter = std::numbers::pi * std::numbers::pi / 4.0;
  if (v == 0.0) return quarter;
  const double s = std::sin(std::numbers::pi * v) / (std::numbers::pi * v);
  return quarter * s * s;
}

namespace {

// Depth k of a rational with denominator p^k; throws for other denominators.
unsigned padic_depth(const Rational& x, std::uint64_t p) {
  BigInt den = denominator(x);
  unsigned k = 0;
  while (den % p == 0) {
    den /= p;
    ++k;
  }
  if (den != 1) throw std::invalid_argument("coordinate denominator is not a power of " + std::to_string(p));
  return k;
}

std::vector<Rational> center_or_origin(const WeightSpec& weight, unsigned n) {
  if (weight.center.empty()) return std::vector<Rational>(n, Rational(0));
  if (weight.center.size() != n) throw std::invalid_argument("center dimension differs from n");
  return weight.center;
}

// Atoms of the real measures: position q/Q, mass.
struct Atoms {
  std::uint64_t Q = 1;
  std::vector<Complex> mass;  // mass[q] at q/Q
};

Atoms atoms_of(const TestFunction& f) {
  if (f.field.kind != FieldKind::Real) throw std::invalid_argument("expected a real test function");
  Atoms a;
  a.Q = f.pieces;
  a.mass = f.values;
  if (f.kind == TestKind::LocallyConstant) {
    for (auto& m : a.mass) m /= static_cast<double>(f.pieces);
  }
  return a;
}

std::uint64_t real_cell_of(std::uint64_t q, std::uint64_t Q, std::uint64_t R) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(q) * R / Q);
}

Complex extension_padic(const TestFunction& f, const std::optional<Cell>& cell, std::span<const Rational> x) {
  const std::uint64_t p = f.field.prime;
  unsigned P = f.precision;
  for (const auto& xk : x) P = std::max(P, padic_depth(xk, p));
  std::uint64_t cells = 1;
  std::uint64_t index = 0;
  if (cell) {
    if (!(cell->field == f.field)) throw std::invalid_argument("cell field differs from test function field");
    P = std::max(P, cell->scale.exponent);
    cells = cell->scale.cells_per_axis;
    index = cell->index;
  }
  const std::uint64_t total = ipow(p, P);
  if (total > 50'000'000) throw BudgetExceeded("pointwise evaluation needs too many representatives");
  const std::uint64_t fmod = ipow(p, f.precision);
  const double measure = 1.0 / static_cast<double>(total);
  Complex acc = 0;
  for (std::uint64_t a = index; a < total; a += cells) {
    const Complex v = f.values[a % fmod];
    if (v == Complex(0.0, 0.0)) continue;
    Rational arg = 0;
    Rational ak = 1;
    for (const auto& xk : x) {
      ak *= a;
      arg += ak * xk;
    }
    acc += v * measure * character(f.field, arg);
  }
  return acc;
}

Complex extension_real(const TestFunction& f, const std::optional<Cell>& cell, std::span<const Rational> x) {
  const Atoms atoms = atoms_of(f);
  Complex acc = 0;
  for (std::uint64_t q = 0; q < atoms.Q; ++q) {
    if (cell) {
      if (cell->field.kind != FieldKind::Real) throw std::invalid_argument("cell field differs from test function field");
      if (real_cell_of(q, atoms.Q, cell->scale.cells_per_axis) != cell->index) continue;
    }
    const Rational xi(q, atoms.Q);
    Rational arg = 0;
    Rational xik = 1;
    for (const auto& xk : x) {
      xik *= xi;
      arg += xik * xk;
    }
    acc += atoms.mass[q] * character(FieldSpec::real(), arg);
  }
  return acc;
}

}  // namespace

Complex extension_op(const TestFunction& f, const std::optional<Cell>& cell, std::span<const Rational> x) {
  if (x.empty()) throw std::invalid_argument("evaluation point is empty");
  if (f.field.kind == FieldKind::PAdic) return extension_padic(f, cell, x);
  return extension_real(f, cell, x);
}

double square_function(const TestFunction& f, const Scale& scale, std::span<const Rational> x) {
  check_scale(f.field, scale);
  double sum = 0;
  for (const auto& cell : partition(f.field, scale)) sum += std::norm(extension_op(f, cell, x));
  return std::sqrt(sum);
}

namespace {

NormReport finish(double lhs_power, double rhs_power, unsigned n, std::uint64_t points) {
  NormReport r;
  r.lhs_power = lhs_power;
  r.rhs_power = rhs_power;
  r.lhs = std::pow(lhs_power, 1.0 / (2 * n));
  r.rhs = std::pow(rhs_power, 1.0 / (2 * n));
  if (r.rhs == 0) {
    if (r.lhs != 0) throw std::logic_error("square function vanished where the extension did not");
    throw std::invalid_argument("zero function");
  }
  r.ratio = r.lhs / r.rhs;
  r.points = points;
  return r;
}

double power_n(double x, unsigned n) {
  double r = 1;
  for (unsigned i = 0; i < n; ++i) r *= x;
  return r;
}

// Q_p: x ranges over c + u/M, u in [0, M)^n, M = p^(ns); the box mod O^n.
NormReport norms_padic(unsigned n, const TestFunction& f, const Scale& scale, const WeightSpec& weight,
                       const QuadratureSpec& quad) {
  if (weight.profile != WeightProfile::IndicatorBall) throw std::invalid_argument("Q_p uses the indicator weight");
  const std::uint64_t p = f.field.prime;
  const unsigned s = scale.exponent;
  const auto center = center_or_origin(weight, n);
  unsigned P = std::max(f.precision, n * s);
  for (const auto& ck : center) P = std::max(P, padic_depth(ck, p));

  const std::uint64_t M = ipow(p, n * s);
  const std::uint64_t cells = scale.cells_per_axis;
  const std::uint64_t L = M / cells;
  const auto outer = checked_pow(M, n - 1);
  const auto reps = checked_pow(p, P);
  const double work = outer ? static_cast<double>(*outer) * static_cast<double>(cells * L * L + M * cells) : 1e300;
  if (!reps || *reps > 50'000'000 || work > static_cast<double>(quad.max_points)) {
    throw BudgetExceeded("Q_p norm evaluation exceeds the work budget");
  }

  // F[r] = sum over a = r mod M of f(a) e(gamma(a).c) p^-P
  std::vector<Complex> F(M, 0.0);
  const std::uint64_t fmod = ipow(p, f.precision);
  const double measure = 1.0 / static_cast<double>(*reps);
  const bool centered = std::any_of(center.begin(), center.end(), [](const Rational& c) { return c != 0; });
  for (std::uint64_t a = 0; a < *reps; ++a) {
    Complex v = f.values[a % fmod] * measure;
    if (centered) {
      Rational arg = 0;
      Rational ak = 1;
      for (const auto& ck : center) {
        ak *= a;
        arg += ak * ck;
      }
      v *= character(f.field, arg);
    }
    F[a % M] += v;
  }

  std::vector<Complex> root(M);
  for (std::uint64_t k = 0; k < M; ++k) root[k] = unit_from_phase(Rational(k, M));
  // pw[k][r] = r^k mod M
  std::vector<std::vector<std::uint64_t>> pw(n + 1, std::vector<std::uint64_t>(M, 1 % M));
  for (unsigned k = 1; k <= n; ++k)
    for (std::uint64_t r = 0; r < M; ++r)
      pw[k][r] = static_cast<std::uint64_t>(static_cast<unsigned __int128>(pw[k - 1][r]) * r % M);

  // dft[v L + b] = exp(2 pi i b v / L), shift[u cells + j] = exp(2 pi i j u / M)
  std::vector<Complex> dft(L * L), shift(M * cells);
  for (std::uint64_t v = 0; v < L; ++v)
    for (std::uint64_t b = 0; b < L; ++b) dft[v * L + b] = root[cells * ((b * v) % L)];
  for (std::uint64_t u = 0; u < M; ++u)
    for (std::uint64_t j = 0; j < cells; ++j) shift[u * cells + j] = root[(j * u) % M];

  const std::size_t chunks = static_cast<std::size_t>(*outer);
  std::vector<double> lhs(chunks), rhs(chunks);
  parallel_for_chunks(chunks, quad.threads, [&](std::size_t chunk) {
    // u_2..u_n from the chunk index
    std::vector<std::uint64_t> u(n + 1, 0);
    std::uint64_t rest = chunk;
    for (unsigned k = 2; k <= n; ++k) {
      u[k] = rest % M;
      rest /= M;
    }
    std::vector<Complex> G(M);
    for (std::uint64_t r = 0; r < M; ++r) {
      std::uint64_t idx = 0;
      for (unsigned k = 2; k <= n; ++k) {
        idx = (idx + static_cast<std::uint64_t>(static_cast<unsigned __int128>(pw[k][r]) * u[k] % M)) % M;
      }
      G[r] = F[r] * root[idx];
    }
    // D[j][v] = sum_b G[j + cells b] exp(2 pi i b v / L)
    std::vector<Complex> D(cells * L, 0.0);
    std::vector<double> S2(L, 0.0);
    for (std::uint64_t j = 0; j < cells; ++j) {
      for (std::uint64_t v = 0; v < L; ++v) {
        Complex acc = 0;
        const Complex* tw = &dft[v * L];
        for (std::uint64_t b = 0; b < L; ++b) acc += G[j + cells * b] * tw[b];
        D[j * L + v] = acc;
        S2[v] += std::norm(acc);
      }
    }
    double l = 0, h = 0;
    for (std::uint64_t u1 = 0; u1 < M; ++u1) {
      const std::uint64_t v = u1 % L;
      Complex E = 0;
      const Complex* tw = &shift[u1 * cells];
      for (std::uint64_t j = 0; j < cells; ++j) E += tw[j] * D[j * L + v];
      l += power_n(std::norm(E), n);
      h += power_n(S2[v], n);
    }
    lhs[chunk] = l;
    rhs[chunk] = h;
  });
  return finish(pairwise_sum(lhs), pairwise_sum(rhs), n, *outer * M);
}

// Sum over m of sinc^2(v + m a) for a positive integer a.
double periodized_sinc2(double v, double a) {
  const double den = std::sin(std::numbers::pi * v / a);
  if (std::abs(den) < 1e-12) return 1.0;
  const double num = std::sin(std::numbers::pi * v);
  return num * num / (a * a * den * den);
}

NormReport norms_real(unsigned n, const TestFunction& f, const Scale& scale, const WeightSpec& weight,
                      const QuadratureSpec& quad) {
  if (weight.profile != WeightProfile::ShiftedFejer) throw std::invalid_argument("R uses the shifted Fejer weight");
  const Atoms atoms = atoms_of(f);
  const std::uint64_t Q = atoms.Q;
  const std::uint64_t R = scale.cells_per_axis;
  const auto center = center_or_origin(weight, n);
  if (quad.grid_step <= 0 || quad.grid_step > Rational(1, 4) || numerator(quad.grid_step) != 1) {
    throw std::invalid_argument("grid step must be 1/H with H >= 4");
  }
  const std::uint64_t H = denominator(quad.grid_step).convert_to<std::uint64_t>();
  if (H <= n) throw std::invalid_argument("grid step must be below 1/n to avoid aliasing");

  // One common period T = lcm(Q, R)^n; the weight box has side R^n.
  const std::uint64_t base = std::lcm(Q, R);
  const auto T = checked_pow(base, n);
  const auto box = checked_pow(R, n);
  std::vector<std::uint64_t> axis_len(n + 1);
  double points = 1;
  for (unsigned k = 1; k <= n; ++k) {
    const auto qk = checked_pow(Q, k);
    if (!qk || !T || *qk > UINT64_MAX / (2 * H)) throw BudgetExceeded("real quadrature lattice too large");
    axis_len[k] = *qk * H;
    points *= static_cast<double>(axis_len[k]);
  }
  if (!T || *T > UINT64_MAX / H || points * static_cast<double>(Q) > static_cast<double>(quad.max_points) ||
      static_cast<double>(*T) * H * n > 1e9) {
    throw BudgetExceeded("real quadrature lattice too large");
  }
  const double a = static_cast<double>(*T / *box);
  const double side = static_cast<double>(*box);
  const double h = 1.0 / static_cast<double>(H);

  // folded weights and phases per axis; x_j = (j + 1/2) / H
  std::vector<std::vector<double>> W(n + 1);
  std::vector<std::vector<Complex>> phase(n + 1);
  for (unsigned k = 1; k <= n; ++k) {
    const std::uint64_t A = axis_len[k];
    const double ck = to_double(center[k - 1]);
    W[k].assign(A, 0.0);
    const std::uint64_t span = *T * H;
    for (std::uint64_t j = 0; j < span; ++j) {
      const double x = (static_cast<double>(j) + 0.5) * h;
      const double v = (x - ck) / side - 0.5;
      W[k][j % A] += std::numbers::pi * std::numbers::pi / 4.0 * periodized_sinc2(v, a);
    }
    // e(q^k/Q^k x) = exp(-2 pi i q^k (2j+1) / (2 H Q^k))
    const std::uint64_t D = 2 * A;
    phase[k].assign(Q * A, 0.0);
    for (std::uint64_t q = 0; q < Q; ++q) {
      const auto qk = static_cast<unsigned __int128>(ipow(q, k) % D);
      for (std::uint64_t j = 0; j < A; ++j) {
        const std::uint64_t idx = static_cast<std::uint64_t>(qk * (2 * j + 1) % D);
        phase[k][q * A + j] = unit_from_phase(Rational(D - idx, D));
      }
    }
  }

  // atoms grouped by cell: contiguous runs since q is increasing
  std::vector<std::pair<std::uint64_t, std::uint64_t>> runs;
  for (std::uint64_t q = 0; q < Q;) {
    std::uint64_t e = q;
    while (e < Q && real_cell_of(e, Q, R) == real_cell_of(q, Q, R)) ++e;
    runs.emplace_back(q, e);
    q = e;
  }

  std::uint64_t outer = 1;
  for (unsigned k = 2; k <= n; ++k) outer *= axis_len[k];
  const std::uint64_t block = 64;
  const std::size_t chunks = static_cast<std::size_t>((outer + block - 1) / block);
  std::vector<double> lhs(chunks), rhs(chunks);
  const std::uint64_t A1 = axis_len[1];
  parallel_for_chunks(chunks, quad.threads, [&](std::size_t chunk) {
    std::vector<Complex> b(Q);
    std::vector<std::uint64_t> j(n + 1);
    double l = 0, r = 0;
    for (std::uint64_t o = chunk * block; o < std::min(outer, (chunk + 1) * block); ++o) {
      std::uint64_t rest = o;
      double w_outer = 1;
      for (unsigned k = 2; k <= n; ++k) {
        j[k] = rest % axis_len[k];
        rest /= axis_len[k];
        w_outer *= W[k][j[k]];
      }
      for (std::uint64_t q = 0; q < Q; ++q) {
        Complex v = atoms.mass[q];
        for (unsigned k = 2; k <= n; ++k) v *= phase[k][q * axis_len[k] + j[k]];
        b[q] = v;
      }
      double lo = 0, ro = 0;
      for (std::uint64_t j1 = 0; j1 < A1; ++j1) {
        Complex E = 0;
        double S2 = 0;
        for (const auto& [from, to] : runs) {
          Complex EJ = 0;
          for (std::uint64_t q = from; q < to; ++q) EJ += b[q] * phase[1][q * A1 + j1];
          E += EJ;
          S2 += std::norm(EJ);
        }
        lo += W[1][j1] * power_n(std::norm(E), n);
        ro += W[1][j1] * power_n(S2, n);
      }
      l += w_outer * lo;
      r += w_outer * ro;
    }
    lhs[chunk] = l;
    rhs[chunk] = r;
  });
  const double cell_volume = std::pow(h, static_cast<double>(n));
  return finish(pairwise_sum(lhs) * cell_volume, pairwise_sum(rhs) * cell_volume, n,
                static_cast<std::uint64_t>(points));
}

}  // namespace

NormReport weighted_norms(unsigned n, const TestFunction& f, const Scale& scale, const WeightSpec& weight,
                          const QuadratureSpec& quad) {
  if (n < 2) throw std::invalid_argument("weighted_norms needs n >= 2");
  check_scale(f.field, scale);
  if (f.is_zero()) throw std::invalid_argument("zero function");
  if (f.field.kind == FieldKind::PAdic) return norms_padic(n, f, scale, weight, quad);
  if (f.field.kind == FieldKind::Complex) throw std::invalid_argument("norms over C are not implemented");
  return norms_real(n, f, scale, weight, quad);
}

NormReport comb_ratio(unsigned n, std::uint64_t N, const QuadratureSpec& quad) {
  return weighted_norms(n, TestFunction::comb(N), Scale::archimedean(N), WeightSpec::for_field(FieldSpec::real()),
                        quad);
}

}  // namespace moment

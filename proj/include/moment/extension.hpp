#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "moment/budget.hpp"
#include "moment/local_field.hpp"
#include "moment/rational.hpp"

namespace moment {

using Complex = std::complex<double>;

enum class TestKind { LocallyConstant, AtomicComb };

/// A test function on O, always for the moment curve of the caller's dimension.
///
/// Q_p: values[a] is f on the ball a + p^precision O.
/// R:   values[q] is f on [q/pieces, (q+1)/pieces); it is integrated as the atomic
///      measure sum_q values[q]/pieces at the left endpoints q/pieces.
/// Comb: unit atoms at (i-1)/N for i = 1..N.
struct TestFunction {
  TestKind kind = TestKind::LocallyConstant;
  FieldSpec field;
  unsigned precision = 0;
  std::uint64_t pieces = 0;
  std::vector<Complex> values;

  static TestFunction padic(const FieldSpec& field, unsigned precision, std::vector<Complex> values);
  static TestFunction real(std::uint64_t pieces, std::vector<Complex> values);
  static TestFunction comb(std::uint64_t N);

  bool is_zero() const;
};

/// Complex values with real and imaginary parts uniform in [-1, 1), drawn from mt19937_64
/// as ((x >> 11) * 2^-53) * 2 - 1.
std::vector<Complex> random_values(std::size_t count, std::mt19937_64& rng);

TestFunction random_padic_function(const FieldSpec& field, unsigned precision, std::mt19937_64& rng);
TestFunction random_real_function(std::uint64_t pieces, std::mt19937_64& rng);

enum class WeightProfile { IndicatorBall, ShiftedFejer };

/// W_{c, delta^-n}: the indicator of |x - c| <= p^(ns) over Q_p, the product of
/// w((x_k - c_k) delta^n) over R with w(u) = (pi/2)^2 sinc^2(u - 1/2).
struct WeightSpec {
  std::vector<Rational> center;  // empty means the origin
  WeightProfile profile = WeightProfile::ShiftedFejer;

  static WeightSpec for_field(const FieldSpec& field, std::vector<Rational> center = {});
};

/// (pi/2)^2 sinc^2(u - 1/2), at least 1 on [0, 1].
double fejer_weight(double u);

struct QuadratureSpec {
  Rational grid_step = Rational(1, 4);  // R: midpoint step 1/H with H an integer > n
  unsigned threads = 1;
  std::uint64_t max_points = 400'000'000;  // lattice points times atoms or DFT work
};

/// E_I f(x) with I a cell (or all of O when `cell` is empty), for the moment curve of dimension x.size().
Complex extension_op(const TestFunction& f, const std::optional<Cell>& cell, std::span<const Rational> x);

/// (sum_J |E_J f(x)|^2)^(1/2) over the cells of P_delta.
double square_function(const TestFunction& f, const Scale& scale, std::span<const Rational> x);

struct NormReport {
  double lhs = 0;        // ||E_O f||_{L^2n(W)}
  double rhs = 0;        // ||S_delta f||_{L^2n(W)}
  double ratio = 0;      // lhs / rhs
  double lhs_power = 0;  // lhs^(2n)
  double rhs_power = 0;
  std::uint64_t points = 0;  // evaluation points after periodic folding
};

/// Weighted L^2n norms of E_O f and S_delta f for the moment curve of dimension n.
///
/// Q_p: exact finite sums over the p^(n^2 s) classes of the box mod O^n.
/// R: midpoint rule on one period of the integrand against the periodized weight;
///    with step 1/H, H > n, the rule has no aliasing and is exact up to rounding.
NormReport weighted_norms(unsigned n, const TestFunction& f, const Scale& scale, const WeightSpec& weight,
                          const QuadratureSpec& quad = {});

/// weighted_norms for the comb of N unit atoms at scale 1/N over R.
NormReport comb_ratio(unsigned n, std::uint64_t N, const QuadratureSpec& quad = {});

}  // namespace moment

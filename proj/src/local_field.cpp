#include "moment/local_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace moment {

FieldSpec FieldSpec::padic(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("Q_p requires a prime p, got " + std::to_string(p));
  return {FieldKind::PAdic, p, 1};
}

std::string FieldSpec::name() const {
  switch (kind) {
    case FieldKind::Real: return "R";
    case FieldKind::Complex: return "C";
    case FieldKind::PAdic: return "Q_" + std::to_string(prime);
  }
  return "?";
}

Scale Scale::padic(const FieldSpec& field, unsigned s) {
  if (field.kind != FieldKind::PAdic) throw std::invalid_argument("p-adic scale requested for " + field.name());
  Scale sc;
  sc.exponent = s;
  sc.cells_per_axis = ipow(field.prime, s);
  sc.delta = Rational(1, sc.cells_per_axis);
  return sc;
}

Scale Scale::archimedean(std::uint64_t R) {
  if (R == 0) throw std::invalid_argument("archimedean scale needs R >= 1");
  Scale sc;
  sc.exponent = 0;
  sc.cells_per_axis = R;
  sc.delta = Rational(1, R);
  return sc;
}

void check_scale(const FieldSpec& field, const Scale& scale) {
  if (scale.cells_per_axis == 0 || scale.delta != Rational(1, scale.cells_per_axis)) {
    throw std::invalid_argument("inconsistent scale");
  }
  if (field.kind == FieldKind::PAdic) {
    auto expected = checked_pow(field.prime, scale.exponent);
    if (!expected || *expected != scale.cells_per_axis) {
      throw std::invalid_argument("scale does not match " + field.name());
    }
  } else if (scale.exponent != 0) {
    throw std::invalid_argument("p-adic scale used with " + field.name());
  }
}

CellTuple::CellTuple(std::vector<Cell> cells) : cells_(std::move(cells)) {
  if (cells_.size() < 2) throw std::invalid_argument("cell tuples need length n >= 2");
  for (const auto& c : cells_) {
    if (!(c.field == cells_.front().field) || !(c.scale == cells_.front().scale)) {
      throw std::invalid_argument("cells of a tuple must share field and scale");
    }
    if (c.index >= c.scale.cells_per_axis || c.index_imag >= c.scale.cells_per_axis) {
      throw std::invalid_argument("cell index out of range");
    }
  }
}

CellTuple CellTuple::of(const FieldSpec& field, const Scale& scale, std::span<const std::uint64_t> indices) {
  check_scale(field, scale);
  std::vector<Cell> cells;
  cells.reserve(indices.size());
  for (auto i : indices) cells.push_back(Cell{field, scale, i, 0});
  return CellTuple(std::move(cells));
}

std::vector<std::uint64_t> CellTuple::indices() const {
  std::vector<std::uint64_t> out;
  out.reserve(cells_.size());
  for (const auto& c : cells_) out.push_back(c.index);
  return out;
}

std::vector<Cell> partition(const FieldSpec& field, const Scale& scale) {
  check_scale(field, scale);
  std::vector<Cell> cells;
  const auto R = scale.cells_per_axis;
  if (field.kind == FieldKind::Complex) {
    cells.reserve(R * R);
    for (std::uint64_t j = 0; j < R; ++j)
      for (std::uint64_t k = 0; k < R; ++k) cells.push_back(Cell{field, scale, j, k});
  } else {
    cells.reserve(R);
    for (std::uint64_t j = 0; j < R; ++j) cells.push_back(Cell{field, scale, j, 0});
  }
  return cells;
}

namespace {

Rational frac(const Rational& x) {
  BigInt num = numerator(x);
  const BigInt& den = denominator(x);
  BigInt r = num % den;
  if (r < 0) r += den;
  return Rational(r, den);
}

}  // namespace

Rational character_phase(const FieldSpec& field, const Rational& x) {
  switch (field.kind) {
    case FieldKind::PAdic: {
      // x = a / p^k; {x}_p = (a mod p^k) / p^k
      BigInt den = denominator(x);
      while (den % field.prime == 0) den /= field.prime;
      if (den != 1) throw std::invalid_argument("denominator is not a power of " + std::to_string(field.prime));
      return frac(x);
    }
    case FieldKind::Real:
    case FieldKind::Complex: return frac(-x);
  }
  return 0;
}

Rational character_phase(const FieldSpec& field, const GaussianRational& z) {
  if (field.kind != FieldKind::Complex) throw std::invalid_argument("Gaussian input requires the complex field");
  return frac(-z.re);
}

std::complex<double> unit_from_phase(double phase) {
  const double angle = 2.0 * std::numbers::pi * phase;
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> unit_from_phase(const Rational& phase) { return unit_from_phase(to_double(frac(phase))); }

std::complex<double> character(const FieldSpec& field, const Rational& x) {
  return unit_from_phase(character_phase(field, x));
}

std::complex<double> character(const FieldSpec& field, const GaussianRational& z) {
  return unit_from_phase(character_phase(field, z));
}

Rational abs_value(const FieldSpec& field, const Rational& x) {
  if (field.kind != FieldKind::PAdic) return abs(x);
  if (x == 0) return 0;
  const unsigned vn = valuation(numerator(x), field.prime);
  const unsigned vd = valuation(denominator(x), field.prime);
  if (vn >= vd) return Rational(1, pow(BigInt(field.prime), vn - vd));
  return Rational(pow(BigInt(field.prime), vd - vn));
}

Rational abs_value(const FieldSpec& field, const GaussianRational& z) {
  if (field.kind != FieldKind::Complex) throw std::invalid_argument("Gaussian input requires the complex field");
  return std::max(abs(z.re), abs(z.im));
}

Rational abs_value(const FieldSpec& field, std::span<const Rational> x) {
  Rational m = 0;
  for (const auto& xi : x) m = std::max(m, abs_value(field, xi));
  return m;
}

std::vector<PAdicApprox> cell_representatives(const Cell& cell, unsigned target_precision) {
  if (cell.field.kind != FieldKind::PAdic) throw std::invalid_argument("representatives exist for Q_p cells only");
  const unsigned s = cell.scale.exponent;
  if (target_precision < s) throw std::invalid_argument("target precision below the cell scale");
  if (target_precision == 0) return {PAdicApprox{0, 0}};
  const std::uint64_t step = cell.scale.cells_per_axis;
  const std::uint64_t modulus = ipow(cell.field.prime, target_precision);
  std::vector<PAdicApprox> reps;
  reps.reserve(modulus / step);
  for (std::uint64_t r = cell.index; r < modulus; r += step) reps.push_back(PAdicApprox{r, target_precision});
  return reps;
}

}  // namespace moment

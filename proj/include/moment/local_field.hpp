#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "moment/rational.hpp"

namespace moment {

enum class FieldKind { Real, Complex, PAdic };

/// One of the local fields R, C or Q_p.
struct FieldSpec {
  FieldKind kind = FieldKind::Real;
  std::uint64_t prime = 0;  // PAdic only
  int eta = 1;              // 1 for R, 2 for C; unused for Q_p

  static FieldSpec real() { return {FieldKind::Real, 0, 1}; }
  static FieldSpec complex() { return {FieldKind::Complex, 0, 2}; }
  /// Throws std::invalid_argument unless p is prime.
  static FieldSpec padic(std::uint64_t p);

  bool archimedean() const { return kind != FieldKind::PAdic; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// A scale delta: p^-s over Q_p, 1/R over R and C.
struct Scale {
  unsigned exponent = 0;           // s for Q_p; 0 for archimedean scales
  std::uint64_t cells_per_axis = 1;  // p^s or R
  Rational delta = 1;

  static Scale padic(const FieldSpec& field, unsigned s);
  static Scale archimedean(std::uint64_t R);

  friend bool operator==(const Scale&, const Scale&) = default;
};

/// Throws std::invalid_argument if the scale was not built for this field.
void check_scale(const FieldSpec& field, const Scale& scale);

/// A ball i + p^s O of Q_p, an interval [j delta, (j+1) delta) of R, or a square of C.
struct Cell {
  FieldSpec field;
  Scale scale;
  std::uint64_t index = 0;
  std::uint64_t index_imag = 0;  // C only

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// An n-tuple of cells at a common field and scale.
class CellTuple {
 public:
  CellTuple() = default;
  explicit CellTuple(std::vector<Cell> cells);

  /// Tuple of cells with the given indices.
  static CellTuple of(const FieldSpec& field, const Scale& scale, std::span<const std::uint64_t> indices);

  std::size_t size() const { return cells_.size(); }
  const Cell& operator[](std::size_t i) const { return cells_[i]; }
  const std::vector<Cell>& cells() const { return cells_; }
  const FieldSpec& field() const { return cells_.front().field; }
  const Scale& scale() const { return cells_.front().scale; }
  std::vector<std::uint64_t> indices() const;

  friend bool operator==(const CellTuple&, const CellTuple&) = default;

 private:
  std::vector<Cell> cells_;
};

/// The class residue + p^precision O.
struct PAdicApprox {
  std::uint64_t residue = 0;
  unsigned precision = 1;

  friend bool operator==(const PAdicApprox&, const PAdicApprox&) = default;
};

/// Gaussian rational re + i im, for the C-side absolute value.
struct GaussianRational {
  Rational re;
  Rational im;
};

std::vector<Cell> partition(const FieldSpec& field, const Scale& scale);

/// Phase phi in [0, 1) with character(field, x) = exp(2 pi i phi), computed exactly.
///
/// Q_p: phi is the p-adic fractional part {x}_p (x must have p-power denominator).
/// R:   phi = -x mod 1, i.e. e(t) = exp(-2 pi i t).
/// C:   applied to the real part, e(z) = exp(-2 pi i Re z).
Rational character_phase(const FieldSpec& field, const Rational& x);
Rational character_phase(const FieldSpec& field, const GaussianRational& z);

std::complex<double> unit_from_phase(const Rational& phase);
std::complex<double> unit_from_phase(double phase);

std::complex<double> character(const FieldSpec& field, const Rational& x);
std::complex<double> character(const FieldSpec& field, const GaussianRational& z);

/// |x| for the field; p^-v_p(x) over Q_p.
Rational abs_value(const FieldSpec& field, const Rational& x);
/// max(|re|, |im|) over C.
Rational abs_value(const FieldSpec& field, const GaussianRational& z);
/// max of coordinate absolute values.
Rational abs_value(const FieldSpec& field, std::span<const Rational> x);

/// The p^(m-s) residues mod p^m lying in the cell, ascending.
std::vector<PAdicApprox> cell_representatives(const Cell& cell, unsigned target_precision);

/// Index of the cell of P_delta containing the residue a mod p^m (m >= s).
inline std::uint64_t padic_cell_of(std::uint64_t residue, std::uint64_t cells) { return residue % cells; }

}  // namespace moment

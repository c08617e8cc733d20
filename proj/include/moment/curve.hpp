#pragma once

#include <string>
#include <vector>

#include "moment/polynomial.hpp"
#include "moment/rational.hpp"

namespace moment {

/// A polynomial curve gamma = (gamma_1, ..., gamma_n) with rational coefficients.
class Curve {
 public:
  Curve(std::string name, std::vector<RationalPolynomial> coords);

  /// gamma(T) = (T, T^2, ..., T^n).
  static Curve moment(unsigned n);

  const std::string& name() const { return name_; }
  unsigned dimension() const { return static_cast<unsigned>(coords_.size()); }
  const std::vector<RationalPolynomial>& coords() const { return coords_; }
  const RationalPolynomial& operator[](std::size_t i) const { return coords_[i]; }

  /// True when the coordinates are exactly T, T^2, ..., T^n.
  bool is_moment() const;

  std::vector<Rational> operator()(const Rational& t) const;
  std::vector<double> operator()(double t) const;

  /// Total number of monomials with nonzero coefficient across all coordinates.
  std::size_t monomial_count() const;

  /// Each coordinate rescaled by a positive integer so every coefficient is an integer.
  /// Equal coordinate sums are preserved, which is all the counting code needs.
  Curve integer_scaled() const;

 private:
  std::string name_;
  std::vector<RationalPolynomial> coords_;
};

}  // namespace moment

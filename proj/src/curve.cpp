#include "moment/curve.hpp"

#include <stdexcept>

namespace moment {

Curve::Curve(std::string name, std::vector<RationalPolynomial> coords)
    : name_(std::move(name)), coords_(std::move(coords)) {
  if (coords_.size() < 2) throw std::invalid_argument("curves need n >= 2 coordinates");
}

Curve Curve::moment(unsigned n) {
  std::vector<RationalPolynomial> coords;
  coords.reserve(n);
  for (unsigned k = 1; k <= n; ++k) coords.push_back(RationalPolynomial::monomial(k));
  return Curve("moment", std::move(coords));
}

bool Curve::is_moment() const {
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (!(coords_[k] == RationalPolynomial::monomial(static_cast<unsigned>(k + 1)))) return false;
  }
  return true;
}

std::vector<Rational> Curve::operator()(const Rational& t) const {
  std::vector<Rational> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c(t));
  return out;
}

std::vector<double> Curve::operator()(double t) const {
  std::vector<double> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) {
    double acc = 0;
    const auto& cs = c.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * t + to_double(*it);
    out.push_back(acc);
  }
  return out;
}

std::size_t Curve::monomial_count() const {
  std::size_t m = 0;
  for (const auto& c : coords_) m += c.monomial_count();
  return m;
}

Curve Curve::integer_scaled() const {
  std::vector<RationalPolynomial> scaled;
  scaled.reserve(coords_.size());
  for (const auto& c : coords_) {
    BigInt lcd = 1;
    for (const auto& q : c.coefficients()) {
      lcd = boost::multiprecision::lcm(lcd, denominator(q));
    }
    scaled.push_back(c * Rational(lcd));
  }
  return Curve(name_, std::move(scaled));
}

}  // namespace moment

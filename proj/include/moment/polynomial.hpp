#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "moment/rational.hpp"

namespace moment {

/// Dense univariate polynomial, coefficients stored in ascending degree.
///
/// The zero polynomial has no coefficients and degree -1. Division routines
/// require Scalar to be a field.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }

  static Polynomial monomial(unsigned degree, const Scalar& c = Scalar(1)) {
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  Scalar coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
  Scalar leading() const { return is_zero() ? Scalar(0) : coeffs_.back(); }

  /// Number of nonzero coefficients.
  std::size_t monomial_count() const {
    std::size_t m = 0;
    for (const auto& c : coeffs_) m += (c != Scalar(0));
    return m;
  }

  template <typename X>
  X operator()(const X& x) const {
    X acc = X(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Scalar> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Scalar(k);
    return Polynomial(std::move(d));
  }

  Polynomial derivative(unsigned order) const {
    Polynomial p = *this;
    for (unsigned i = 0; i < order; ++i) p = p.derivative();
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Scalar& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; returns {quotient, remainder}.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial rem = a;
    if (a.degree() < b.degree()) return {Polynomial{}, rem};
    std::vector<Scalar> quot(a.degree() - b.degree() + 1, Scalar(0));
    const Scalar lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      const int shift = rem.degree() - b.degree();
      const Scalar c = rem.leading() / lead;
      quot[shift] = c;
      for (int k = 0; k <= b.degree(); ++k) rem.coeffs_[k + shift] -= c * b.coeffs_[k];
      rem.coeffs_.pop_back();
      rem.trim();
    }
    return {Polynomial(std::move(quot)), rem};
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    return *this * (Scalar(1) / leading());
  }

  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
      const Scalar& c = p.coeffs_[k];
      if (c == Scalar(0)) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      if (k >= 1) os << "*X";
      if (k >= 2) os << "^" << k;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;

/// Sturm sequence p, p', -rem(p, p'), ... (exact).
inline std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  RationalPolynomial d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  for (;;) {
    auto r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

inline int sign_changes(const std::vector<RationalPolynomial>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    const Rational v = q(x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Square-free part p / gcd(p, p'), monic.
inline RationalPolynomial square_free_part(const RationalPolynomial& p) {
  if (p.degree() <= 0) return p;
  RationalPolynomial g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

/// Number of distinct real roots of p in the closed interval [lo, hi].
/// Throws for the zero polynomial (every point is a root).
inline int count_distinct_roots(const RationalPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has infinitely many roots");
  if (lo > hi) return 0;
  const RationalPolynomial sf = square_free_part(p);
  if (sf.degree() <= 0) return 0;
  const auto seq = sturm_sequence(sf);
  // Sturm counts roots in (lo, hi]; add lo separately.
  int n = sign_changes(seq, lo) - sign_changes(seq, hi);
  if (sf(lo) == 0) ++n;
  return n;
}

/// Disjoint closed intervals [a, b] each containing exactly one distinct real root of p
/// in [lo, hi], with b - a <= width. Degenerate intervals (a == b) mark exact roots.
inline std::vector<std::pair<Rational, Rational>> isolate_roots(const RationalPolynomial& p, const Rational& lo,
                                                               const Rational& hi, const Rational& width) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.is_zero()) throw std::domain_error("zero polynomial has infinitely many roots");
  const RationalPolynomial sf = square_free_part(p);
  if (sf.degree() <= 0) return out;
  const auto seq = sturm_sequence(sf);
  auto in_half_open = [&](const Rational& a, const Rational& b) {
    return sign_changes(seq, a) - sign_changes(seq, b);
  };
  if (sf(lo) == 0) out.emplace_back(lo, lo);
  // stack of (a, b] intervals with positive root count
  std::vector<std::pair<Rational, Rational>> work{{lo, hi}};
  std::vector<std::pair<Rational, Rational>> found;
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    const int k = in_half_open(a, b);
    if (k == 0) continue;
    if (k == 1 && b - a <= width) {
      if (sf(b) == 0) {
        found.emplace_back(b, b);
      } else {
        found.emplace_back(a, b);
      }
      continue;
    }
    const Rational mid = (a + b) / 2;
    if (sf(mid) == 0 && k == 1) {
      found.emplace_back(mid, mid);
      continue;
    }
    work.emplace_back(mid, b);
    work.emplace_back(a, mid);
  }
  std::sort(found.begin(), found.end());
  out.insert(out.end(), found.begin(), found.end());
  return out;
}

}  // namespace moment

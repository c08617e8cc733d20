#include "moment/rational.hpp"

#include <cctype>

namespace moment {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("malformed rational: '" + text + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed rational: '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
      }
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rational(num, den);
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent) b *= b;
  }
  return result;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

std::uint64_t ipow(std::uint64_t base, unsigned exponent) {
  auto r = checked_pow(base, exponent);
  if (!r) throw std::overflow_error("integer power exceeds 64 bits");
  return *r;
}

unsigned valuation(BigInt z, std::uint64_t p) {
  if (z == 0) throw std::domain_error("valuation of zero");
  unsigned v = 0;
  while (z % p == 0) {
    z /= p;
    ++v;
  }
  return v;
}

std::uint64_t mod(const BigInt& z, std::uint64_t m) {
  BigInt r = z % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m) {
  // extended Euclid on signed 128-bit to avoid overflow for m < 2^64
  __int128 old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

// Simplest rational in [lo, hi] with 0 <= lo <= hi, via continued fractions.
Rational simplest_nonnegative(const Rational& lo, const Rational& hi) {
  BigInt fl = floor_div(numerator(lo), denominator(lo));
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  // both lie in (fl, fl + 1)
  Rational a = lo - fl;
  Rational b = hi - fl;
  // 1/b <= 1/x <= 1/a
  return Rational(fl) + 1 / simplest_nonnegative(1 / b, 1 / a);
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("empty interval");
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_nonnegative(-hi, -lo);
  return simplest_nonnegative(lo, hi);
}

}  // namespace moment

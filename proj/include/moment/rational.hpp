#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace moment {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& z) { return z.convert_to<double>(); }

inline std::string to_string(const BigInt& z) { return z.str(); }
std::string to_string(const Rational& q);

/// Parses "a", "-a" or "a/b".
Rational parse_rational(const std::string& text);

Rational pow(const Rational& base, unsigned exponent);
BigInt pow(const BigInt& base, unsigned exponent);

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Integer power with overflow detection.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exponent);

/// Integer power; throws std::overflow_error past 2^64.
std::uint64_t ipow(std::uint64_t base, unsigned exponent);

/// p-adic valuation of a nonzero integer.
unsigned valuation(BigInt z, std::uint64_t p);

/// Least nonnegative residue of z modulo m.
std::uint64_t mod(const BigInt& z, std::uint64_t m);

/// Modular inverse of a modulo m, or nullopt if gcd(a, m) != 1.
std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m);

bool is_prime(std::uint64_t n);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace moment

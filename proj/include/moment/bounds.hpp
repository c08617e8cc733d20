#pragma once

#include <map>
#include <string>

#include "moment/curve.hpp"
#include "moment/local_field.hpp"
#include "moment/polynomial.hpp"
#include "moment/rational.hpp"

namespace moment {

/// One tabulated constant.
struct BoundReport {
  std::string name;
  std::map<std::string, std::string> parameters;
  double value = 0;
  std::string exact;  // exact decimal or rational rendering, empty when only `value` is known
  std::string formula;
};

/// C_{K,n}: 1 over Q_p; 7^n (n <= 6) or 5^n (n >= 7) over R; 7^(2n) or 5^(2n) over C.
BigInt field_constant(const FieldSpec& field, unsigned n);

/// C_{K,n}^(1/2n) n^(1/2).
double theorem1_constant(const FieldSpec& field, unsigned n);
/// theorem1_constant^(2n) = C_{K,n} n^n, exactly.
BigInt theorem1_power(const FieldSpec& field, unsigned n);

struct LipschitzNorm {
  Rational value;      // exact sup when `exact`, otherwise a certified upper bound
  bool exact = false;
};

/// max_i sup |gamma_i'| over [0,1] (R), or a coefficient upper bound over the unit square (C).
LipschitzNorm lipschitz_norm(const Curve& curve, const FieldSpec& field = FieldSpec::real());

/// det(gamma'(t), gamma''(t), ..., gamma^(n)(t)) as an exact polynomial.
RationalPolynomial wronskian(const Curve& curve);

/// True iff the Wronskian has no zero on O. Over R this is decided by Sturm's theorem on
/// [0,1]. Over C it is certified from a lower root bound and throws std::domain_error when
/// that bound cannot decide.
bool nondegenerate(const Curve& curve, const FieldSpec& field = FieldSpec::real());

/// (2 ceil(l) + 1)^(eta/2) (prod deg gamma_i)^(1/2n). Throws for degenerate curves.
double bezout_constant(const Curve& curve, const FieldSpec& field = FieldSpec::real());
/// (2 ceil(l) + 1)^(n eta) prod deg gamma_i, the bound on S_gamma behind bezout_constant.
BigInt bezout_syzygy_bound(const Curve& curve, const FieldSpec& field = FieldSpec::real());

/// (2 ceil(l) + 1)^(1/2) (2^(M(M-1)/2) (n+1)^M)^(1/2n), M the monomial count.
double fewnomial_constant(const Curve& curve);

/// max_{m=1..n} n(n-1)...(n-m+1) m^(n-m).
BigInt max_falling_power_bound(unsigned n);
/// n! for n in {2, 3}, max_falling_power_bound(n) from n = 4 on.
BigInt refined_diagonal_bound(unsigned n);
/// Stirling number of the second kind S(n, m).
BigInt stirling2(unsigned n, unsigned m);
/// sum_m S(n, m) n(n-1)...(n-m+1).
BigInt stirling_variant(unsigned n);

/// 5^(eta n) n!.
BigInt archimedean_factorial_bound(const FieldSpec& field, unsigned n);

/// ceil of a nonnegative rational.
BigInt ceil(const Rational& q);

}  // namespace moment

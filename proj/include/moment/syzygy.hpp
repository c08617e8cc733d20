#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moment/budget.hpp"
#include "moment/curve.hpp"
#include "moment/local_field.hpp"
#include "moment/rational.hpp"

namespace moment {

enum class SyzygyMethod { CongruenceExact, PermutationOracle, RealSampled };

std::string to_string(SyzygyMethod method);

/// A pair of points s in I, t in J with |sum_i gamma(t_i) - gamma(s_i)| <= epsilon.
struct Witness {
  std::vector<Rational> s;
  std::vector<Rational> t;
};

/// The set S(delta, I; epsilon) of tuples J whose curve-point sums come epsilon-close to those of I.
struct SyzygyReport {
  CellTuple base;
  Rational epsilon;
  std::vector<CellTuple> members;  // sorted lexicographically by cell index
  SyzygyMethod method = SyzygyMethod::CongruenceExact;
  std::size_t cardinality = 0;
  std::vector<Witness> witnesses;  // RealSampled only; witnesses[k] certifies members[k]

  bool contains(const CellTuple& J) const;
};

struct EnumerationOptions {
  unsigned threads = 1;
  std::uint64_t max_insertions = 100'000'000;  // hashed power-sum keys on the I side
  std::uint64_t max_probes = 20'000'000'000;   // tuples probed against them
};

/// Exact decision of J in S(p^-s, I; p^-ns) for the moment curve over Q_p: residues
/// s_i in I_i, t_i in J_i mod p^(ns) whose power sums agree mod p^(ns).
bool is_syzygy_nonarch(const Curve& curve, const CellTuple& I, const CellTuple& J,
                       const EnumerationOptions& options = {});

/// Every J in S(p^-s, I; p^-ns), by congruence enumeration mod p^(ns).
SyzygyReport syzygy_set_nonarch(const Curve& curve, const CellTuple& I, const EnumerationOptions& options = {});

/// True iff J equals I as a multiset of cells.
bool permutation_predicate(const CellTuple& I, const CellTuple& J);

/// All distinct orderings of I, as a report with method PermutationOracle.
SyzygyReport permutation_set(const CellTuple& I);

/// Grid-sampled lower approximation of S(delta, I; epsilon) over R. Every member carries
/// a witness pair re-verified in exact rational arithmetic.
SyzygyReport syzygy_set_real(const Curve& curve, const CellTuple& I, const Rational& epsilon,
                             const Rational& grid_step, const EnumerationOptions& options = {});

/// C_{K,n} n^n.
double syzygy_bound(const FieldSpec& field, unsigned n);

/// Exhaustive pass over all base tuples at one p-adic scale.
struct ScaleSurvey {
  FieldSpec field;
  unsigned n = 0;
  unsigned s = 0;
  std::size_t base_multisets = 0;   // distinct multisets of cells checked
  std::size_t max_cardinality = 0;  // max_I |S(delta, I; delta^n)| at this scale
  std::vector<std::uint64_t> argmax;
  std::size_t oracle_agreements = 0;  // bases whose set equals the permutation set
  std::optional<std::vector<std::uint64_t>> first_disagreement;
};

ScaleSurvey survey_scale_nonarch(const FieldSpec& field, unsigned n, unsigned s,
                                 const EnumerationOptions& options = {});

/// max_I |syzygy_set_real(I)| over every base multiset at scale 1/R, epsilon = delta^n.
std::size_t max_cardinality_real(const Curve& curve, std::uint64_t R, const Rational& grid_step,
                                 const EnumerationOptions& options = {});

/// Distinct orderings of a multiset of indices, ascending lexicographically.
std::vector<std::vector<std::uint64_t>> distinct_orderings(std::vector<std::uint64_t> indices);

}  // namespace moment

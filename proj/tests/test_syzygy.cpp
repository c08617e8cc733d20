#include "doctest.h"
#include "moment/budget.hpp"
#include "moment/syzygy.hpp"
#include "oracles.hpp"

using namespace moment;

namespace {

CellTuple tuple(const FieldSpec& f, const Scale& sc, std::vector<std::uint64_t> idx) { return CellTuple::of(f, sc, idx); }

std::vector<std::vector<std::uint64_t>> indices(const SyzygyReport& r) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& m : r.members) out.push_back(m.indices());
  return out;
}

}  // namespace

TEST_CASE("exact decision examples") {
  const auto q3 = FieldSpec::padic(3);
  const auto sc = Scale::padic(q3, 1);
  const auto curve = Curve::moment(2);
  CHECK(is_syzygy_nonarch(curve, tuple(q3, sc, {0, 1}), tuple(q3, sc, {0, 1})));
  CHECK(is_syzygy_nonarch(curve, tuple(q3, sc, {0, 1}), tuple(q3, sc, {1, 0})));
  CHECK_FALSE(is_syzygy_nonarch(curve, tuple(q3, sc, {0, 0}), tuple(q3, sc, {0, 1})));
}

TEST_CASE("exact decision matches residue enumeration") {
  struct Case {
    std::uint64_t p;
    unsigned n, s;
  };
  for (const Case c : {Case{3, 2, 1}, Case{5, 2, 1}, Case{2, 2, 1}, Case{3, 2, 2}, Case{2, 3, 1}}) {
    const auto f = FieldSpec::padic(c.p);
    const auto sc = Scale::padic(f, c.s);
    const auto curve = Curve::moment(c.n);
    const std::uint64_t cells = sc.cells_per_axis;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < c.n; ++i) total *= cells;
    auto unpack = [&](std::uint64_t code) {
      std::vector<std::uint64_t> v(c.n);
      for (auto& x : v) {
        x = code % cells;
        code /= cells;
      }
      return v;
    };
    for (std::uint64_t a = 0; a < total; ++a)
      for (std::uint64_t b = 0; b < total; ++b) {
        const auto I = unpack(a), J = unpack(b);
        CHECK(is_syzygy_nonarch(curve, tuple(f, sc, I), tuple(f, sc, J)) == oracle::padic_syzygy(c.p, c.n, c.s, I, J));
      }
  }
}

TEST_CASE("syzygy sets") {
  const auto q5 = FieldSpec::padic(5);
  const auto sc = Scale::padic(q5, 1);
  const auto r = syzygy_set_nonarch(Curve::moment(2), tuple(q5, sc, {0, 1}));
  CHECK(r.cardinality == 2);
  CHECK(indices(r) == std::vector<std::vector<std::uint64_t>>{{0, 1}, {1, 0}});
  CHECK(r.epsilon == Rational(1, 25));

  const auto d = syzygy_set_nonarch(Curve::moment(2), tuple(q5, sc, {2, 2}));
  CHECK(indices(d) == std::vector<std::vector<std::uint64_t>>{{2, 2}});

  const auto q3 = FieldSpec::padic(3);
  const auto t = syzygy_set_nonarch(Curve::moment(3), tuple(q3, Scale::padic(q3, 1), {0, 1, 2}));
  CHECK(t.cardinality == 6);
  CHECK(t.cardinality <= syzygy_bound(q3, 3));
}

TEST_CASE("permutation oracle") {
  const auto f = FieldSpec::padic(5);
  const auto sc = Scale::padic(f, 1);
  CHECK(permutation_predicate(tuple(f, sc, {0, 1}), tuple(f, sc, {1, 0})));
  CHECK_FALSE(permutation_predicate(tuple(f, sc, {0, 0}), tuple(f, sc, {0, 1})));
  CHECK(permutation_predicate(tuple(f, sc, {2, 2}), tuple(f, sc, {2, 2})));
  CHECK(permutation_set(tuple(f, sc, {1, 1, 3})).cardinality == 3);
  CHECK(distinct_orderings({2, 0, 0}) == std::vector<std::vector<std::uint64_t>>{{0, 0, 2}, {0, 2, 0}, {2, 0, 0}});
}

TEST_CASE("strong diagonal surveys") {
  const auto survey = survey_scale_nonarch(FieldSpec::padic(5), 2, 1);
  CHECK(survey.base_multisets == 15);
  CHECK(survey.oracle_agreements == 15);
  CHECK(survey.max_cardinality == 2);
  CHECK_FALSE(survey.first_disagreement.has_value());

  const auto three = survey_scale_nonarch(FieldSpec::padic(5), 3, 1);
  CHECK(three.oracle_agreements == three.base_multisets);
  CHECK(three.max_cardinality == 6);
}

TEST_CASE("symmetry and reflexivity") {
  const auto q3 = FieldSpec::padic(3);
  const auto sc = Scale::padic(q3, 2);
  const auto curve = Curve::moment(2);
  for (std::uint64_t a = 0; a < 9; ++a)
    for (std::uint64_t b = a; b < 9; ++b) {
      const auto I = tuple(q3, sc, {a, b});
      const auto r = syzygy_set_nonarch(curve, I);
      CHECK(r.contains(I));
      for (const auto& J : r.members) CHECK(syzygy_set_nonarch(curve, J).contains(I));
    }
}

TEST_CASE("input errors and budgets") {
  const auto q5 = FieldSpec::padic(5);
  const auto sc = Scale::padic(q5, 9);
  CHECK_THROWS_AS(syzygy_set_nonarch(Curve::moment(2), tuple(q5, sc, {0, 1})), BudgetExceeded);
  const Curve other("other", {RationalPolynomial{0, 1}, RationalPolynomial{0, 0, 0, 1}});
  const auto sc1 = Scale::padic(q5, 1);
  CHECK_THROWS_AS(syzygy_set_nonarch(other, tuple(q5, sc1, {0, 1})), std::invalid_argument);
}

TEST_CASE("real sampler") {
  const auto real = FieldSpec::real();
  const auto sc = Scale::archimedean(8);
  const auto curve = Curve::moment(2);
  const auto I = tuple(real, sc, {2, 5});
  const auto r = syzygy_set_real(curve, I, Rational(1, 64), Rational(1, 64));
  CHECK(r.contains(I));
  CHECK(r.contains(tuple(real, sc, {5, 2})));
  CHECK(r.cardinality <= 50);
  REQUIRE(r.witnesses.size() == r.members.size());
  for (std::size_t k = 0; k < r.members.size(); ++k) {
    const auto& w = r.witnesses[k];
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(w.s[i] >= sc.delta * I.indices()[i]);
      CHECK(w.s[i] <= sc.delta * (I.indices()[i] + 1));
      CHECK(w.t[i] >= sc.delta * r.members[k].indices()[i]);
      CHECK(w.t[i] <= sc.delta * (r.members[k].indices()[i] + 1));
    }
    for (unsigned deg = 1; deg <= 2; ++deg) {
      Rational diff = 0;
      for (std::size_t i = 0; i < 2; ++i) diff += pow(w.t[i], deg) - pow(w.s[i], deg);
      CHECK(abs(diff) <= Rational(1, 64));
    }
  }

  const auto all = syzygy_set_real(curve, tuple(real, Scale::archimedean(4), {1, 2}), Rational(10), Rational(1, 32));
  CHECK(all.cardinality == 16);

  CHECK_THROWS_AS(syzygy_set_real(curve, I, Rational(1, 64), Rational(1, 4)), std::invalid_argument);
}

TEST_CASE("bound values") {
  CHECK(syzygy_bound(FieldSpec::padic(5), 3) == 27);
  CHECK(syzygy_bound(FieldSpec::real(), 3) == 9261);
  CHECK(syzygy_bound(FieldSpec::real(), 7) == doctest::Approx(std::pow(5.0, 7) * std::pow(7.0, 7)));
}

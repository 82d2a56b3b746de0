#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "quasicover/induced.hpp"
#include "quasicover/metrics.hpp"
#include "quasicover/word.hpp"

using namespace quasicover;

TEST_CASE("rationals normalize and print") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(1, -2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).num() == 2);
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(-3).str() == "-3");
  CHECK(Rational(7, 11).str() == "7/11");
  CHECK(Rational(-7, 11).str() == "-7/11");
  CHECK_THROWS_AS(Rational(1, 0), OverflowError);
}

TEST_CASE("rational arithmetic and order") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) / Rational(1, 8) == Rational(4));
  CHECK_THROWS_AS(Rational(1) / Rational(0), OverflowError);

  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(1000000007, 1000000009) < Rational(1));

  // products of coprime near-limit values cannot be represented
  Rational big(3037000500, 1);
  CHECK_THROWS_AS((void)(big * big), OverflowError);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("7/11") == Rational(7, 11));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("4/2") == Rational(2));
  CHECK(!Rational::parse(""));
  CHECK(!Rational::parse("1/"));
  CHECK(!Rational::parse("1/0"));
  CHECK(!Rational::parse("a/b"));
  CHECK(!Rational::parse("1.5"));
}

TEST_CASE("extended costs absorb infinity") {
  ExtCost inf = ExtCost::infinity();
  ExtCost two(Rational(2));
  CHECK(!inf.finite());
  CHECK((inf + two) == inf);
  CHECK((two + two).value() == Rational(4));
  CHECK(two < inf);
  CHECK(!(inf < inf));
  CHECK(inf.str() == "inf");
  CHECK_THROWS_AS(inf.value(), InternalError);
}

TEST_CASE("hamming distance and shape checks") {
  HammingMetric h;
  CHECK(h.homogeneous());
  Word u = word_from_text("abca");
  Word v = word_from_text("abcb");
  CHECK(h.distance(u, v).value() == Rational(1));
  CHECK(h.distance(u, u).value() == Rational(0));
  CHECK_THROWS_AS(h.distance(u, word_from_text("ab")), InputError);
  CHECK_THROWS_AS(h.distance(u, Word({0, 1, 2, 0}, 5)), InputError);
}

TEST_CASE("segment cost matches a direct sum") {
  HammingMetric h;
  Word w = word_from_text("abcabc");
  Word s = word_from_text("cbc", "abc");
  // positions 4..6 of w against s starting at its first symbol
  CHECK(h.segment_cost(w, 4, 6, s, 1) == Rational(1));  // a/c, b/b, c/c
  CHECK(h.segment_cost(w, 5, 6, s, 2) == Rational(0));  // b/b, c/c
  CHECK_THROWS_AS(h.segment_cost(w, 4, 3, s, 1), InputError);  // empty range
  CHECK_THROWS_AS(h.segment_cost(w, 5, 7, s, 1), InputError);
}

TEST_CASE("shift metric weighs positions unevenly") {
  ShiftMetric sh;
  CHECK(!sh.homogeneous());
  Word u = word_from_text("aab");
  Word v = word_from_text("baa");
  // mismatches at positions 1 and 3
  CHECK(sh.distance(u, v).value() == Rational(1, 2) + Rational(1, 8));

  std::vector<Symbol> a(70, 0), b(70, 0);
  b[69] = 1;
  CHECK_THROWS_AS(sh.distance(Word(a, 2), Word(b, 2)), InputError);
}

TEST_CASE("pseudometric validation finds each axiom breach") {
  PseudometricTable ok{{"a", "b", "c"},
                       {{Rational(0), Rational(1), Rational(2)},
                        {Rational(1), Rational(0), Rational(1)},
                        {Rational(2), Rational(1), Rational(0)}}};
  CHECK(validate_pseudometric(ok).empty());

  PseudometricTable diag = ok;
  diag.d[1][1] = Rational(1);
  auto v1 = validate_pseudometric(diag);
  REQUIRE(!v1.empty());
  CHECK(v1.front().kind == AxiomViolation::Kind::Diagonal);

  PseudometricTable asym = ok;
  asym.d[0][1] = Rational(3);
  auto v2 = validate_pseudometric(asym);
  REQUIRE(!v2.empty());
  CHECK(v2.front().kind == AxiomViolation::Kind::Symmetry);

  PseudometricTable neg = ok;
  neg.d[0][1] = Rational(-1);
  neg.d[1][0] = Rational(-1);
  auto v3 = validate_pseudometric(neg);
  REQUIRE(!v3.empty());
  CHECK(v3.front().kind == AxiomViolation::Kind::Negative);

  PseudometricTable tri = ok;
  tri.d[0][2] = Rational(5);
  tri.d[2][0] = Rational(5);
  auto v4 = validate_pseudometric(tri);
  REQUIRE(!v4.empty());
  CHECK(v4.front().kind == AxiomViolation::Kind::Triangle);

  PseudometricTable lop = ok;
  lop.d[2].pop_back();
  auto v5 = validate_pseudometric(lop);
  REQUIRE(!v5.empty());
  CHECK(v5.front().kind == AxiomViolation::Kind::Shape);
}

TEST_CASE("table metric computes per-position table sums") {
  PseudometricTable t{{"a", "b"},
                      {{Rational(0), Rational(1, 2)}, {Rational(1, 2), Rational(0)}}};
  TableMetric metric(t);
  CHECK(metric.homogeneous());
  Word u = word_from_text("aab");
  Word v = word_from_text("abb");
  CHECK(metric.distance(u, v).value() == Rational(1, 2));

  PseudometricTable bad = t;
  bad.d[0][1] = Rational(7);
  CHECK_THROWS_AS(TableMetric{bad}, InputError);
}

TEST_CASE("squared hamming is superadditive with an additive floor") {
  SquaredHammingMetric sq;
  Word u = word_from_text("aabb");
  Word v = word_from_text("bbbb", "ab");
  CHECK(sq.distance(u, v).value() == Rational(4));  // 2 mismatches squared
  CHECK(sq.additive_lower_bound().distance(u, v).value() == Rational(2));

  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    std::int32_t n = 2 + static_cast<std::int32_t>(rng() % 9);
    std::vector<Symbol> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (std::int32_t i = 0; i < n; ++i) {
      a[static_cast<std::size_t>(i)] = static_cast<Symbol>(rng() % 3);
      b[static_cast<std::size_t>(i)] = static_cast<Symbol>(rng() % 3);
    }
    Word u2(a, 3), v2(b, 3);
    std::int32_t cut = 1 + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(n - 1));
    Rational whole = sq.distance(u2, v2).value();
    Rational parts = sq.distance(u2.slice1(1, cut), v2.slice1(1, cut)).value() +
                     sq.distance(u2.slice1(cut + 1, n), v2.slice1(cut + 1, n)).value();
    CHECK(parts <= whole);
    CHECK(sq.additive_lower_bound().distance(u2, v2).value() <= whole);
  }
}

TEST_CASE("extended tables carry infinities through sums") {
  std::vector<std::vector<ExtCost>> d{
      {ExtCost(Rational(0)), ExtCost(Rational(1)), ExtCost::infinity()},
      {ExtCost(Rational(1)), ExtCost(Rational(0)), ExtCost::infinity()},
      {ExtCost::infinity(), ExtCost::infinity(), ExtCost(Rational(0))}};
  ExtendedTableMetric metric(d);
  Word u({0, 1, 0}, 3);
  CHECK(metric.distance(u, Word({1, 1, 0}, 3)).value() == Rational(1));
  CHECK(!metric.distance(u, Word({2, 1, 0}, 3)).finite());
  CHECK(metric.distance(Word({2}, 3), Word({2}, 3)).value() == Rational(0));
}

TEST_CASE("induced metric embeds the base and walls off the rest") {
  // points 0,1 are images of symbols 0,1; point 2 is foreign
  std::vector<std::optional<Symbol>> pre{Symbol(0), Symbol(1), std::nullopt};
  auto base = [](Symbol a, Symbol b) { return a == b ? Rational(0) : Rational(3, 2); };
  auto d = induced_extended_metric(pre, base);
  CHECK(d[0][0].value() == Rational(0));
  CHECK(d[2][2].value() == Rational(0));
  CHECK(d[0][1].value() == Rational(3, 2));
  CHECK(!d[0][2].finite());
  CHECK(!d[2][1].finite());

  std::vector<std::optional<Symbol>> dup{Symbol(0), Symbol(0)};
  CHECK_THROWS_AS(induced_extended_metric(dup, base), InputError);
}

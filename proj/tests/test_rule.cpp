#include "doctest.h"
#include "osd/dsl.hpp"
#include "osd/error.hpp"
#include "osd/rule.hpp"
#include "properties.hpp"

using namespace osd;
using P = IntPolynomial;

TEST_CASE("inflation matrix and primitivity") {
  SubstitutionRule fib = parse_rule("a -> ab; b -> a");
  CHECK(inflation_matrix(fib) == IntMatrix{{1, 1}, {1, 0}});
  CHECK(is_primitive(inflation_matrix(fib)));
  CHECK_FALSE(is_primitive(IntMatrix{{1, 1}, {0, 1}}));
  CHECK_FALSE(is_primitive(IntMatrix{{0, 1}, {1, 0}}));
  CHECK(is_primitive(IntMatrix{{1}}));
  CHECK_FALSE(is_primitive(IntMatrix()));
  // column sums are image lengths
  SubstitutionRule t = parse_rule("a -> cab; b -> ba; c -> a");
  IntMatrix m = inflation_matrix(t);
  for (Letter j = 0; j < 3; ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < 3; ++i) s += m(i, j);
    CHECK(s == t.image(j).size());
  }
}

TEST_CASE("invalid rules") {
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), InvalidRule);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), InvalidRule);
  CHECK_THROWS_AS(SubstitutionRule(Alphabet({"a"}), {Word{}}), InvalidRule);
  CHECK_THROWS_AS(SubstitutionRule(Alphabet({"a"}), {Word{1}}), InvalidRule);
}

TEST_CASE("Perron-Frobenius data") {
  InflationData fib = pf_data(parse_rule("a -> ab; b -> a"));
  CHECK(fib.lambda.to_double() == doctest::Approx(1.618033988749895));
  CHECK(fib.lengths[0].to_double() == 1.0);
  CHECK(fib.lengths[1].to_double() == doctest::Approx(0.618033988749895));
  CHECK(fib.pisot);
  CHECK(fib.unit);

  InflationData cl = pf_data(parse_rule("a -> abab; b -> caab; c -> bcab"));
  CHECK(cl.lambda.to_double() == 4.0);
  for (const auto& l : cl.lengths) CHECK(field_equal(l, FieldElement::constant(cl.field, Rational(1))));
  CHECK(cl.min_poly_lambda == P::descending({1, -4}));
  CHECK_FALSE(cl.unit);

  InflationData plastic = pf_data(parse_rule("a -> bc; b -> a; c -> b"));
  CHECK(plastic.lambda.to_double() == doctest::Approx(1.324717957));
  CHECK(plastic.pisot);

  CHECK_THROWS_AS(pf_data(parse_rule("a -> a; b -> ab")), NotPrimitive);
}

TEST_CASE("language factors") {
  SubstitutionRule fib = parse_rule("a -> ab; b -> a");
  std::set<Word> f2 = language_factors(fib, 2);
  CHECK(f2 == std::set<Word>{{0}, {1}, {0, 0}, {0, 1}, {1, 0}});
  SubstitutionRule trib = parse_rule("a -> ab; b -> ac; c -> a");
  std::set<Word> t2 = language_factors(trib, 2);
  for (Word w : {Word{0, 1}, Word{1, 0}, Word{0, 2}, Word{2, 0}, Word{0, 0}}) CHECK(t2.count(w) == 1);
  CHECK(language_factors(trib, 1).size() == 3);
  // monotone in the length bound and factor closed
  std::set<Word> t3 = language_factors(trib, 3);
  for (const auto& w : t2) CHECK(t3.count(w) == 1);
  for (const auto& w : t3)
    if (w.size() > 1) {
      CHECK(t3.count(Word(w.begin() + 1, w.end())) == 1);
      CHECK(t3.count(Word(w.begin(), w.end() - 1)) == 1);
    }
}

TEST_CASE("length identity property suite") {
  auto o = props::length_suite(100, 14);
  INFO(o.first_failure);
  CHECK(o.failures == 0);
}

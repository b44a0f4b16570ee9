#include "doctest.h"
#include "osd/field.hpp"
#include "properties.hpp"

using namespace osd;
using P = IntPolynomial;

namespace {
FieldContextPtr golden() {
  P f = P::descending({1, -1, -1});
  return std::make_shared<FieldContext>(f, isolate_largest_real_root(f));
}
}  // namespace

TEST_CASE("golden field arithmetic") {
  auto ctx = golden();
  FieldElement x = FieldElement::generator(ctx);
  FieldElement one = FieldElement::constant(ctx, Rational(1));
  CHECK(field_is_zero(x * x - x - one));
  CHECK_FALSE(field_is_zero(x - one));
  CHECK(field_sign(x - one) == 1);
  CHECK(field_sign(one - x) == -1);
  CHECK(field_sign(x * Rational(0)) == 0);
  FieldElement inv = x.inverse_at_root();
  CHECK(field_equal(inv, x - one));
  CHECK(x.to_double() == doctest::Approx(1.618033988749895));
}

TEST_CASE("reducible modulus") {
  // (x^2 - x - 1)(x - 3) evaluated at phi: the factor x - 3 must not matter
  P f = P::descending({1, -1, -1}) * P::descending({1, -3});
  auto ctx = std::make_shared<FieldContext>(f, isolate_largest_real_root(P::descending({1, -1, -1})));
  FieldElement x = FieldElement::generator(ctx);
  FieldElement one = FieldElement::constant(ctx, Rational(1));
  CHECK(field_is_zero(x * x - x - one));
  FieldElement y = x - one;
  FieldElement inv = y.inverse_at_root();
  CHECK(field_equal(inv * y, one));
  CHECK_THROWS((x * x - x - one).inverse_at_root());
}

TEST_CASE("sign antisymmetry") {
  std::mt19937 rng(3);
  auto ctx = std::make_shared<FieldContext>(P::descending({1, -1, -1, -1}),
                                            isolate_largest_real_root(P::descending({1, -1, -1, -1})));
  for (int k = 0; k < 300; ++k) {
    std::vector<Rational> c;
    for (int i = 0; i < 3; ++i) c.push_back(props::random_rational(rng, 6, 4));
    FieldElement e(ctx, c);
    CHECK(field_sign(e) == -field_sign(-e));
  }
}

TEST_CASE("field_is_zero property suite") {
  auto o = props::field_zero_suite(100, 13);
  INFO(o.first_failure);
  CHECK(o.failures == 0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "troplin/semifield.hpp"

using namespace troplin;

namespace {

TropValue tv(long v) { return TropValue(Rational(v)); }

TropValue random_trop(std::mt19937_64& rng) {
  if (rng() % 5 == 0) return TropValue::zero();
  const long num = static_cast<long>(rng() % 21) - 10;
  const long den = static_cast<long>(rng() % 4) + 1;
  return TropValue(Rational(num) / den);
}

}  // namespace

TEST_CASE("max-plus addition is maximum") {
  CHECK(tv(3) + tv(5) == tv(5));
  CHECK(TropValue::zero() + tv(2) == tv(2));
  CHECK(tv(4) + tv(4) == tv(4));
}

TEST_CASE("max-plus multiplication and inverses") {
  CHECK(tv(3) * tv(5) == tv(8));
  CHECK(TropValue::zero() * tv(7) == TropValue::zero());
  CHECK(TropValue(Rational(3) / 2).inv() == TropValue(Rational(-3) / 2));
  CHECK_THROWS_AS(TropValue::zero().inv(), DomainError);
}

TEST_CASE("boolean semifield") {
  CHECK(BoolValue::one() + BoolValue::one() == BoolValue::one());
  CHECK(BoolValue::zero() + BoolValue::one() == BoolValue::one());
  CHECK(BoolValue::one() * BoolValue::zero() == BoolValue::zero());
  CHECK(BoolValue::one().inv() == BoolValue::one());
  CHECK_THROWS_AS(BoolValue::zero().inv(), DomainError);
}

TEST_CASE("push-forward") {
  CHECK(push_forward(TropValue::zero()) == BoolValue::zero());
  CHECK(push_forward(tv(0)) == BoolValue::one());
  CHECK(push_forward(tv(-7)) == BoolValue::one());
}

TEST_CASE("semifield laws on random triples") {
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 500; ++i) {
    const TropValue a = random_trop(rng), b = random_trop(rng), c = random_trop(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + a == a);
    CHECK(a.leq(b) == (a + b == b));
    // push-forward is a semiring homomorphism
    CHECK(push_forward(a + b) == push_forward(a) + push_forward(b));
    CHECK(push_forward(a * b) == push_forward(a) * push_forward(b));
    // total order
    CHECK((a.leq(b) || b.leq(a)));
  }
}

TEST_CASE("string round trips") {
  CHECK(TropValue::parse("3/2").str() == "3/2");
  CHECK(TropValue::parse("-inf").is_zero());
  CHECK(TropValue::parse("-7").str() == "-7");
  CHECK_THROWS_AS(TropValue::parse("zzz"), DomainError);
}

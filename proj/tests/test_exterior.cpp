#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "troplin/exterior.hpp"

using namespace troplin;
using namespace troplin::testing;

namespace {

ExteriorVector<BoolValue> bvec(const GroundSet& g, int grade, std::initializer_list<const char*> keys) {
  ExteriorVector<BoolValue> v(g, grade);
  for (const char* k : keys) v.set(g.parse_subset_key(k), BoolValue::one());
  return v;
}

ExteriorVector<TropValue> random_vector(const GroundSet& g, int grade, std::mt19937_64& rng) {
  ExteriorVector<TropValue> v(g, grade);
  for_each_subset_of_size(g.full_mask(), grade, [&](Mask i) {
    if (rand_int(rng, 0, 2) != 0) v.set(i, TropValue(Rational(rand_int(rng, -5, 5))));
  });
  return v;
}

}  // namespace

TEST_CASE("subset enumeration is ascending and complete") {
  std::vector<Mask> subs = subsets_of_size(0b11011, 3);
  CHECK(subs.size() == 4);
  CHECK(std::is_sorted(subs.begin(), subs.end()));
  for (Mask m : subs) {
    CHECK(popcount(m) == 3);
    CHECK((m & ~Mask{0b11011}) == 0);
  }
  CHECK(subsets_of_size(0b111, 0) == std::vector<Mask>{0});
  CHECK(subsets_of_size(0b111, 4).empty());
}

TEST_CASE("wedge over the boolean semifield") {
  GroundSet e = numbered_ground_set(4);
  auto u = bvec(e, 1, {"1", "2"});
  auto v = bvec(e, 1, {"3", "4"});
  CHECK(wedge(u, v) == bvec(e, 2, {"1,3", "1,4", "2,3", "2,4"}));
  // unit of the algebra
  auto w = bvec(e, 2, {"1,2", "3,4"});
  CHECK(wedge(ExteriorVector<BoolValue>::unit(e), w) == w);
}

TEST_CASE("wedge over max-plus expands with maximum") {
  GroundSet e = numbered_ground_set(2);
  ExteriorVector<TropValue> u(e, 1), v(e, 1);
  u.set(0b01, TropValue(Rational(0)));
  u.set(0b10, TropValue(Rational(1)));
  v.set(0b01, TropValue(Rational(0)));
  v.set(0b10, TropValue(Rational(0)));
  CHECK(wedge(u, v).at(0b11) == TropValue(Rational(1)));
}

TEST_CASE("wedge clamps overfull grades to the zero vector") {
  GroundSet e = numbered_ground_set(2);
  auto u = bvec(e, 2, {"1,2"});
  auto v = bvec(e, 1, {"1"});
  auto w = wedge(u, v);
  CHECK(w.is_zero());
  CHECK(w.grade() == 2);
}

TEST_CASE("hodge star complements and is an involution") {
  GroundSet e3 = numbered_ground_set(3);
  CHECK(hodge_star(bvec(e3, 2, {"1,2", "1,3", "2,3"})) == bvec(e3, 1, {"3", "2", "1"}));
  GroundSet e4 = numbered_ground_set(4);
  CHECK(hodge_star(bvec(e4, 3, {"1,2,3", "1,2,4", "1,3,4", "2,3,4"})) ==
        bvec(e4, 1, {"4", "3", "2", "1"}));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto u = random_vector(e4, static_cast<int>(rand_int(rng, 0, 4)), rng);
    CHECK(hodge_star(hodge_star(u)) == u);
  }
}

TEST_CASE("dot products of the uniform example") {
  GroundSet e = numbered_ground_set(4);
  auto w = bvec(e, 3, {"1,2,3", "1,2,4", "1,3,4", "2,3,4"});
  auto phi12 = bvec(e, 1, {"1", "2"});
  CHECK(dot(w, hodge_star(phi12)) == bvec(e, 2, {"1,3", "1,4", "2,3", "2,4", "3,4"}));
  auto phi_all = bvec(e, 1, {"1", "2", "3", "4"});
  CHECK(dot(w, hodge_star(phi_all)) ==
        bvec(e, 2, {"1,2", "1,3", "1,4", "2,3", "2,4", "3,4"}));
  // dotting with the top form is the identity
  CHECK(dot(w, ExteriorVector<BoolValue>::top_form(e)) == w);
}

TEST_CASE("dot agrees with direct expansion on random instances") {
  GroundSet e = numbered_ground_set(5);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const int d1 = static_cast<int>(rand_int(rng, 0, 5));
    const int d2 = static_cast<int>(rand_int(rng, 0, 5));
    auto u = random_vector(e, d1, rng);
    auto v = random_vector(e, d2, rng);
    CHECK(dot(u, v) == dot_reference(u, v));
  }
}

TEST_CASE("wedge is commutative and associative on random triples") {
  GroundSet e = numbered_ground_set(6);
  std::mt19937_64 rng(5150);
  for (int i = 0; i < 60; ++i) {
    auto u = random_vector(e, static_cast<int>(rand_int(rng, 0, 2)), rng);
    auto v = random_vector(e, static_cast<int>(rand_int(rng, 0, 2)), rng);
    auto w = random_vector(e, static_cast<int>(rand_int(rng, 0, 2)), rng);
    CHECK(wedge(u, v) == wedge(v, u));
    CHECK(wedge(wedge(u, v), w) == wedge(u, wedge(v, w)));
  }
}

TEST_CASE("tropdet matches permutation expansion") {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 4; ++n) {
    GroundSet rows = numbered_ground_set(n);
    GroundSet cols = numbered_ground_set(n, 11);
    for (int rep = 0; rep < 30; ++rep) {
      auto a = random_matrix(rows, cols, -5, 5, 25, rng);
      for (int k = 0; k <= n; ++k) {
        const Mask rm = subsets_of_size(rows.full_mask(), k).front();
        const Mask cm = subsets_of_size(cols.full_mask(), k).back();
        CHECK(tropdet(a, rm, cm) == permanent_reference(a, rm, cm));
      }
      auto b = push_forward(a);
      const Mask full = rows.full_mask();
      CHECK(tropdet(b, full, cols.full_mask()) == permanent_reference(b, full, cols.full_mask()));
    }
  }
}

TEST_CASE("tropdet of a 2x2 max-plus matrix") {
  GroundSet rows = numbered_ground_set(2);
  GroundSet cols = numbered_ground_set(2, 3);
  TropMatrix<TropValue> a(rows, cols);
  a.set(0, 0, TropValue(Rational(0)));
  a.set(0, 1, TropValue(Rational(1)));
  a.set(1, 0, TropValue(Rational(1)));
  a.set(1, 1, TropValue(Rational(0)));
  CHECK(tropdet(a, 0b11, 0b11) == TropValue(Rational(2)));
  CHECK(tropdet(a, 0, 0) == TropValue::one());
}

TEST_CASE("boolean tropdet detects matchings") {
  GroundSet rows = numbered_ground_set(2);
  GroundSet cols = numbered_ground_set(3, 11);
  TropMatrix<BoolValue> a(rows, cols);
  a.set(0, 0, BoolValue::one());
  a.set(1, 0, BoolValue::one());
  a.set(1, 2, BoolValue::one());
  CHECK(tropdet(a, 0b11, 0b101) == BoolValue::one());   // rows {1,2} -> cols {11,13}
  CHECK(tropdet(a, 0b11, 0b011) == BoolValue::zero());  // both rows need column 11
}

TEST_CASE("projective normalization") {
  GroundSet e = numbered_ground_set(3);
  ExteriorVector<TropValue> u(e, 1);
  u.set(0b001, TropValue(Rational(2)));
  u.set(0b100, TropValue(Rational(5)));
  auto scaled = scalar_mul(TropValue(Rational(-7)), u);
  CHECK(projectively_equal(u, scaled));
  CHECK(normalize_projective(u).at(0b001) == TropValue::one());
  ExteriorVector<TropValue> other = u;
  other.set(0b010, TropValue(Rational(0)));
  CHECK(!projectively_equal(u, other));
}

TEST_CASE("matrix apply is max-plus matrix-vector product") {
  GroundSet e = numbered_ground_set(2);
  GroundSet f{"f1", "f2"};
  TropMatrix<TropValue> a(f, e);
  a.set(0, 0, TropValue(Rational(1)));
  a.set(0, 1, TropValue(Rational(0)));
  a.set(1, 1, TropValue(Rational(3)));
  ExteriorVector<TropValue> v(e, 1);
  v.set(0b01, TropValue(Rational(2)));
  v.set(0b10, TropValue(Rational(4)));
  auto out = a.apply(v);
  CHECK(out.at(0b01) == TropValue(Rational(4)));
  CHECK(out.at(0b10) == TropValue(Rational(7)));
}

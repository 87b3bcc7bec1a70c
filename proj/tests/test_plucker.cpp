#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support.hpp"
#include "troplin/plucker.hpp"

using namespace troplin;
using namespace troplin::testing;

namespace {

ExteriorVector<BoolValue> bvec(const GroundSet& g, int grade, std::initializer_list<const char*> keys) {
  ExteriorVector<BoolValue> v(g, grade);
  for (const char* k : keys) v.set(g.parse_subset_key(k), BoolValue::one());
  return v;
}

PluckerVector<BoolValue> bplucker(const GroundSet& g, int grade,
                                  std::initializer_list<const char*> keys) {
  return PluckerVector<BoolValue>::checked(bvec(g, grade, keys));
}

ExteriorVector<TropValue> tpoint(const GroundSet& g, std::initializer_list<const char*> entries) {
  ExteriorVector<TropValue> v(g, 1);
  int i = 0;
  for (const char* e : entries) v.set(Mask{1} << i++, TropValue::parse(e));
  return v;
}

}  // namespace

TEST_CASE("validation accepts matroidal vectors and single terms") {
  GroundSet e = numbered_ground_set(4);
  CHECK(PluckerVector<BoolValue>::validate(bvec(e, 2, {"1,3", "1,4", "2,3", "2,4", "3,4"})).ok());
  CHECK(PluckerVector<BoolValue>::validate(bvec(e, 2, {"2,4"})).ok());
  CHECK(PluckerVector<BoolValue>::validate(bvec(e, 0, {""})).ok());
  CHECK_FALSE(PluckerVector<BoolValue>::validate(ExteriorVector<BoolValue>(e, 2)).ok());
}

TEST_CASE("validation rejects the broken exchange pair with a witness") {
  GroundSet e = numbered_ground_set(4);
  auto outcome = PluckerVector<BoolValue>::validate(bvec(e, 2, {"1,2", "3,4"}));
  REQUIRE_FALSE(outcome.ok());
  // First violated triple in enumeration order, derived by hand: J={1,2,3},
  // K={4}, and the unique maximal term sits at j=3.
  CHECK(outcome.violation->j_set == e.parse_subset_key("1,2,3"));
  CHECK(outcome.violation->k_set == e.parse_subset_key("4"));
  CHECK(e.label(outcome.violation->j) == "3");
  // Oracle: that pair really is unbalanced, by direct expansion.
  const Mask j_set = outcome.violation->j_set, k_set = outcome.violation->k_set;
  auto u = bvec(e, 2, {"1,2", "3,4"});
  int nonzero_terms = 0;
  for (Mask x = j_set & ~k_set; x != 0; x &= x - 1) {
    const Mask bit = x & (~x + 1);
    if (!(u.at(j_set & ~bit) * u.at(k_set | bit)).is_zero()) ++nonzero_terms;
  }
  CHECK(nonzero_terms == 1);
}

TEST_CASE("hyperplane membership") {
  GroundSet e = numbered_ground_set(3);
  auto f12 = tpoint(e, {"0", "0", "-inf"});
  CHECK(in_hyperplane(tpoint(e, {"0", "0", "-inf"}), f12));
  CHECK_FALSE(in_hyperplane(tpoint(e, {"1", "0", "-inf"}), f12));
  auto f3 = tpoint(e, {"-inf", "-inf", "0"});
  CHECK(in_hyperplane(tpoint(e, {"5", "7", "-inf"}), f3));
}

TEST_CASE("membership in the example spaces") {
  GroundSet e = numbered_ground_set(4);
  // Divisor of x3+x4 on the rank-3 uniform space: elements 3,4 parallel,
  // so points satisfy v3 = v4 with max(v1, v2, v3) attained twice.
  ExteriorVector<TropValue> w2(e, 2);
  for (const char* k : {"1,2", "1,3", "1,4", "2,3", "2,4"})
    w2.set(e.parse_subset_key(k), TropValue::one());
  auto p2 = PluckerVector<TropValue>::checked(w2);
  CHECK(contains_point(p2, tpoint(e, {"0", "-1", "0", "0"})));
  CHECK_FALSE(contains_point(p2, tpoint(e, {"1", "0", "0", "0"})));
  CHECK(contains_point(p2, ExteriorVector<TropValue>(e, 1)));  // the zero point

  // Divisor of x1+x2: elements 1,2 parallel, so v1 = v2 throughout.
  ExteriorVector<TropValue> w1(e, 2);
  for (const char* k : {"1,3", "1,4", "2,3", "2,4", "3,4"})
    w1.set(e.parse_subset_key(k), TropValue::one());
  auto p1 = PluckerVector<TropValue>::checked(w1);
  CHECK(contains_point(p1, tpoint(e, {"0", "0", "-1", "0"})));
  CHECK(contains_point(p1, tpoint(e, {"0", "0", "1", "1"})));
  CHECK_FALSE(contains_point(p1, tpoint(e, {"0", "0", "-1", "-1"})));
  CHECK_FALSE(contains_point(p1, tpoint(e, {"0", "-1", "0", "0"})));
  // membership agrees with the cocircuit span on both spaces
  for (const auto& c : cocircuits(p1)) CHECK(contains_point(p1, c.point));
  for (const auto& c : cocircuits(p2)) CHECK(contains_point(p2, c.point));
}

TEST_CASE("cocircuits of the uniform line") {
  GroundSet e = numbered_ground_set(3);
  auto w = bplucker(e, 2, {"1,2", "1,3", "2,3"});
  auto cc = cocircuits(w);
  REQUIRE(cc.size() == 3);
  CHECK(cc[0].k_set == e.parse_subset_key("1"));
  CHECK(cc[0].point == bvec(e, 1, {"2", "3"}));
  // single-term vector: one nonzero entry per cocircuit
  auto single = bplucker(e, 2, {"1,3"});
  for (const auto& c : cocircuits(single)) CHECK(c.point.coords().size() == 1);
}

TEST_CASE("subspace containment over the booleans") {
  GroundSet e = numbered_ground_set(3);
  auto line = bplucker(e, 1, {"1", "2"});
  auto plane = bplucker(e, 2, {"1,2", "1,3", "2,3"});
  CHECK(is_subspace(line, plane));
  CHECK(is_subspace(plane, plane));
  CHECK_FALSE(is_subspace(bplucker(e, 1, {"3"}), bplucker(e, 2, {"1,2"})));
  // oracle: pointwise containment agrees
  auto points_sub = bool_points(line);
  for (Mask v : points_sub) CHECK(contains_point(plane, bool_point(e, v)));
}

TEST_CASE("subspace containment agrees with pointwise containment exhaustively (n=4)") {
  GroundSet e = numbered_ground_set(4);
  auto catalog = enumerate_matroids(e);
  std::vector<PluckerVector<BoolValue>> vectors;
  std::vector<std::uint32_t> point_sets;
  for (const Matroid& m : catalog) {
    ExteriorVector<BoolValue> v(e, m.rank());
    for (Mask b : m.bases()) v.set(b, BoolValue::one());
    auto w = PluckerVector<BoolValue>::checked(v);
    std::uint32_t mask = 0;
    for (Mask p : bool_points(w)) mask |= std::uint32_t{1} << p;
    vectors.push_back(std::move(w));
    point_sets.push_back(mask);
  }
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      const bool relation = is_subspace(vectors[i], vectors[j]);
      const bool pointwise = (point_sets[i] & ~point_sets[j]) == 0;
      CHECK(relation == pointwise);
    }
}

TEST_CASE("duality") {
  GroundSet e = numbered_ground_set(4);
  auto w = bplucker(e, 2, {"1,3", "1,4", "2,3", "2,4", "3,4"});
  auto d = dual(w);
  CHECK(d.rank() == 2);
  CHECK(PluckerVector<BoolValue>::validate(d.vec()).ok());
  CHECK(dual(d).vec() == w.vec());
  // star reverses containment
  GroundSet e3 = numbered_ground_set(3);
  auto line = bplucker(e3, 1, {"1", "2"});
  auto plane = bplucker(e3, 2, {"1,2", "1,3", "2,3"});
  CHECK(is_subspace(line, plane));
  CHECK(is_subspace(dual(plane), dual(line)));
}

TEST_CASE("minor projection and intersection on the uniform line") {
  GroundSet e = numbered_ground_set(3);
  auto w = bplucker(e, 2, {"1,2", "1,3", "2,3"});
  const Mask f = e.parse_subset_key("1,2");
  auto projected = minor_project(w, f);
  CHECK(projected.rank() == 2);
  CHECK(projected.ground().labels() == std::vector<std::string>{"1", "2"});
  CHECK(projected.vec().at(0b11) == BoolValue::one());
  auto intersected = minor_intersect(w, f);
  CHECK(intersected.rank() == 1);
  CHECK(intersected.vec() == bvec(projected.ground(), 1, {"1", "2"}));
  // identity and empty cases
  CHECK(minor_project(w, e.full_mask()).vec() == w.vec());
  CHECK(minor_intersect(w, e.full_mask()).vec() == w.vec());
  CHECK(minor_intersect(w, 0).rank() == 0);
}

TEST_CASE("projection of a line off its support is the zero subspace") {
  GroundSet e = numbered_ground_set(2);
  auto w = bplucker(e, 1, {"1"});
  auto z = minor_project(w, e.parse_subset_key("2"));
  CHECK(z.rank() == 0);
}

TEST_CASE("boolean minors match matroid minors (all matroids on 4 elements)") {
  GroundSet e = numbered_ground_set(4);
  for (const Matroid& m : enumerate_matroids(e)) {
    ExteriorVector<BoolValue> v(e, m.rank());
    for (Mask b : m.bases()) v.set(b, BoolValue::one());
    auto w = PluckerVector<BoolValue>::checked(v);
    for_each_submask(e.full_mask(), [&](Mask f) {
      const Mask complement = e.full_mask() & ~f;
      CHECK(underlying_matroid(minor_project(w, f)) == delete_elements(m, complement));
      CHECK(underlying_matroid(minor_intersect(w, f)) == contract(m, complement));
    });
  }
}

TEST_CASE("projection is projectively independent of the admissible J") {
  // Exercises alternative J choices directly: every J of the right size
  // with a nonzero selection yields the same projective vector.
  GroundSet e = numbered_ground_set(4);
  std::mt19937_64 rng(424242);
  for (int rep = 0; rep < 40; ++rep) {
    auto w = random_stiefel(e, 2, -3, 3, 20, rng);
    const Mask f = static_cast<Mask>(rand_int(rng, 1, 14));
    const Mask rest = e.full_mask() & ~f;
    auto reference = minor_project(w, f);
    const int j_size = w.rank() - support_rank(w.vec(), f);
    const GroundSet sub = e.restrict(f);
    for_each_subset_of_size(rest, j_size, [&](Mask j_mask) {
      ExteriorVector<TropValue> z(sub, w.rank() - j_size);
      for (const auto& [i, c] : w.vec().coords())
        if ((i & ~f) == j_mask) z.set(detail::compress_to(i & f, f), c);
      if (!z.is_zero()) CHECK(projectively_equal(z, reference.vec()));
    });
  }
}

TEST_CASE("underlying matroid of a max-plus vector") {
  GroundSet e = numbered_ground_set(3);
  ExteriorVector<TropValue> v(e, 2);
  v.set(e.parse_subset_key("1,2"), TropValue(Rational(0)));
  v.set(e.parse_subset_key("1,3"), TropValue(Rational(1)));
  auto w = PluckerVector<TropValue>::checked(v);
  Matroid m = underlying_matroid(w);
  CHECK(m.bases() == std::vector<Mask>{e.parse_subset_key("1,2"), e.parse_subset_key("1,3")});
}

TEST_CASE("cocircuit span equals the membership set over the booleans (n<=4)") {
  for (int n = 1; n <= 4; ++n) {
    GroundSet e = numbered_ground_set(n);
    for (const Matroid& m : enumerate_matroids(e)) {
      ExteriorVector<BoolValue> v(e, m.rank());
      for (Mask b : m.bases()) v.set(b, BoolValue::one());
      auto w = PluckerVector<BoolValue>::checked(v);
      auto gens = cocircuits(w);
      std::set<Mask> span;
      const std::uint64_t combos = std::uint64_t{1} << gens.size();
      for (std::uint64_t pick = 0; pick < combos; ++pick) {
        Mask point = 0;
        for (std::size_t i = 0; i < gens.size(); ++i)
          if ((pick >> i) & 1)
            for (const auto& [bit, c] : gens[i].point.coords()) {
              (void)c;
              point |= bit;
            }
        span.insert(point);
      }
      std::set<Mask> members;
      for (Mask p : bool_points(w)) members.insert(p);
      CHECK(span == members);
    }
  }
}

TEST_CASE("random max-plus Plücker vectors validate and their minors revalidate") {
  std::mt19937_64 rng(31337);
  for (int rep = 0; rep < 30; ++rep) {
    GroundSet e = numbered_ground_set(static_cast<int>(rand_int(rng, 2, 5)));
    const int d = static_cast<int>(rand_int(rng, 1, e.size()));
    auto w = random_stiefel(e, d, -5, 5, 25, rng);
    CHECK(PluckerVector<TropValue>::validate(w.vec()).ok());
    CHECK(PluckerVector<TropValue>::validate(dual(w).vec()).ok());
    const Mask f = static_cast<Mask>(rand_int(rng, 1, static_cast<long>(e.full_mask())));
    CHECK(PluckerVector<TropValue>::validate(minor_project(w, f).vec()).ok());
    CHECK(PluckerVector<TropValue>::validate(minor_intersect(w, f).vec()).ok());
  }
}

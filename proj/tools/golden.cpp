#include "golden.hpp"

#include <algorithm>

#include "troplin/extension.hpp"
#include "troplin/lift.hpp"

namespace troplin::golden {

namespace {

ExteriorVector<BoolValue> bool_vector(const GroundSet& ground, int grade,
                                      const std::vector<std::string>& keys) {
  ExteriorVector<BoolValue> v(ground, grade);
  for (const auto& k : keys) v.set(ground.parse_subset_key(k), BoolValue::one());
  return v;
}

void check(ExampleResult& r, bool ok, const std::string& what) {
  r.details.push_back(std::string(ok ? "ok:   " : "FAIL: ") + what);
  if (!ok) r.pass = false;
}

// The uniform-matroid example: the divisors of the three linear forms on
// L_w for w = e123+e124+e134+e234 are the stable intersections with the
// corresponding hyperplanes.
ExampleResult u34_example() {
  ExampleResult r{"u34-example", true, {}};
  GroundSet e = numbered_ground_set(4);
  auto w = PluckerVector<BoolValue>::checked(
      bool_vector(e, 3, {"1,2,3", "1,2,4", "1,3,4", "2,3,4"}));

  auto form = [&](const std::vector<std::string>& labels) {
    ExteriorVector<BoolValue> f(e, 1);
    for (const auto& l : labels) f.set(Mask{1} << e.index(l), BoolValue::one());
    return f;
  };
  const auto expected1 = bool_vector(e, 2, {"1,3", "1,4", "2,3", "2,4", "3,4"});
  const auto expected2 = bool_vector(e, 2, {"1,2", "1,3", "1,4", "2,3", "2,4"});
  const auto expected3 = bool_vector(e, 2, {"1,2", "1,3", "1,4", "2,3", "2,4", "3,4"});

  check(r, dot(w.vec(), hodge_star(form({"1", "2"}))) == expected1, "w · ⋆(x1+x2)");
  check(r, dot(w.vec(), hodge_star(form({"3", "4"}))) == expected2, "w · ⋆(x3+x4)");
  check(r, dot(w.vec(), hodge_star(form({"1", "2", "3", "4"}))) == expected3, "w · ⋆(x1+x2+x3+x4)");

  // The same divisors through the generalized stable intersection.
  auto hyperplane = [&](const std::vector<std::string>& labels) {
    return PluckerVector<BoolValue>::checked(hodge_star(form(labels)));
  };
  check(r, projectively_equal(stable_intersection(w, hyperplane({"1", "2"})).vec(), expected1),
        "stable intersection with x1+x2");
  check(r, projectively_equal(stable_intersection(w, hyperplane({"3", "4"})).vec(), expected2),
        "stable intersection with x3+x4");
  return r;
}

// Two images in sequence whose composite is not an image: the second image
// is a rank-2 truncation with three rank-1 cyclic flats, which exceeds the
// transversal-matroid bound.
ExampleResult no_composition() {
  ExampleResult r{"no-composition", true, {}};
  GroundSet e2 = numbered_ground_set(2);
  GroundSet e3{"a1", "a2", "a3"};
  auto free2 = PluckerVector<BoolValue>::checked(ExteriorVector<BoolValue>::top_form(e2));

  TropMatrix<BoolValue> a(e3, e2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) a.set(i, j, BoolValue::one());
  auto first = tropical_image(free2, a);
  check(r, first.rank() == 2, "rank of the first image");
  check(r, underlying_matroid(first) == Matroid::uniform(e3, 2), "first image is U_{2,3}");

  GroundSet f = numbered_ground_set(6);
  TropMatrix<BoolValue> b(f, e3);
  for (int i = 0; i < 6; ++i) b.set(i, i / 2, BoolValue::one());

  // The one-step image of the free module: rank 3, three parallel pairs.
  auto free3 = PluckerVector<BoolValue>::checked(ExteriorVector<BoolValue>::top_form(e3));
  Matroid doubled = underlying_matroid(tropical_image(free3, b));
  check(r, doubled.rank() == 3, "rank of the one-step image");
  auto presentation = is_transversal(doubled);
  check(r, presentation.has_value(), "one-step image is transversal");
  if (presentation) {
    std::vector<Mask> sets;
    for (int i = 0; i < 3; ++i) sets.push_back(presentation->left_neighbors(i));
    std::sort(sets.begin(), sets.end());
    check(r, sets == std::vector<Mask>{0b000011, 0b001100, 0b110000},
          "presentation by the three parallel pairs");
  }

  Matroid composite = underlying_matroid(tropical_image(first, b));
  check(r, composite.rank() == 2, "rank of the composite image");

  std::vector<Mask> rank1_cyclic;
  for (const auto& [flat, rank] : cyclic_flats(composite))
    if (rank == 1) rank1_cyclic.push_back(flat);
  check(r, rank1_cyclic == std::vector<Mask>{0b000011, 0b001100, 0b110000},
        "rank-1 cyclic flats are {1,2}, {3,4}, {5,6}");
  check(r, !brylawski_bound_check(composite), "Brylawski bound fails");
  check(r, !is_transversal(composite).has_value(), "no transversal presentation exists");
  return r;
}

ExampleResult stable_sum_wedge() {
  ExampleResult r{"stable-sum-wedge", true, {}};
  GroundSet e = numbered_ground_set(4);
  auto w = PluckerVector<BoolValue>::checked(bool_vector(e, 1, {"1", "2"}));
  auto z = PluckerVector<BoolValue>::checked(bool_vector(e, 1, {"3", "4"}));
  const auto expected = bool_vector(e, 2, {"1,3", "1,4", "2,3", "2,4"});
  check(r, wedge(w.vec(), z.vec()) == expected, "w ∧ z");
  check(r, projectively_equal(stable_sum(w, z).vec(), expected), "stable sum equals w ∧ z");
  return r;
}

ExampleResult identity_image() {
  ExampleResult r{"identity-image", true, {}};
  GroundSet e = numbered_ground_set(3);
  GroundSet f{"f1", "f2", "f3"};
  ExteriorVector<TropValue> v(e, 2);
  v.set(e.parse_subset_key("1,2"), TropValue(Rational(0)));
  v.set(e.parse_subset_key("1,3"), TropValue(Rational(1)));
  v.set(e.parse_subset_key("2,3"), TropValue(Rational(-2)));
  auto w = PluckerVector<TropValue>::checked(v);
  auto image = tropical_image(w, TropMatrix<TropValue>::identity(f, e));
  check(r, image.rank() == 2, "rank preserved");
  bool same = true;
  for (const auto& [i, c] : w.vec().coords())
    if (!(normalize_projective(image.vec()).at(i) == c)) same = false;
  check(r, same, "coordinates fixed by the identity matrix");
  return r;
}

}  // namespace

std::vector<std::string> example_names() {
  return {"u34-example", "no-composition", "stable-sum-wedge", "identity-image"};
}

ExampleResult run_example(const std::string& name) {
  if (name == "u34-example") return u34_example();
  if (name == "no-composition") return no_composition();
  if (name == "stable-sum-wedge") return stable_sum_wedge();
  if (name == "identity-image") return identity_image();
  throw DomainError("unknown golden example \"" + name + "\"");
}

}  // namespace troplin::golden

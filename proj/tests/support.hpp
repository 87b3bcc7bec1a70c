#pragma once

// Test-only oracles and generators. Everything here is deliberately
// independent of the library code paths it is used to check: brute-force
// enumeration, permutation expansion, direct definitions.

#include <algorithm>
#include <random>
#include <vector>

#include "troplin/extension.hpp"
#include "troplin/matroid.hpp"
#include "troplin/plucker.hpp"

namespace troplin::testing {

inline std::uint64_t rand_range(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }
inline long rand_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rand_range(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Every matroid on the given ground set, found by filtering all families of
// equal-size subsets through the exchange checker.
inline std::vector<Matroid> enumerate_matroids(const GroundSet& ground) {
  const int n = ground.size();
  std::vector<Matroid> out;
  for (int r = 0; r <= n; ++r) {
    const std::vector<Mask> r_sets = subsets_of_size(ground.full_mask(), r);
    const std::uint64_t families = std::uint64_t{1} << r_sets.size();
    for (std::uint64_t pick = 1; pick < families; ++pick) {
      std::vector<Mask> bases;
      for (std::size_t i = 0; i < r_sets.size(); ++i)
        if ((pick >> i) & 1) bases.push_back(r_sets[i]);
      if (Matroid::is_basis_family(n, bases)) out.emplace_back(ground, std::move(bases));
    }
  }
  return out;
}

// Independence oracle straight from the definition: a set is independent
// iff some basis contains it.
inline bool independent_by_containment(const Matroid& m, Mask x) {
  for (Mask b : m.bases())
    if ((x & ~b) == 0) return true;
  return false;
}

// Matching oracle: does `right_set` have a perfect matching into an
// M-independent subset of the left side? Tries every injective assignment.
inline bool matchable_brute(const Matroid& m, const BipartiteGraph& g, Mask right_set) {
  std::vector<int> rights;
  for (Mask x = right_set; x != 0; x &= x - 1) rights.push_back(std::countr_zero(x));
  auto assign = [&](auto&& self, std::size_t k, Mask used) -> bool {
    if (k == rights.size()) return independent_by_containment(m, used);
    for (Mask x = g.left_neighbors(rights[k]) & ~used; x != 0; x &= x - 1) {
      const Mask bit = x & (~x + 1);
      if (self(self, k + 1, used | bit)) return true;
    }
    return false;
  };
  return assign(assign, 0, 0);
}

// Induced matroid computed purely by matching enumeration.
inline Matroid induced_matroid_brute(const Matroid& m, const BipartiteGraph& g) {
  const Mask full = g.right().full_mask();
  for (int r = std::min(m.rank(), g.right().size()); r >= 0; --r) {
    std::vector<Mask> bases;
    for_each_subset_of_size(full, r, [&](Mask j) {
      if (matchable_brute(m, g, j)) bases.push_back(j);
    });
    if (!bases.empty()) return Matroid(g.right(), std::move(bases));
  }
  return Matroid::rank_zero(g.right());
}

// Permanent by direct permutation enumeration (reference for tropdet).
template <Semifield S>
S permanent_reference(const TropMatrix<S>& a, Mask row_mask, Mask col_mask) {
  std::vector<int> rows, cols;
  for (Mask x = row_mask; x != 0; x &= x - 1) rows.push_back(std::countr_zero(x));
  for (Mask x = col_mask; x != 0; x &= x - 1) cols.push_back(std::countr_zero(x));
  S acc = S::zero();
  std::vector<std::size_t> perm(cols.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    S term = S::one();
    for (std::size_t i = 0; i < rows.size(); ++i) term = term * a.at(rows[i], cols[perm[i]]);
    acc = acc + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Direct expansion of the dot product from its coefficient formula
// (u·v)_K = Σ_{I ∩ J = K, I ∪ J = E} u_I v_J, independent of hodge_star.
template <Semifield S>
ExteriorVector<S> dot_reference(const ExteriorVector<S>& u, const ExteriorVector<S>& v) {
  const int n = u.ground().size();
  const Mask full = u.ground().full_mask();
  const int g = u.grade() + v.grade() - n;
  ExteriorVector<S> out(u.ground(), std::max(g, 0));
  if (g < 0) return out;
  for (const auto& [i, cu] : u.coords())
    for (const auto& [j, cv] : v.coords())
      if ((i | j) == full) out.add_to(i & j, cu * cv);
  return out;
}

// All points of a Boolean tropical linear space, as indicator masks.
inline std::vector<Mask> bool_points(const PluckerVector<BoolValue>& w) {
  const int n = w.ground().size();
  std::vector<Mask> out;
  for (Mask v_mask = 0; v_mask < (Mask{1} << n); ++v_mask) {
    ExteriorVector<BoolValue> v(w.ground(), 1);
    for (Mask x = v_mask; x != 0; x &= x - 1) v.set(x & (~x + 1), BoolValue::one());
    if (contains_point(w, v)) out.push_back(v_mask);
  }
  return out;
}

inline ExteriorVector<BoolValue> bool_point(const GroundSet& ground, Mask v_mask) {
  ExteriorVector<BoolValue> v(ground, 1);
  for (Mask x = v_mask; x != 0; x &= x - 1) v.set(x & (~x + 1), BoolValue::one());
  return v;
}

// Random max-plus matrix with integer entries in [lo, hi] and a sprinkling
// of zeros (-inf).
inline TropMatrix<TropValue> random_matrix(const GroundSet& rows, const GroundSet& cols, long lo,
                                           long hi, int zero_percent, std::mt19937_64& rng) {
  TropMatrix<TropValue> a(rows, cols);
  for (int r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols.size(); ++c)
      if (rand_int(rng, 0, 99) >= zero_percent)
        a.set(r, c, TropValue(Rational(rand_int(rng, lo, hi))));
  return a;
}

// Random tropical Plücker vector: the maximal tropical minors of a random
// d × n matrix (a Stiefel vector, valid by construction). Retries until
// the minors are not all zero.
inline PluckerVector<TropValue> random_stiefel(const GroundSet& ground, int d, long lo, long hi,
                                               int zero_percent, std::mt19937_64& rng) {
  if (d == 0) return PluckerVector<TropValue>::checked(ExteriorVector<TropValue>::unit(ground));
  while (true) {
    GroundSet aux = numbered_ground_set(d, 101);
    TropMatrix<TropValue> a = random_matrix(aux, ground, lo, hi, zero_percent, rng);
    ExteriorVector<TropValue> v(ground, d);
    const Mask row_mask = aux.full_mask();
    for_each_subset_of_size(ground.full_mask(), d, [&](Mask cols) {
      v.set(cols, tropdet(a, row_mask, cols));
    });
    if (!v.is_zero()) return PluckerVector<TropValue>::checked(v);
  }
}

// Random Boolean Plücker vector (indicator of a matroid drawn from the
// catalog of the ground set).
inline PluckerVector<BoolValue> random_bool_plucker(const std::vector<Matroid>& catalog,
                                                    std::mt19937_64& rng) {
  const Matroid& m = catalog[static_cast<std::size_t>(rand_range(rng, catalog.size()))];
  ExteriorVector<BoolValue> v(m.ground(), m.rank());
  for (Mask b : m.bases()) v.set(b, BoolValue::one());
  return PluckerVector<BoolValue>::checked(v);
}

// Random point of L_w as a combination of cocircuits with integer
// coefficients (max-plus).
inline ExteriorVector<TropValue> random_module_point(const PluckerVector<TropValue>& w,
                                                     std::mt19937_64& rng) {
  auto gens = cocircuits(w);
  ExteriorVector<TropValue> v(w.ground(), 1);
  if (gens.empty()) return v;
  bool nonzero = false;
  for (const auto& c : gens) {
    if (rand_int(rng, 0, 2) == 0) continue;
    v = add(v, scalar_mul(TropValue(Rational(rand_int(rng, -5, 5))), c.point));
    nonzero = true;
  }
  if (!nonzero) v = gens.front().point;
  return v;
}

}  // namespace troplin::testing

#pragma once

#include <random>
#include <string>
#include <vector>

#include "troplin/plucker.hpp"

namespace troplin {

// Linear extension of L_w by a new coordinate p carrying the graph of the
// form φ: z = ⋆_{E+p}(⋆_E w ∧ (φ + x_p)), of the same rank, restricting to
// w on subsets of E. Always a Plücker vector.
template <Semifield S>
PluckerVector<S> linear_extension(const PluckerVector<S>& w, const ExteriorVector<S>& phi,
                                  const std::string& new_label) {
  if (!(phi.ground() == w.ground())) throw DomainError("form and space live on different ground sets");
  if (phi.grade() != 1) throw DomainError("extension form must have grade 1");
  if (w.ground().contains(new_label)) throw DomainError("extension label already in ground set");
  const GroundSet extended = w.ground().disjoint_union(GroundSet({new_label}));
  const int n = w.ground().size();
  ExteriorVector<S> form = embed(phi, extended, 0);
  form.set(Mask{1} << n, S::one());
  ExteriorVector<S> starred = embed(hodge_star(w.vec()), extended, 0);
  return PluckerVector<S>::unchecked(hodge_star(wedge(starred, form)));
}

// The tropical graph g(w, A) on E ⊔ F: the iterated linear extension of
// L_w along all row forms of A, computed in one pass as
// ⋆_{E⊔F}(⋆_E w ∧ Π_j (ρ_j + y_j)). Order of the rows is immaterial.
template <Semifield S>
PluckerVector<S> graph_extension(const PluckerVector<S>& w, const TropMatrix<S>& a) {
  if (!(a.cols() == w.ground())) throw DomainError("matrix columns must match the ground set of the space");
  const GroundSet joint = w.ground().disjoint_union(a.rows());
  const int n = w.ground().size();
  const int m = a.rows().size();
  ExteriorVector<S> acc = embed(hodge_star(w.vec()), joint, 0);
  for (int j = 0; j < m; ++j) {
    ExteriorVector<S> form = embed(a.row_form(j), joint, 0);
    form.set(Mask{1} << (n + j), S::one());
    acc = wedge(acc, form);
  }
  return PluckerVector<S>::unchecked(hodge_star(acc));
}

// Tropical image of L_w under A: the projection of the tropical graph onto
// the codomain. Computed as the graph followed by the projection minor.
template <Semifield S>
PluckerVector<S> tropical_image(const PluckerVector<S>& w, const TropMatrix<S>& a) {
  PluckerVector<S> g = graph_extension(w, a);
  const int n = w.ground().size();
  const Mask f_mask = g.ground().full_mask() & ~((Mask{1} << n) - 1);
  return minor_project(g, f_mask);
}

// Closed form of the image coordinates: z_J = Σ_{I ⊆ E-K} tropdet(A_{JI})
// w_{I∪K}, with K a greedily chosen basis of the contraction of the graph
// to E. Projectively equal to tropical_image; kept as an independent
// computation path for cross-checks.
template <Semifield S>
PluckerVector<S> tropical_image_minors(const PluckerVector<S>& w, const TropMatrix<S>& a) {
  PluckerVector<S> g = graph_extension(w, a);
  const int n = w.ground().size();
  const int m = a.rows().size();
  const Mask e_mask = (Mask{1} << n) - 1;
  const Mask f_mask = g.ground().full_mask() & ~e_mask;
  // Greedy basis of the contraction of the graph matroid by F.
  Mask k_set = 0;
  int base_rank = support_rank(g.vec(), f_mask);
  for (int e = 0; e < n; ++e) {
    const Mask bit = Mask{1} << e;
    if (support_rank(g.vec(), f_mask | k_set | bit) > base_rank) {
      k_set |= bit;
      ++base_rank;
    }
  }
  const int image_rank = w.rank() - popcount(k_set);
  ExteriorVector<S> z(a.rows(), image_rank);
  const Mask m_full = (Mask{1} << m) - 1;
  for_each_subset_of_size(m_full, image_rank, [&](Mask j_rows) {
    S acc = S::zero();
    for_each_subset_of_size(e_mask & ~k_set, image_rank, [&](Mask i_cols) {
      const S& coeff = w.vec().at(i_cols | k_set);
      if (coeff.is_zero()) return;
      acc = acc + tropdet(a, j_rows, i_cols) * coeff;
    });
    z.set(j_rows, acc);
  });
  return PluckerVector<S>::unchecked(std::move(z));
}

template <Semifield S>
int image_rank(const PluckerVector<S>& w, const TropMatrix<S>& a) {
  return tropical_image(w, a).rank();
}

namespace detail {

// w ⊕ z on the two labeled copies E' ⊔ E''.
template <Semifield S>
ExteriorVector<S> direct_sum_vector(const PluckerVector<S>& w, const PluckerVector<S>& z,
                                    const GroundSet& domain) {
  const int n = w.ground().size();
  return wedge(embed(w.vec(), domain, 0), embed(z.vec(), domain, n));
}

}  // namespace detail

// Generalized stable sum: the tropical image of L_w ⊕ L_z under the matrix
// [I I] of the addition map S^{E'⊔E''} → S^E. Whenever w ∧ z ≠ 0 the
// result is projectively w ∧ z.
template <Semifield S>
PluckerVector<S> stable_sum(const PluckerVector<S>& w, const PluckerVector<S>& z) {
  if (!(w.ground() == z.ground())) throw DomainError("stable sum needs a common ground set");
  const int n = w.ground().size();
  const GroundSet domain = w.ground().suffixed("'").disjoint_union(w.ground().suffixed("''"));
  TropMatrix<S> addition(w.ground(), domain);
  for (int e = 0; e < n; ++e) {
    addition.set(e, e, S::one());
    addition.set(e, e + n, S::one());
  }
  PluckerVector<S> sum = PluckerVector<S>::unchecked(detail::direct_sum_vector(w, z, domain));
  return tropical_image(sum, addition);
}

// Generalized stable intersection, dual to the stable sum. Whenever
// w · z ≠ 0 the result is projectively w · z.
template <Semifield S>
PluckerVector<S> stable_intersection(const PluckerVector<S>& w, const PluckerVector<S>& z) {
  return dual(stable_sum(dual(w), dual(z)));
}

// The point (v, Av) of the set-theoretic graph, as a grade-1 vector on
// E ⊔ F.
template <Semifield S>
ExteriorVector<S> graph_point(const TropMatrix<S>& a, const ExteriorVector<S>& v) {
  const GroundSet joint = a.cols().disjoint_union(a.rows());
  const int n = a.cols().size();
  ExteriorVector<S> out(joint, 1);
  for (const auto& [i, c] : v.coords()) out.set(i, c);
  ExteriorVector<S> image = a.apply(v);
  for (const auto& [i, c] : image.coords()) out.set(i << n, c);
  return out;
}

// Sampled or enumerated points of the set-theoretic image A·L_w, used to
// exercise the containment A·L_w ⊆ tropim_A(L_w). Over the Boolean
// semifield every point of L_w is enumerated; over max-plus the cocircuits
// are combined `samples` times with seeded random coefficients.
template <Semifield S>
std::vector<ExteriorVector<S>> set_image_points(const PluckerVector<S>& w, const TropMatrix<S>& a,
                                                int samples, std::uint64_t seed) {
  std::vector<ExteriorVector<S>> out;
  if constexpr (std::same_as<S, BoolValue>) {
    (void)samples;
    (void)seed;
    const int n = w.ground().size();
    if (n > 20) throw DomainError("Boolean image enumeration supports at most 20 elements");
    for (Mask v_mask = 0; v_mask < (Mask{1} << n); ++v_mask) {
      ExteriorVector<S> v(w.ground(), 1);
      for (Mask x = v_mask; x != 0; x &= x - 1) v.set(x & (~x + 1), S::one());
      if (contains_point(w, v)) out.push_back(a.apply(v));
    }
  } else {
    std::vector<Cocircuit<S>> gens = cocircuits(w);
    for (const auto& c : gens) out.push_back(a.apply(c.point));
    std::mt19937_64 rng(seed);
    auto rand_int = [&](long lo, long hi) {
      return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    for (int s = 0; s < samples && !gens.empty(); ++s) {
      ExteriorVector<S> v(w.ground(), 1);
      bool nonzero = false;
      for (const auto& c : gens) {
        if (rand_int(0, 2) == 0) continue;  // drop this generator
        v = add(v, scalar_mul(S(Rational(rand_int(-5, 5))), c.point));
        nonzero = true;
      }
      if (!nonzero) v = gens.front().point;
      out.push_back(a.apply(v));
    }
  }
  return out;
}

}  // namespace troplin

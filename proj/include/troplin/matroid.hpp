#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "troplin/exterior.hpp"
#include "troplin/ground_set.hpp"

namespace troplin {

// A matroid given by its set of bases (bitmasks over the ground set, all of
// equal cardinality). Construction checks the symmetric exchange axiom.
// All derived notions (rank, closure, minors, flats) are computed from the
// basis list on demand; ground sets stay at desk scale.
class Matroid {
 public:
  Matroid(GroundSet ground, std::vector<Mask> bases);

  // Exchange check without constructing; used by catalog enumeration.
  static bool is_basis_family(int ground_size, const std::vector<Mask>& bases);

  static Matroid rank_zero(GroundSet ground) { return Matroid(std::move(ground), {Mask{0}}); }
  static Matroid free_matroid(GroundSet ground) {
    Mask full = ground.full_mask();
    return Matroid(std::move(ground), {full});
  }
  static Matroid uniform(GroundSet ground, int r) {
    std::vector<Mask> bases = subsets_of_size(ground.full_mask(), r);
    return Matroid(std::move(ground), std::move(bases));
  }

  const GroundSet& ground() const { return ground_; }
  const std::vector<Mask>& bases() const { return bases_; }
  int rank() const { return popcount(bases_.front()); }

  int rank_of(Mask x) const;
  bool is_independent(Mask x) const { return rank_of(x) == popcount(x); }
  Mask closure(Mask x) const;
  bool is_basis(Mask x) const;
  // Loops are elements in no basis.
  Mask loops() const;

  bool operator==(const Matroid& o) const { return ground_ == o.ground_ && bases_ == o.bases_; }

 private:
  GroundSet ground_;
  std::vector<Mask> bases_;  // sorted ascending
};

// A bipartite graph on E ⊔ F stored as, for each right vertex, the mask of
// its left neighbours. Its incidence matrix is the Boolean F × E matrix.
class BipartiteGraph {
 public:
  BipartiteGraph(GroundSet left, GroundSet right);

  const GroundSet& left() const { return left_; }
  const GroundSet& right() const { return right_; }

  void add_edge(int l, int r);
  bool has_edge(int l, int r) const;
  Mask left_neighbors(int r) const { return adj_[static_cast<std::size_t>(r)]; }
  // Union of left neighbourhoods over a set of right vertices.
  Mask neighborhood(Mask right_subset) const;

  TropMatrix<BoolValue> incidence_matrix() const;
  static BipartiteGraph from_incidence(const TropMatrix<BoolValue>& a);

  bool operator==(const BipartiteGraph& o) const {
    return left_ == o.left_ && right_ == o.right_ && adj_ == o.adj_;
  }

 private:
  GroundSet left_, right_;
  std::vector<Mask> adj_;
};

// Standard minors. Deleting or contracting everything leaves the rank-0
// matroid on the empty ground set.
Matroid delete_elements(const Matroid& m, Mask f);
Matroid contract(const Matroid& m, Mask f);

// The matroid on F whose independent sets are the J ⊆ F that match into an
// independent set of M through the graph. Matchability is decided by the
// Rado rank condition: every J' ⊆ J must satisfy rank(N(J')) >= |J'|.
Matroid induced_matroid(const Matroid& m, const BipartiteGraph& g);

// Direct sum on the disjoint union of (suffixed copies of) the grounds.
Matroid direct_sum(const Matroid& a, const Matroid& b,
                   std::string_view suffix_a = "'", std::string_view suffix_b = "''");

// Union of two matroids on the same ground set, realized as the induced
// matroid of the direct sum through the two-copies graph.
Matroid matroid_union(const Matroid& a, const Matroid& b);

// Extension by a new element p placed freely on the flat spanned by f:
// independent sets are I and I ∪ p for cl(I) ⊉ cl(f).
Matroid principal_extension(const Matroid& m, Mask f, const std::string& new_label);

// All flats that are unions of circuits, with their ranks, ascending by mask.
std::vector<std::pair<Mask, int>> cyclic_flats(const Matroid& m);

// True iff for every k the number of rank-k cyclic flats is at most
// binomial(rank, k); failure certifies non-transversality.
bool brylawski_bound_check(const Matroid& m);

// Searches for a transversal presentation with rank-many sets, each the
// complement of a cyclic flat (every transversal matroid has a maximal
// presentation of this shape). Returns the presentation as a bipartite
// graph with right vertices "s1".."sr", or nullopt if none exists.
std::optional<BipartiteGraph> is_transversal(const Matroid& m);

// The transversal matroid of a set system (bases of the induced matroid of
// the free matroid); exposed for the presentation search and tests.
Matroid transversal_matroid(const GroundSet& ground, const std::vector<Mask>& sets);

std::uint64_t binomial(int n, int k);

}  // namespace troplin

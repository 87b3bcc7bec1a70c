#include "troplin/matroid.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace troplin {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t out = 1;
  for (int i = 0; i < k; ++i) out = out * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  return out;
}

Matroid::Matroid(GroundSet ground, std::vector<Mask> bases)
    : ground_(std::move(ground)), bases_(std::move(bases)) {
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  for (Mask b : bases_)
    if ((b & ~ground_.full_mask()) != 0) throw DomainError("basis not contained in ground set");
  if (!is_basis_family(ground_.size(), bases_))
    throw DomainError("basis family violates the exchange axiom");
}

bool Matroid::is_basis_family(int ground_size, const std::vector<Mask>& bases) {
  if (bases.empty()) return false;
  const int r = popcount(bases.front());
  if (r > ground_size) return false;
  for (Mask b : bases)
    if (popcount(b) != r) return false;
  // Symmetric exchange: for bases I, J and i in I-J there is j in J-I with
  // I-i+j and J-j+i both bases.
  std::set<Mask> index(bases.begin(), bases.end());
  for (Mask i_base : bases) {
    for (Mask j_base : bases) {
      for (Mask x = i_base & ~j_base; x != 0; x &= x - 1) {
        const Mask i_bit = x & (~x + 1);
        bool found = false;
        for (Mask y = j_base & ~i_base; y != 0 && !found; y &= y - 1) {
          const Mask j_bit = y & (~y + 1);
          if (index.count((i_base & ~i_bit) | j_bit) && index.count((j_base & ~j_bit) | i_bit))
            found = true;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

int Matroid::rank_of(Mask x) const {
  int best = 0;
  for (Mask b : bases_) best = std::max(best, popcount(b & x));
  return best;
}

Mask Matroid::closure(Mask x) const {
  const int r = rank_of(x);
  Mask out = x;
  for (Mask rest = ground_.full_mask() & ~x; rest != 0; rest &= rest - 1) {
    const Mask bit = rest & (~rest + 1);
    if (rank_of(x | bit) == r) out |= bit;
  }
  return out;
}

bool Matroid::is_basis(Mask x) const {
  return std::binary_search(bases_.begin(), bases_.end(), x);
}

Mask Matroid::loops() const {
  Mask in_some_basis = 0;
  for (Mask b : bases_) in_some_basis |= b;
  return ground_.full_mask() & ~in_some_basis;
}

BipartiteGraph::BipartiteGraph(GroundSet left, GroundSet right)
    : left_(std::move(left)),
      right_(std::move(right)),
      adj_(static_cast<std::size_t>(right_.size()), Mask{0}) {}

void BipartiteGraph::add_edge(int l, int r) {
  if (l < 0 || l >= left_.size() || r < 0 || r >= right_.size())
    throw DomainError("edge endpoint out of range");
  adj_[static_cast<std::size_t>(r)] |= Mask{1} << l;
}

bool BipartiteGraph::has_edge(int l, int r) const {
  return (adj_[static_cast<std::size_t>(r)] >> l) & 1;
}

Mask BipartiteGraph::neighborhood(Mask right_subset) const {
  Mask out = 0;
  for (Mask x = right_subset; x != 0; x &= x - 1) out |= adj_[static_cast<std::size_t>(std::countr_zero(x))];
  return out;
}

TropMatrix<BoolValue> BipartiteGraph::incidence_matrix() const {
  TropMatrix<BoolValue> a(right_, left_);
  for (int r = 0; r < right_.size(); ++r)
    for (int l = 0; l < left_.size(); ++l)
      if (has_edge(l, r)) a.set(r, l, BoolValue::one());
  return a;
}

BipartiteGraph BipartiteGraph::from_incidence(const TropMatrix<BoolValue>& a) {
  BipartiteGraph g(a.cols(), a.rows());
  for (int r = 0; r < a.rows().size(); ++r)
    for (int c = 0; c < a.cols().size(); ++c)
      if (!a.at(r, c).is_zero()) g.add_edge(c, r);
  return g;
}

namespace {

// Collapses the surviving labels of `keep` into a fresh ground set and
// re-indexes masks accordingly.
Mask compress_mask(Mask m, Mask keep) {
  Mask out = 0;
  int shift = 0;
  for (Mask x = keep; x != 0; x &= x - 1) {
    const Mask bit = x & (~x + 1);
    if (m & bit) out |= Mask{1} << shift;
    ++shift;
  }
  return out;
}

}  // namespace

Matroid delete_elements(const Matroid& m, Mask f) {
  const Mask keep = m.ground().full_mask() & ~f;
  const int r = m.rank_of(keep);
  std::vector<Mask> bases;
  for_each_subset_of_size(keep, r, [&](Mask x) {
    if (m.is_independent(x)) bases.push_back(compress_mask(x, keep));
  });
  return Matroid(m.ground().restrict(keep), std::move(bases));
}

Matroid contract(const Matroid& m, Mask f) {
  const Mask keep = m.ground().full_mask() & ~f;
  // A fixed maximal independent subset of f; I is independent in M/f iff
  // I ∪ b_f is independent in M.
  Mask b_f = 0;
  for (Mask x = f; x != 0; x &= x - 1) {
    const Mask bit = x & (~x + 1);
    if (m.rank_of(b_f | bit) > popcount(b_f)) b_f |= bit;
  }
  const int r = m.rank() - popcount(b_f);
  std::vector<Mask> bases;
  for_each_subset_of_size(keep, r, [&](Mask x) {
    if (m.is_independent(x | b_f)) bases.push_back(compress_mask(x, keep));
  });
  return Matroid(m.ground().restrict(keep), std::move(bases));
}

Matroid induced_matroid(const Matroid& m, const BipartiteGraph& g) {
  if (!(g.left() == m.ground())) throw DomainError("graph left side must match the matroid ground set");
  const Mask full_right = g.right().full_mask();
  const int max_rank = std::min(m.rank(), g.right().size());
  // Rado: J matches into an independent set iff rank(N(J')) >= |J'| for all
  // J' ⊆ J.
  auto independent = [&](Mask j) {
    bool ok = true;
    for_each_submask(j, [&](Mask sub) {
      if (ok && m.rank_of(g.neighborhood(sub)) < popcount(sub)) ok = false;
    });
    return ok;
  };
  for (int r = max_rank; r >= 0; --r) {
    std::vector<Mask> bases;
    for_each_subset_of_size(full_right, r, [&](Mask j) {
      if (independent(j)) bases.push_back(j);
    });
    if (!bases.empty()) return Matroid(g.right(), std::move(bases));
  }
  return Matroid::rank_zero(g.right());
}

Matroid direct_sum(const Matroid& a, const Matroid& b,
                   std::string_view suffix_a, std::string_view suffix_b) {
  GroundSet ground = a.ground().suffixed(suffix_a).disjoint_union(b.ground().suffixed(suffix_b));
  const int na = a.ground().size();
  std::vector<Mask> bases;
  bases.reserve(a.bases().size() * b.bases().size());
  for (Mask ba : a.bases())
    for (Mask bb : b.bases()) bases.push_back(ba | (bb << na));
  return Matroid(std::move(ground), std::move(bases));
}

Matroid matroid_union(const Matroid& a, const Matroid& b) {
  if (!(a.ground() == b.ground())) throw DomainError("matroid union needs a common ground set");
  Matroid sum = direct_sum(a, b);
  const int n = a.ground().size();
  BipartiteGraph two_copies(sum.ground(), a.ground());
  for (int i = 0; i < n; ++i) {
    two_copies.add_edge(i, i);
    two_copies.add_edge(i + n, i);
  }
  return induced_matroid(sum, two_copies);
}

Matroid principal_extension(const Matroid& m, Mask f, const std::string& new_label) {
  if (m.ground().contains(new_label)) throw DomainError("extension label already in ground set");
  GroundSet ground = m.ground().disjoint_union(GroundSet({new_label}));
  const Mask cl_f = m.closure(f);
  const Mask p_bit = Mask{1} << m.ground().size();
  const int r = m.rank();
  std::vector<Mask> bases(m.bases());
  for_each_subset_of_size(m.ground().full_mask(), r - 1, [&](Mask i) {
    if (m.is_independent(i) && (cl_f & ~m.closure(i)) != 0) bases.push_back(i | p_bit);
  });
  return Matroid(std::move(ground), std::move(bases));
}

std::vector<std::pair<Mask, int>> cyclic_flats(const Matroid& m) {
  std::vector<std::pair<Mask, int>> out;
  const Mask full = m.ground().full_mask();
  for (Mask x = 0;; ++x) {
    if (m.closure(x) == x) {
      // x is cyclic iff the restriction to x has no coloop, i.e. removing
      // any single element does not drop the rank.
      const int r = m.rank_of(x);
      bool cyclic = true;
      for (Mask y = x; y != 0 && cyclic; y &= y - 1) {
        const Mask bit = y & (~y + 1);
        if (m.rank_of(x & ~bit) < r) cyclic = false;
      }
      if (cyclic) out.emplace_back(x, r);
    }
    if (x == full) break;
  }
  return out;
}

bool brylawski_bound_check(const Matroid& m) {
  std::map<int, std::uint64_t> count;
  for (const auto& [flat, r] : cyclic_flats(m)) {
    (void)flat;
    ++count[r];
  }
  for (const auto& [r, c] : count)
    if (c > binomial(m.rank(), r)) return false;
  return true;
}

Matroid transversal_matroid(const GroundSet& ground, const std::vector<Mask>& sets) {
  // Partial transversals are the matchable subsets of the ground set, so
  // the ground set is the right side of the induction.
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < sets.size(); ++i) labels.push_back("s" + std::to_string(i + 1));
  GroundSet set_vertices(std::move(labels));
  BipartiteGraph g(set_vertices, ground);
  for (std::size_t l = 0; l < sets.size(); ++l)
    for (Mask x = sets[l]; x != 0; x &= x - 1) g.add_edge(static_cast<int>(l), std::countr_zero(x));
  if (sets.empty()) return Matroid::rank_zero(ground);
  return induced_matroid(Matroid::free_matroid(set_vertices), g);
}

std::optional<BipartiteGraph> is_transversal(const Matroid& m) {
  if (m.ground().size() > 8) throw DomainError("transversal search supports at most 8 elements");
  const int r = m.rank();
  if (r == 0) return BipartiteGraph(m.ground(), GroundSet());  // empty presentation
  const Mask full = m.ground().full_mask();
  std::vector<Mask> candidates;
  for (const auto& [flat, rank] : cyclic_flats(m)) {
    (void)rank;
    candidates.push_back(full & ~flat);
  }
  std::sort(candidates.begin(), candidates.end());
  // Multisets of r candidate sets, lexicographically by candidate index.
  std::vector<std::size_t> pick(static_cast<std::size_t>(r), 0);
  std::vector<Mask> sets(static_cast<std::size_t>(r));
  while (true) {
    for (std::size_t i = 0; i < pick.size(); ++i) sets[i] = candidates[pick[i]];
    if (transversal_matroid(m.ground(), sets) == m) {
      std::vector<std::string> labels;
      for (int i = 0; i < r; ++i) labels.push_back("s" + std::to_string(i + 1));
      BipartiteGraph g(m.ground(), GroundSet(std::move(labels)));
      for (int i = 0; i < r; ++i)
        for (Mask x = sets[static_cast<std::size_t>(i)]; x != 0; x &= x - 1)
          g.add_edge(std::countr_zero(x), i);
      return g;
    }
    // next multiset (non-decreasing index tuples)
    int pos = r - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] + 1 == candidates.size()) --pos;
    if (pos < 0) return std::nullopt;
    const std::size_t next = pick[static_cast<std::size_t>(pos)] + 1;
    for (std::size_t i = static_cast<std::size_t>(pos); i < pick.size(); ++i) pick[i] = next;
  }
}

}  // namespace troplin

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "troplin/exterior.hpp"
#include "troplin/matroid.hpp"

namespace troplin {

// Helpers for the bend relations: a family of terms is balanced when
// dropping any single term leaves the idempotent sum unchanged, i.e. the
// maximum is attained at least twice or every term is zero.
template <Semifield S>
bool bend_balanced(const std::vector<S>& terms) {
  S max = S::zero();
  for (const S& t : terms) max = max + t;
  if (max.is_zero()) return true;
  int hits = 0;
  for (const S& t : terms)
    if (t == max && ++hits >= 2) return true;
  return false;
}

// Index of the unique maximal term of an unbalanced family.
template <Semifield S>
int unique_max_index(const std::vector<S>& terms) {
  S max = S::zero();
  for (const S& t : terms) max = max + t;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i] == max) return static_cast<int>(i);
  return -1;
}

struct PluckerViolation {
  Mask j_set;   // J, size d+1
  Mask k_set;   // K, size d-1
  int j;        // the element of J-K whose term is the unique maximum
  std::string message;
};

template <Semifield S>
class PluckerVector;

template <Semifield S>
struct ValidationResult {
  std::optional<PluckerVector<S>> vector;
  std::optional<PluckerViolation> violation;
  bool ok() const { return vector.has_value(); }
};

// A nonzero grade-d vector satisfying the tropical Plücker relations: for
// every J of size d+1 and K of size d-1 the terms w_{J-i} w_{K+i}, i in
// J-K, are balanced. Coordinates are meaningful up to a global scalar.
//
// Rank 0 (the zero subspace, vector e_∅) and rank |E| (the whole module,
// the top form) are both legal.
template <Semifield S>
class PluckerVector {
 public:
  static ValidationResult<S> validate(const ExteriorVector<S>& u) {
    if (u.is_zero())
      return {std::nullopt,
              PluckerViolation{0, 0, -1, "the zero vector is not a Plücker vector"}};
    const Mask full = u.ground().full_mask();
    const int d = u.grade();
    ValidationResult<S> result;
    std::optional<PluckerViolation> violation;
    std::vector<Mask> j_sets = subsets_of_size(full, d + 1);
    std::vector<Mask> k_sets = subsets_of_size(full, d - 1);
    for (Mask j_set : j_sets) {
      for (Mask k_set : k_sets) {
        std::vector<S> terms;
        std::vector<int> elements;
        for (Mask x = j_set & ~k_set; x != 0; x &= x - 1) {
          const int i = std::countr_zero(x);
          const Mask bit = Mask{1} << i;
          terms.push_back(u.at(j_set & ~bit) * u.at(k_set | bit));
          elements.push_back(i);
        }
        if (!bend_balanced(terms)) {
          const int j = elements[static_cast<std::size_t>(unique_max_index(terms))];
          return {std::nullopt,
                  PluckerViolation{j_set, k_set, j,
                                   "tropical Plücker relation violated at (J=" +
                                       u.ground().subset_key(j_set) +
                                       ", K=" + u.ground().subset_key(k_set) +
                                       ", j=" + u.ground().label(j) + ")"}};
        }
      }
    }
    result.vector = PluckerVector(u, Unchecked{});
    return result;
  }

  // Validates and throws DomainError on failure.
  static PluckerVector checked(const ExteriorVector<S>& u) {
    ValidationResult<S> r = validate(u);
    if (!r.ok()) throw DomainError(r.violation->message);
    return *std::move(r.vector);
  }

  // For vectors whose validity is guaranteed by construction (wedge, star
  // and dot of Plücker vectors, extensions, images). Skips the relation
  // check, which is prohibitive on large intermediate ground sets.
  static PluckerVector unchecked(ExteriorVector<S> u) {
    if (u.is_zero()) throw DomainError("the zero vector is not a Plücker vector");
    return PluckerVector(std::move(u), Unchecked{});
  }

  const ExteriorVector<S>& vec() const { return v_; }
  int rank() const { return v_.grade(); }
  const GroundSet& ground() const { return v_.ground(); }

 private:
  struct Unchecked {};
  PluckerVector(ExteriorVector<S> v, Unchecked) : v_(std::move(v)) {}

  ExteriorVector<S> v_;
};

// Membership in the tropical hyperplane of the form f: the maximum of
// {f_i v_i} is attained at least twice or is zero.
template <Semifield S>
bool in_hyperplane(const ExteriorVector<S>& v, const ExteriorVector<S>& f) {
  detail::require_same_ground(v, f);
  if (v.grade() != 1 || f.grade() != 1) throw DomainError("in_hyperplane needs grade-1 arguments");
  std::vector<S> terms;
  for (const auto& [i, c] : f.coords()) terms.push_back(c * v.at(i));
  return bend_balanced(terms);
}

// v ∈ L_w: v lies in every defining hyperplane Σ_{i∈J} w_{J-i} x_i over
// J of size d+1.
template <Semifield S>
bool contains_point(const PluckerVector<S>& w, const ExteriorVector<S>& v) {
  if (!(v.ground() == w.ground())) throw DomainError("mismatched ground sets");
  if (v.grade() != 1) throw DomainError("points are grade-1 vectors");
  const int d = w.rank();
  bool inside = true;
  for_each_subset_of_size(w.ground().full_mask(), d + 1, [&](Mask j_set) {
    if (!inside) return;
    std::vector<S> terms;
    for (Mask x = j_set; x != 0; x &= x - 1) {
      const Mask bit = x & (~x + 1);
      terms.push_back(w.vec().at(j_set & ~bit) * v.at(bit));
    }
    if (!bend_balanced(terms)) inside = false;
  });
  return inside;
}

template <Semifield S>
struct Cocircuit {
  Mask k_set;                // the (d-1)-subset K indexing the generator
  ExteriorVector<S> point;   // Σ_{i∉K} w_{K+i} e_i
};

// The valuated cocircuits, which generate L_w as an S-module. Zero points
// are omitted.
template <Semifield S>
std::vector<Cocircuit<S>> cocircuits(const PluckerVector<S>& w) {
  std::vector<Cocircuit<S>> out;
  const Mask full = w.ground().full_mask();
  for_each_subset_of_size(full, w.rank() - 1, [&](Mask k_set) {
    ExteriorVector<S> point(w.ground(), 1);
    for (Mask x = full & ~k_set; x != 0; x &= x - 1) {
      const Mask bit = x & (~x + 1);
      point.set(bit, w.vec().at(k_set | bit));
    }
    if (!point.is_zero()) out.push_back({k_set, std::move(point)});
  });
  return out;
}

// L_w ⊆ L_z, decided by the tropical incidence relations: for all A of
// size rank(z)+1 and B of size rank(w)-1 the terms z_{A-i} w_{B+i} over
// i in A-B are balanced.
template <Semifield S>
bool is_subspace(const PluckerVector<S>& w, const PluckerVector<S>& z) {
  if (!(w.ground() == z.ground())) throw DomainError("mismatched ground sets");
  const Mask full = w.ground().full_mask();
  bool holds = true;
  for_each_subset_of_size(full, z.rank() + 1, [&](Mask a_set) {
    if (!holds) return;
    for_each_subset_of_size(full, w.rank() - 1, [&](Mask b_set) {
      if (!holds) return;
      std::vector<S> terms;
      for (Mask x = a_set & ~b_set; x != 0; x &= x - 1) {
        const Mask bit = x & (~x + 1);
        terms.push_back(z.vec().at(a_set & ~bit) * w.vec().at(b_set | bit));
      }
      if (!bend_balanced(terms)) holds = false;
    });
  });
  return holds;
}

// The tropical orthogonal dual L_{⋆w}, of rank |E| - d.
template <Semifield S>
PluckerVector<S> dual(const PluckerVector<S>& w) {
  return PluckerVector<S>::unchecked(hodge_star(w.vec()));
}

// Rank of a subset in the underlying matroid, straight from the supports.
template <Semifield S>
int support_rank(const ExteriorVector<S>& u, Mask x) {
  int best = 0;
  for (const auto& [i, c] : u.coords()) {
    (void)c;
    best = std::max(best, popcount(i & x));
  }
  return best;
}

namespace detail {

inline Mask compress_to(Mask m, Mask keep) {
  Mask out = 0;
  int shift = 0;
  for (Mask x = keep; x != 0; x &= x - 1) {
    if (m & (x & (~x + 1))) out |= Mask{1} << shift;
    ++shift;
  }
  return out;
}

// Shared recipe of the minor constructions: find the first J ⊆ search_space
// of size j_size (bitmask order) whose selection z_I = w_{J∪I}, I ⊆ f of
// size d - j_size, is nonzero. Such a J always exists for the ranks used
// by the projection/intersection lemmas.
template <Semifield S>
ExteriorVector<S> select_minor(const PluckerVector<S>& w, Mask f, Mask search_space, int j_size) {
  const GroundSet sub = w.ground().restrict(f);
  const int d = w.rank();
  ExteriorVector<S> result(sub, d - j_size);
  bool found = false;
  for_each_subset_of_size(search_space, j_size, [&](Mask j_mask) {
    if (found) return;
    ExteriorVector<S> z(sub, d - j_size);
    for (const auto& [i, c] : w.vec().coords()) {
      if ((i & ~f) == j_mask) z.set(compress_to(i & f, f), c);
    }
    if (!z.is_zero()) {
      result = std::move(z);
      found = true;
    }
  });
  if (!found) throw DomainError("no admissible index set for the minor construction");
  return result;
}

}  // namespace detail

// Plücker vector of the coordinate projection π_F(L_w), on ground set F.
template <Semifield S>
PluckerVector<S> minor_project(const PluckerVector<S>& w, Mask f) {
  const Mask rest = w.ground().full_mask() & ~f;
  const int j_size = w.rank() - support_rank(w.vec(), f);  // rank of M/F
  return PluckerVector<S>::unchecked(detail::select_minor(w, f, rest, j_size));
}

// Plücker vector of the coordinate-subspace intersection S^F ∩ L_w.
template <Semifield S>
PluckerVector<S> minor_intersect(const PluckerVector<S>& w, Mask f) {
  const Mask rest = w.ground().full_mask() & ~f;
  const int j_size = support_rank(w.vec(), rest);  // rank of M\F
  return PluckerVector<S>::unchecked(detail::select_minor(w, f, rest, j_size));
}

// The matroid of nonzero-coordinate supports (push-forward to the Boolean
// semifield); its exchange axiom is re-validated on construction.
template <Semifield S>
Matroid underlying_matroid(const PluckerVector<S>& w) {
  std::vector<Mask> bases;
  bases.reserve(w.vec().coords().size());
  for (const auto& [i, c] : w.vec().coords()) {
    (void)c;
    bases.push_back(i);
  }
  return Matroid(w.ground(), std::move(bases));
}

template <Semifield S>
bool projectively_equal(const PluckerVector<S>& a, const PluckerVector<S>& b) {
  return projectively_equal(a.vec(), b.vec());
}

inline PluckerVector<BoolValue> push_forward(const PluckerVector<TropValue>& w) {
  return PluckerVector<BoolValue>::unchecked(push_forward(w.vec()));
}

}  // namespace troplin

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "troplin/extension.hpp"
#include "troplin/field_linalg.hpp"
#include "troplin/plucker.hpp"

namespace troplin {

// A linear subspace of the Laurent-polynomial field power, given by a
// spanning-row matrix of full row rank (checked by fraction-free
// elimination on construction).
class FieldSpace {
 public:
  FieldSpace(GroundSet ground, PolyMatrix span_rows);

  const GroundSet& ground() const { return ground_; }
  const PolyMatrix& span() const { return span_; }
  int dim() const { return static_cast<int>(span_.size()); }

 private:
  GroundSet ground_;
  PolyMatrix span_;
};

// A matrix of Laurent polynomials with labeled row/column ground sets.
struct FieldMatrix {
  GroundSet rows, cols;
  PolyMatrix entries;  // |rows| × |cols|
};

// Classical Plücker coordinates: the maximal minors of the spanning matrix,
// keyed by column subsets.
std::map<Mask, LaurentPoly> classical_plucker(const FieldSpace& lambda);

// Coordinate-wise valuation of the classical Plücker coordinates; the
// result is validated against the tropical Plücker relations.
PluckerVector<TropValue> tropicalize_space(const FieldSpace& lambda);

// Random lift Δ with val(Δ) = A entrywise: each finite entry a becomes
// c·t^a with c drawn uniformly from {1..N}, N = binomial(|E|+|F|, d) + 1
// (so the coefficient pool is larger than the number of graph coordinates).
// Requires integer exponents; deterministic under the seed.
FieldMatrix generic_lift(const TropMatrix<TropValue>& a, int rank_hint, std::uint64_t seed);

// Eq. of the classical graph: ⋆_{E⊔F}(⋆_E p ∧ ⋀_j (y_j − Σ_i Δ_{ji} x_i)),
// the Plücker vector (up to scalar) of {(v, Δv) : v ∈ Λ}.
ClassicalVector classical_graph(const FieldSpace& lambda, const FieldMatrix& delta);

// Projection of the classical graph coordinates onto the codomain: the
// first nonzero coordinate selection g_{K ∪ J}, K ⊆ E minimal. Keys are
// masks over F.
std::map<Mask, LaurentPoly> project_classical_graph(const ClassicalVector& g, int domain_size,
                                                    int codomain_size);

struct RealizeOutcome {
  bool success = false;
  int attempts_used = 0;
  std::optional<FieldMatrix> witness;
  PluckerVector<TropValue> target;           // tropical_image(w, A)
  std::optional<PluckerVector<TropValue>> last_tropicalization;
  std::vector<std::string> mismatched_coordinates;  // of the last attempt
};

// Realizability oracle: draws up to `attempts` generic lifts Δ of A,
// computes the classical graph of Δ on Λ, projects to the minors of ΔΛ,
// tropicalizes, and compares projectively against tropical_image(w, A).
// Precondition: trop(Λ) is projectively w.
RealizeOutcome verify_realizable(const PluckerVector<TropValue>& w, const TropMatrix<TropValue>& a,
                                 const FieldSpace& lambda, int attempts, std::uint64_t seed);

// A polynomial over the Laurent-series field in several variables, as an
// exponent-vector → coefficient list. Supports exact evaluation and the
// evaluation of its tropicalization.
class MultiPoly {
 public:
  void add_term(std::vector<int> exponents, LaurentPoly coeff);
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, LaurentPoly>& terms() const { return terms_; }

  LaurentPoly eval(const std::vector<LaurentPoly>& args) const;
  // val(f) evaluated at a point: max over monomials of val(coeff)·a^u.
  TropValue trop_eval(const std::vector<TropValue>& point) const;

 private:
  std::map<std::vector<int>, LaurentPoly> terms_;
};

inline TropValue trop_of_poly(const MultiPoly& f, const std::vector<TropValue>& point) {
  return f.trop_eval(point);
}

}  // namespace troplin

#pragma once

#include <map>
#include <vector>

#include "troplin/ground_set.hpp"
#include "troplin/laurent.hpp"

namespace troplin {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// Fraction-free (Bareiss) elimination; exact over the polynomial ring.
int poly_matrix_rank(PolyMatrix a);
LaurentPoly poly_det(PolyMatrix a);

LaurentPoly poly_minor(const PolyMatrix& a, Mask row_set, Mask col_set);

// All maximal minors of a d × n matrix, keyed by column subset; zero
// minors omitted.
std::map<Mask, LaurentPoly> maximal_minors(const PolyMatrix& rows, int ncols);

// Plücker coordinates of the row space of an arbitrary matrix: the minors
// over the first (bitmask order) row subset of size rank with a nonzero
// maximal minor.
struct RowSpacePlucker {
  int rank;
  Mask row_set;
  std::map<Mask, LaurentPoly> coords;
};
RowSpacePlucker plucker_of_rows(const PolyMatrix& a, int ncols);

// Parity of the shuffle merging the disjoint index sets i and j: the number
// of pairs (a ∈ i, b ∈ j) with b < a. Returns +1 or -1.
int shuffle_sign(Mask i, Mask j);

// Grade-homogeneous element of the classical (signed) exterior algebra on
// n coordinates with Laurent-polynomial coefficients. Only what the
// realizability oracle needs: wedge and Hodge star.
class ClassicalVector {
 public:
  ClassicalVector(int n, int grade) : n_(n), grade_(grade) {}

  static ClassicalVector unit(int n) {
    ClassicalVector v(n, 0);
    v.set(0, LaurentPoly::constant(Rational(1)));
    return v;
  }

  int dimension() const { return n_; }
  int grade() const { return grade_; }
  bool is_zero() const { return coords_.empty(); }
  const std::map<Mask, LaurentPoly>& coords() const { return coords_; }

  LaurentPoly at(Mask i) const {
    auto it = coords_.find(i);
    return it == coords_.end() ? LaurentPoly() : it->second;
  }
  void set(Mask i, LaurentPoly v);
  void add_to(Mask i, const LaurentPoly& v);

 private:
  int n_;
  int grade_;
  std::map<Mask, LaurentPoly> coords_;
};

ClassicalVector cwedge(const ClassicalVector& u, const ClassicalVector& v);
ClassicalVector cstar(const ClassicalVector& u);

// Equality of coordinate maps up to one global nonzero field scalar.
bool projectively_equal_classical(const std::map<Mask, LaurentPoly>& u,
                                  const std::map<Mask, LaurentPoly>& v);

}  // namespace troplin

#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "troplin/ground_set.hpp"
#include "troplin/semifield.hpp"

namespace troplin {

// A grade-d element of the tropical Grassmann algebra on S^E: a map from
// d-subsets of the ground set to semifield values. Absent coordinates are
// zero; the zero vector of any grade is representable. There are no signs:
// the algebra is the quotient of the symmetric algebra by e_i^2 ~ 0.
//
// Grade-1 vectors double as points of S^E and, via the Hodge star, as
// linear forms on the dual basis; the type does not distinguish the two.
template <Semifield S>
class ExteriorVector {
 public:
  using value_type = S;

  ExteriorVector() : grade_(0) {}
  // A grade above |E| is legal but forces the zero vector (the graded
  // piece is the zero module); it arises from degenerate wedges and from
  // points/forms on an empty ground set.
  ExteriorVector(GroundSet ground, int grade) : ground_(std::move(ground)), grade_(grade) {
    if (grade_ < 0 || grade_ > 64) throw DomainError("grade out of range");
  }

  // The grade-0 unit e_∅ of the algebra.
  static ExteriorVector unit(GroundSet ground) {
    ExteriorVector v(std::move(ground), 0);
    v.set(0, S::one());
    return v;
  }
  static ExteriorVector basis(GroundSet ground, Mask index) {
    ExteriorVector v(std::move(ground), popcount(index));
    v.set(index, S::one());
    return v;
  }
  static ExteriorVector top_form(GroundSet ground) {
    Mask full = ground.full_mask();
    return basis(std::move(ground), full);
  }

  const GroundSet& ground() const { return ground_; }
  int grade() const { return grade_; }
  bool is_zero() const { return coords_.empty(); }
  const std::map<Mask, S>& coords() const { return coords_; }

  S at(Mask index) const {
    auto it = coords_.find(index);
    return it == coords_.end() ? S::zero() : it->second;
  }

  void set(Mask index, S value) {
    check_index(index);
    if (value.is_zero())
      coords_.erase(index);
    else
      coords_.insert_or_assign(index, std::move(value));
  }

  // coords[index] += value in the semifield.
  void add_to(Mask index, const S& value) {
    if (value.is_zero()) return;
    check_index(index);
    auto [it, inserted] = coords_.try_emplace(index, value);
    if (!inserted) it->second = it->second + value;
  }

  // First nonzero coordinate in bitmask order; vector must be nonzero.
  std::pair<Mask, S> leading() const {
    if (coords_.empty()) throw DomainError("zero vector has no leading coordinate");
    return *coords_.begin();
  }

  bool operator==(const ExteriorVector& o) const {
    return ground_ == o.ground_ && grade_ == o.grade_ && coords_ == o.coords_;
  }

 private:
  void check_index(Mask index) const {
    if (popcount(index) != grade_ || (index & ~ground_.full_mask()) != 0)
      throw DomainError("coordinate index does not match grade/ground set");
  }

  GroundSet ground_;
  int grade_;
  std::map<Mask, S> coords_;
};

namespace detail {
template <Semifield S>
void require_same_ground(const ExteriorVector<S>& a, const ExteriorVector<S>& b) {
  if (!(a.ground() == b.ground())) throw DomainError("mismatched ground sets");
}
}  // namespace detail

// Coordinate-wise sum (the module addition of S^E restricted to one grade).
template <Semifield S>
ExteriorVector<S> add(const ExteriorVector<S>& a, const ExteriorVector<S>& b) {
  detail::require_same_ground(a, b);
  if (a.grade() != b.grade()) throw DomainError("cannot add vectors of different grade");
  ExteriorVector<S> out = a;
  for (const auto& [i, v] : b.coords()) out.add_to(i, v);
  return out;
}

template <Semifield S>
ExteriorVector<S> scalar_mul(const S& c, const ExteriorVector<S>& a) {
  ExteriorVector<S> out(a.ground(), a.grade());
  if (c.is_zero()) return out;
  for (const auto& [i, v] : a.coords()) out.set(i, c * v);
  return out;
}

// (u ∧ v)_K = Σ_{I ⊔ J = K} u_I v_J. Commutative and associative; the
// result has grade d + d' (the zero vector of grade |E| if d + d' > |E|).
template <Semifield S>
ExteriorVector<S> wedge(const ExteriorVector<S>& u, const ExteriorVector<S>& v) {
  detail::require_same_ground(u, v);
  const int n = u.ground().size();
  const int g = u.grade() + v.grade();
  ExteriorVector<S> out(u.ground(), std::min(g, n));
  if (g > n) return out;
  for (const auto& [i, cu] : u.coords())
    for (const auto& [j, cv] : v.coords())
      if ((i & j) == 0) out.add_to(i | j, cu * cv);
  return out;
}

// Complementation e_I ↦ x_{E−I}; an involution on coordinates.
template <Semifield S>
ExteriorVector<S> hodge_star(const ExteriorVector<S>& u) {
  const Mask full = u.ground().full_mask();
  ExteriorVector<S> out(u.ground(), u.ground().size() - u.grade());
  for (const auto& [i, c] : u.coords()) out.set(full & ~i, c);
  return out;
}

// u · v = ⋆(⋆u ∧ ⋆v), of grade d + d' − |E| (zero vector of grade 0 when
// d + d' < |E|).
template <Semifield S>
ExteriorVector<S> dot(const ExteriorVector<S>& u, const ExteriorVector<S>& v) {
  return hodge_star(wedge(hodge_star(u), hodge_star(v)));
}

// f(v) = Σ_i f_i v_i for a grade-1 form f and grade-1 point v.
template <Semifield S>
S evaluate_form(const ExteriorVector<S>& f, const ExteriorVector<S>& v) {
  detail::require_same_ground(f, v);
  if (f.grade() != 1 || v.grade() != 1) throw DomainError("evaluate_form needs grade-1 arguments");
  S acc = S::zero();
  for (const auto& [i, c] : f.coords()) acc = acc + c * v.at(i);
  return acc;
}

// Scales so the first nonzero coordinate (bitmask order) becomes one.
template <Semifield S>
ExteriorVector<S> normalize_projective(const ExteriorVector<S>& u) {
  if (u.is_zero()) return u;
  return scalar_mul(u.leading().second.inv(), u);
}

// Equality up to a global nonzero scalar; two zero vectors are equal.
template <Semifield S>
bool projectively_equal(const ExteriorVector<S>& u, const ExteriorVector<S>& v) {
  if (!(u.ground() == v.ground()) || u.grade() != v.grade()) return false;
  if (u.is_zero() || v.is_zero()) return u.is_zero() && v.is_zero();
  return normalize_projective(u) == normalize_projective(v);
}

template <Semifield S>
ExteriorVector<S> relabel(const ExteriorVector<S>& u, GroundSet ground) {
  if (ground.size() != u.ground().size()) throw DomainError("relabel needs a ground set of equal size");
  ExteriorVector<S> out(std::move(ground), u.grade());
  for (const auto& [i, c] : u.coords()) out.set(i, c);
  return out;
}

// Re-indexes u onto a larger ground set; old element i maps to position
// offset + i. Used to lift vectors on E into E ⊔ F.
template <Semifield S>
ExteriorVector<S> embed(const ExteriorVector<S>& u, GroundSet larger, int offset) {
  if (offset < 0 || offset + u.ground().size() > larger.size())
    throw DomainError("embedding does not fit in the larger ground set");
  ExteriorVector<S> out(std::move(larger), u.grade());
  for (const auto& [i, c] : u.coords()) out.set(i << offset, c);
  return out;
}

inline ExteriorVector<BoolValue> push_forward(const ExteriorVector<TropValue>& u) {
  ExteriorVector<BoolValue> out(u.ground(), u.grade());
  for (const auto& [i, c] : u.coords()) out.set(i, push_forward(c));
  return out;
}

// An F × E matrix over the semifield; rows index the codomain, columns the
// domain. Row and column labels are full ground sets so that graphs on
// E ⊔ F are unambiguous.
template <Semifield S>
class TropMatrix {
 public:
  using value_type = S;

  TropMatrix(GroundSet rows, GroundSet cols)
      : rows_(std::move(rows)),
        cols_(std::move(cols)),
        data_(static_cast<std::size_t>(rows_.size()) * static_cast<std::size_t>(cols_.size())) {}

  static TropMatrix identity(const GroundSet& rows, const GroundSet& cols) {
    if (rows.size() != cols.size()) throw DomainError("identity matrix needs square shape");
    TropMatrix a(rows, cols);
    for (int i = 0; i < rows.size(); ++i) a.set(i, i, S::one());
    return a;
  }

  const GroundSet& rows() const { return rows_; }
  const GroundSet& cols() const { return cols_; }

  const S& at(int r, int c) const { return data_[idx(r, c)]; }
  void set(int r, int c, S v) { data_[idx(r, c)] = std::move(v); }

  // The linear form ρ_r = Σ_i a_{ri} x_i of row r, as a grade-1 vector on
  // the column ground set.
  ExteriorVector<S> row_form(int r) const {
    ExteriorVector<S> f(cols_, 1);
    for (int c = 0; c < cols_.size(); ++c) f.set(Mask{1} << c, at(r, c));
    return f;
  }

  // Matrix-vector product A·v for a grade-1 point v on the columns.
  ExteriorVector<S> apply(const ExteriorVector<S>& v) const {
    if (!(v.ground() == cols_)) throw DomainError("matrix/vector ground set mismatch");
    ExteriorVector<S> out(rows_, 1);
    for (int r = 0; r < rows_.size(); ++r) {
      S acc = S::zero();
      for (const auto& [i, c] : v.coords()) acc = acc + at(r, std::countr_zero(i)) * c;
      out.set(Mask{1} << r, acc);
    }
    return out;
  }

  bool operator==(const TropMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t idx(int r, int c) const {
    if (r < 0 || r >= rows_.size() || c < 0 || c >= cols_.size())
      throw DomainError("matrix index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_.size()) +
           static_cast<std::size_t>(c);
  }

  GroundSet rows_, cols_;
  std::vector<S> data_;
};

inline TropMatrix<BoolValue> push_forward(const TropMatrix<TropValue>& a) {
  TropMatrix<BoolValue> out(a.rows(), a.cols());
  for (int r = 0; r < a.rows().size(); ++r)
    for (int c = 0; c < a.cols().size(); ++c) out.set(r, c, push_forward(a.at(r, c)));
  return out;
}

namespace detail {
template <Semifield S>
S tropdet_expand(const TropMatrix<S>& a, std::vector<int>& rows, Mask cols, std::size_t level) {
  if (level == rows.size()) return S::one();
  S acc = S::zero();
  const int r = rows[level];
  for (Mask x = cols; x != 0; x &= x - 1) {
    const int c = std::countr_zero(x);
    const S& e = a.at(r, c);
    if (e.is_zero()) continue;
    acc = acc + e * tropdet_expand(a, rows, cols & ~(Mask{1} << c), level + 1);
  }
  return acc;
}
}  // namespace detail

// The tropical minor Σ_{σ: rows→cols} Π_r a_{r,σ(r)} (a permanent in the
// semifield; no signs). Small minors expand by permutations; larger ones
// fall back to the coefficient of the wedge of the selected row forms.
template <Semifield S>
S tropdet(const TropMatrix<S>& a, Mask row_mask, Mask col_mask) {
  const int k = popcount(row_mask);
  if (k != popcount(col_mask)) throw DomainError("tropdet needs |rows| == |cols|");
  if (k == 0) return S::one();
  if (k <= 8) {
    std::vector<int> rows;
    for (Mask x = row_mask; x != 0; x &= x - 1) rows.push_back(std::countr_zero(x));
    return detail::tropdet_expand(a, rows, col_mask, 0);
  }
  ExteriorVector<S> acc = ExteriorVector<S>::unit(a.cols());
  for (Mask x = row_mask; x != 0; x &= x - 1) {
    ExteriorVector<S> f(a.cols(), 1);
    for (Mask y = col_mask; y != 0; y &= y - 1) {
      const int c = std::countr_zero(y);
      f.set(Mask{1} << c, a.at(std::countr_zero(x), c));
    }
    acc = wedge(acc, f);
  }
  return acc.at(col_mask);
}

}  // namespace troplin

#include "troplin/field_linalg.hpp"

#include <algorithm>
#include <utility>

namespace troplin {

namespace {

// One pass of fraction-free elimination. Returns the pivot count; when
// `det_sign` is non-null the matrix must be square and the signed last
// pivot is the determinant.
int bareiss(PolyMatrix& a, int* det_sign) {
  if (a.empty()) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  LaurentPoly prev = LaurentPoly::constant(Rational(1));
  int sign = 1;
  int pr = 0;
  for (int pc = 0; pc < cols && pr < rows; ++pc) {
    int sel = -1;
    for (int r = pr; r < rows; ++r) {
      if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)].is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pr) {
      std::swap(a[static_cast<std::size_t>(sel)], a[static_cast<std::size_t>(pr)]);
      sign = -sign;
    }
    auto& pivot_row = a[static_cast<std::size_t>(pr)];
    for (int r = pr + 1; r < rows; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      for (int c = pc + 1; c < cols; ++c) {
        row[static_cast<std::size_t>(c)] = LaurentPoly::div_exact(
            pivot_row[static_cast<std::size_t>(pc)] * row[static_cast<std::size_t>(c)] -
                row[static_cast<std::size_t>(pc)] * pivot_row[static_cast<std::size_t>(c)],
            prev);
      }
      row[static_cast<std::size_t>(pc)] = LaurentPoly();
    }
    prev = pivot_row[static_cast<std::size_t>(pc)];
    ++pr;
  }
  if (det_sign) *det_sign = sign;
  return pr;
}

}  // namespace

int poly_matrix_rank(PolyMatrix a) { return bareiss(a, nullptr); }

LaurentPoly poly_det(PolyMatrix a) {
  if (a.empty()) return LaurentPoly::constant(Rational(1));
  const std::size_t n = a.size();
  if (a[0].size() != n) throw DomainError("determinant of a non-square matrix");
  int sign = 0;
  const int pivots = bareiss(a, &sign);
  if (pivots < static_cast<int>(n)) return LaurentPoly();
  LaurentPoly d = a[n - 1][n - 1];
  return sign > 0 ? d : -d;
}

LaurentPoly poly_minor(const PolyMatrix& a, Mask row_set, Mask col_set) {
  if (popcount(row_set) != popcount(col_set)) throw DomainError("minor needs |rows| == |cols|");
  PolyMatrix sub;
  for (Mask x = row_set; x != 0; x &= x - 1) {
    const auto& row = a[static_cast<std::size_t>(std::countr_zero(x))];
    std::vector<LaurentPoly> out;
    for (Mask y = col_set; y != 0; y &= y - 1)
      out.push_back(row[static_cast<std::size_t>(std::countr_zero(y))]);
    sub.push_back(std::move(out));
  }
  return poly_det(std::move(sub));
}

std::map<Mask, LaurentPoly> maximal_minors(const PolyMatrix& rows, int ncols) {
  const int d = static_cast<int>(rows.size());
  const Mask all_rows = d == 0 ? 0 : (Mask{1} << d) - 1;
  const Mask all_cols = ncols == 0 ? 0 : (Mask{1} << ncols) - 1;
  std::map<Mask, LaurentPoly> out;
  for_each_subset_of_size(all_cols, d, [&](Mask cols) {
    LaurentPoly m = poly_minor(rows, all_rows, cols);
    if (!m.is_zero()) out.emplace(cols, std::move(m));
  });
  return out;
}

RowSpacePlucker plucker_of_rows(const PolyMatrix& a, int ncols) {
  const int nrows = static_cast<int>(a.size());
  const int d = poly_matrix_rank(a);
  const Mask all_rows = nrows == 0 ? 0 : (Mask{1} << nrows) - 1;
  const Mask all_cols = ncols == 0 ? 0 : (Mask{1} << ncols) - 1;
  RowSpacePlucker result{d, 0, {}};
  bool found = false;
  for_each_subset_of_size(all_rows, d, [&](Mask row_set) {
    if (found) return;
    std::map<Mask, LaurentPoly> coords;
    for_each_subset_of_size(all_cols, d, [&](Mask cols) {
      LaurentPoly m = poly_minor(a, row_set, cols);
      if (!m.is_zero()) coords.emplace(cols, std::move(m));
    });
    if (!coords.empty()) {
      result.row_set = row_set;
      result.coords = std::move(coords);
      found = true;
    }
  });
  if (!found && d > 0) throw DomainError("rank/minor disagreement in plucker_of_rows");
  if (d == 0) result.coords.emplace(Mask{0}, LaurentPoly::constant(Rational(1)));
  return result;
}

int shuffle_sign(Mask i, Mask j) {
  int inversions = 0;
  for (Mask y = j; y != 0; y &= y - 1) {
    const int b = std::countr_zero(y);
    inversions += popcount(i >> (b + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

void ClassicalVector::set(Mask i, LaurentPoly v) {
  if (popcount(i) != grade_) throw DomainError("coordinate index does not match grade");
  if (v.is_zero())
    coords_.erase(i);
  else
    coords_.insert_or_assign(i, std::move(v));
}

void ClassicalVector::add_to(Mask i, const LaurentPoly& v) {
  if (v.is_zero()) return;
  if (popcount(i) != grade_) throw DomainError("coordinate index does not match grade");
  auto [it, inserted] = coords_.try_emplace(i, v);
  if (!inserted) {
    it->second = it->second + v;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

ClassicalVector cwedge(const ClassicalVector& u, const ClassicalVector& v) {
  if (u.dimension() != v.dimension()) throw DomainError("cwedge dimension mismatch");
  const int n = u.dimension();
  const int g = u.grade() + v.grade();
  ClassicalVector out(n, std::min(g, n));
  if (g > n) return out;
  for (const auto& [i, cu] : u.coords()) {
    for (const auto& [j, cv] : v.coords()) {
      if ((i & j) != 0) continue;
      LaurentPoly term = cu * cv;
      if (shuffle_sign(i, j) < 0) term = -term;
      out.add_to(i | j, term);
    }
  }
  return out;
}

ClassicalVector cstar(const ClassicalVector& u) {
  const int n = u.dimension();
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  ClassicalVector out(n, n - u.grade());
  for (const auto& [i, c] : u.coords()) {
    const Mask comp = full & ~i;
    LaurentPoly term = c;
    if (shuffle_sign(i, comp) < 0) term = -term;
    out.set(comp, std::move(term));
  }
  return out;
}

bool projectively_equal_classical(const std::map<Mask, LaurentPoly>& u,
                                  const std::map<Mask, LaurentPoly>& v) {
  if (u.empty() || v.empty()) return u.empty() && v.empty();
  if (u.size() != v.size()) return false;
  for (const auto& [i, c] : u) {
    (void)c;
    if (v.find(i) == v.end()) return false;
  }
  const auto& [i0, u0] = *u.begin();
  const LaurentPoly& v0 = v.at(i0);
  for (const auto& [i, ui] : u) {
    if (!(ui * v0 == v.at(i) * u0)) return false;
  }
  return true;
}

}  // namespace troplin

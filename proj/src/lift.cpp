#include "troplin/lift.hpp"

#include <random>

namespace troplin {

FieldSpace::FieldSpace(GroundSet ground, PolyMatrix span_rows)
    : ground_(std::move(ground)), span_(std::move(span_rows)) {
  if (span_.empty()) throw DomainError("a field space needs at least one spanning row");
  for (const auto& row : span_)
    if (static_cast<int>(row.size()) != ground_.size())
      throw DomainError("spanning row length does not match the ground set");
  if (static_cast<int>(span_.size()) > ground_.size())
    throw DomainError("more spanning rows than coordinates");
  if (poly_matrix_rank(span_) != static_cast<int>(span_.size()))
    throw DomainError("spanning rows are not linearly independent");
}

std::map<Mask, LaurentPoly> classical_plucker(const FieldSpace& lambda) {
  return maximal_minors(lambda.span(), lambda.ground().size());
}

PluckerVector<TropValue> tropicalize_space(const FieldSpace& lambda) {
  ExteriorVector<TropValue> v(lambda.ground(), lambda.dim());
  for (const auto& [cols, minor] : classical_plucker(lambda)) v.set(cols, minor.valuation());
  return PluckerVector<TropValue>::checked(v);
}

namespace {

long long integer_exponent(const TropValue& v) {
  const Rational& q = v.finite_value();
  if (boost::multiprecision::denominator(q) != 1)
    throw DomainError("lift requires integer exponents; rescale the input first");
  return static_cast<long long>(boost::multiprecision::numerator(q));
}

}  // namespace

FieldMatrix generic_lift(const TropMatrix<TropValue>& a, int rank_hint, std::uint64_t seed) {
  const int m = a.rows().size();
  const int n = a.cols().size();
  const std::uint64_t pool = binomial(n + m, rank_hint) + 1;
  std::mt19937_64 rng(seed);
  FieldMatrix out{a.rows(), a.cols(), PolyMatrix(static_cast<std::size_t>(m))};
  for (int r = 0; r < m; ++r) {
    out.entries[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
      const TropValue& v = a.at(r, c);
      if (v.is_zero()) continue;
      const Rational coeff(rng() % pool + 1);
      out.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          LaurentPoly::t_power(integer_exponent(v), coeff);
    }
  }
  return out;
}

ClassicalVector classical_graph(const FieldSpace& lambda, const FieldMatrix& delta) {
  const int n = lambda.ground().size();
  const int m = delta.rows.size();
  if (!(delta.cols == lambda.ground()))
    throw DomainError("lift matrix columns must match the space's ground set");
  // ⋆_E p, lifted to E ⊔ F (masks unchanged).
  ClassicalVector p(n, lambda.dim());
  for (const auto& [cols, minor] : classical_plucker(lambda)) p.set(cols, minor);
  ClassicalVector acc(n + m, n - lambda.dim());
  const ClassicalVector starred = cstar(p);
  for (const auto& [i, c] : starred.coords()) acc.set(i, c);
  for (int j = 0; j < m; ++j) {
    ClassicalVector form(n + m, 1);
    form.set(Mask{1} << (n + j), LaurentPoly::constant(Rational(1)));
    for (int i = 0; i < n; ++i) {
      const LaurentPoly& d = delta.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (!d.is_zero()) form.set(Mask{1} << i, -d);
    }
    acc = cwedge(acc, form);
  }
  return cstar(acc);
}

std::map<Mask, LaurentPoly> project_classical_graph(const ClassicalVector& g, int domain_size,
                                                    int codomain_size) {
  const int d = g.grade();
  const Mask e_mask = domain_size == 0 ? 0 : (Mask{1} << domain_size) - 1;
  const Mask f_mask = ((Mask{1} << codomain_size) - 1) << domain_size;
  for (int k = 0; k <= d; ++k) {
    std::map<Mask, LaurentPoly> selection;
    bool found = false;
    for_each_subset_of_size(e_mask, k, [&](Mask k_set) {
      if (found) return;
      std::map<Mask, LaurentPoly> coords;
      for_each_subset_of_size(f_mask, d - k, [&](Mask j_set) {
        LaurentPoly c = g.at(k_set | j_set);
        if (!c.is_zero()) coords.emplace(j_set >> domain_size, std::move(c));
      });
      if (!coords.empty()) {
        selection = std::move(coords);
        found = true;
      }
    });
    if (found) return selection;
  }
  throw DomainError("cannot project the zero graph vector");
}

RealizeOutcome verify_realizable(const PluckerVector<TropValue>& w, const TropMatrix<TropValue>& a,
                                 const FieldSpace& lambda, int attempts, std::uint64_t seed) {
  if (!projectively_equal(tropicalize_space(lambda), w))
    throw DomainError("the field space does not tropicalize to the given Plücker vector");
  RealizeOutcome outcome{false, 0, std::nullopt, tropical_image(w, a), std::nullopt, {}};
  const int n = a.cols().size();
  const int m = a.rows().size();
  for (int attempt = 0; attempt < attempts; ++attempt) {
    outcome.attempts_used = attempt + 1;
    const std::uint64_t attempt_seed = seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(attempt + 1));
    FieldMatrix delta = generic_lift(a, lambda.dim(), attempt_seed);

    // Two independent routes to the Plücker vector of ΔΛ: projecting the
    // classical graph, and the maximal minors of the row span of R·Δᵀ.
    ClassicalVector g = classical_graph(lambda, delta);
    std::map<Mask, LaurentPoly> projected = project_classical_graph(g, n, m);

    PolyMatrix product(static_cast<std::size_t>(lambda.dim()),
                       std::vector<LaurentPoly>(static_cast<std::size_t>(m)));
    for (int r = 0; r < lambda.dim(); ++r)
      for (int f = 0; f < m; ++f) {
        LaurentPoly acc;
        for (int e = 0; e < n; ++e)
          acc = acc + lambda.span()[static_cast<std::size_t>(r)][static_cast<std::size_t>(e)] *
                          delta.entries[static_cast<std::size_t>(f)][static_cast<std::size_t>(e)];
        product[static_cast<std::size_t>(r)][static_cast<std::size_t>(f)] = acc;
      }
    RowSpacePlucker direct = plucker_of_rows(product, m);
    if (!projectively_equal_classical(projected, direct.coords))
      throw DomainError("internal inconsistency: graph projection disagrees with image minors");

    ExteriorVector<TropValue> trop(a.rows(), popcount(projected.begin()->first));
    for (const auto& [j, poly] : projected) trop.set(j, poly.valuation());
    PluckerVector<TropValue> tropicalized = PluckerVector<TropValue>::checked(trop);
    outcome.last_tropicalization = tropicalized;

    if (projectively_equal(tropicalized, outcome.target)) {
      outcome.success = true;
      outcome.witness = std::move(delta);
      return outcome;
    }
    // Record which coordinates disagree after normalization, to separate
    // non-generic draws (few coordinates, retry helps) from systematic bugs.
    outcome.mismatched_coordinates.clear();
    if (tropicalized.rank() != outcome.target.rank()) {
      outcome.mismatched_coordinates.push_back("rank " + std::to_string(tropicalized.rank()) +
                                               " != " + std::to_string(outcome.target.rank()));
    } else {
      ExteriorVector<TropValue> lhs = normalize_projective(tropicalized.vec());
      ExteriorVector<TropValue> rhs = normalize_projective(outcome.target.vec());
      for (const auto& [j, c] : rhs.coords())
        if (!(lhs.at(j) == c)) outcome.mismatched_coordinates.push_back(a.rows().subset_key(j));
      for (const auto& [j, c] : lhs.coords())
        if (rhs.at(j).is_zero()) {
          (void)c;
          outcome.mismatched_coordinates.push_back(a.rows().subset_key(j));
        }
    }
  }
  return outcome;
}

void MultiPoly::add_term(std::vector<int> exponents, LaurentPoly coeff) {
  if (coeff.is_zero()) return;
  for (int e : exponents)
    if (e < 0) throw DomainError("polynomial exponents must be nonnegative");
  auto [it, inserted] = terms_.try_emplace(std::move(exponents), coeff);
  if (!inserted) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly MultiPoly::eval(const std::vector<LaurentPoly>& args) const {
  LaurentPoly acc;
  for (const auto& [exps, coeff] : terms_) {
    if (exps.size() != args.size()) throw DomainError("wrong number of evaluation arguments");
    LaurentPoly term = coeff;
    for (std::size_t i = 0; i < exps.size(); ++i)
      term = term * args[i].pow(static_cast<unsigned>(exps[i]));
    acc = acc + term;
  }
  return acc;
}

TropValue MultiPoly::trop_eval(const std::vector<TropValue>& point) const {
  TropValue acc = TropValue::zero();
  for (const auto& [exps, coeff] : terms_) {
    if (exps.size() != point.size()) throw DomainError("wrong number of evaluation arguments");
    TropValue term = coeff.valuation();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      // a^u in max-plus is u·a.
      if (exps[i] == 0) continue;
      if (point[i].is_zero()) {
        term = TropValue::zero();
        break;
      }
      term = term * TropValue(point[i].finite_value() * exps[i]);
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace troplin

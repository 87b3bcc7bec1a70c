#include "troplin/json_io.hpp"

namespace troplin::io {

namespace {

const json& require_field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name))
    throw ParseError(std::string("missing field \"") + name + "\"");
  return doc.at(name);
}

std::string require_string(const json& v, const char* what) {
  if (!v.is_string()) throw ParseError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

TropValue parse_trop_value(const json& v) {
  try {
    if (v.is_string()) return TropValue::parse(v.get<std::string>());
    if (v.is_number_integer()) return TropValue(Rational(v.get<long long>()));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("max-plus values must be fraction strings or \"-inf\"");
}

BoolValue parse_bool_value(const json& v) {
  if (v.is_number_integer()) {
    const long long x = v.get<long long>();
    if (x == 0 || x == 1) return BoolValue(x == 1);
  }
  throw ParseError("Boolean values must be 0 or 1");
}

json emit_value(const TropValue& v) { return v.str(); }
json emit_value(const BoolValue& v) { return v.is_zero() ? 0 : 1; }

template <Semifield S>
S parse_value(const json& v);
template <>
TropValue parse_value<TropValue>(const json& v) { return parse_trop_value(v); }
template <>
BoolValue parse_value<BoolValue>(const json& v) { return parse_bool_value(v); }

enum class Kind { MaxPlus, Boolean };

Kind parse_kind(const json& doc) {
  const std::string name = require_string(require_field(doc, "semifield"), "semifield");
  if (name == TropValue::name()) return Kind::MaxPlus;
  if (name == BoolValue::name()) return Kind::Boolean;
  throw ParseError("unknown semifield \"" + name + "\"");
}

Mask parse_subset(const GroundSet& ground, const std::string& key) {
  try {
    return ground.parse_subset_key(key);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

template <Semifield S>
ExteriorVector<S> parse_vector_as(const json& doc) {
  GroundSet ground = parse_ground_set(require_field(doc, "ground_set"));
  const json& grade = require_field(doc, "grade");
  if (!grade.is_number_integer()) throw ParseError("grade must be an integer");
  try {
    ExteriorVector<S> v(ground, grade.get<int>());
    const json& coords = require_field(doc, "coords");
    if (!coords.is_object()) throw ParseError("coords must be an object");
    for (const auto& [key, value] : coords.items()) {
      const Mask index = parse_subset(ground, key);
      if (popcount(index) != v.grade())
        throw ParseError("coordinate \"" + key + "\" does not have the declared grade");
      v.set(index, parse_value<S>(value));
    }
    return v;
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

template <Semifield S>
json emit_vector_impl(const ExteriorVector<S>& v) {
  json coords = json::object();
  for (const auto& [i, c] : v.coords()) coords[v.ground().subset_key(i)] = emit_value(c);
  return json{{"semifield", std::string(S::name())},
              {"ground_set", emit_ground_set(v.ground())},
              {"grade", v.grade()},
              {"coords", std::move(coords)}};
}

template <Semifield S>
TropMatrix<S> parse_matrix_as(const json& doc) {
  GroundSet rows = parse_ground_set(require_field(doc, "rows"));
  GroundSet cols = parse_ground_set(require_field(doc, "cols"));
  TropMatrix<S> a(rows, cols);
  const json& entries = require_field(doc, "entries");
  if (!entries.is_object()) throw ParseError("entries must be an object");
  for (const auto& [key, value] : entries.items()) {
    const std::size_t comma = key.find(',');
    if (comma == std::string::npos) throw ParseError("matrix keys must be \"row,col\"");
    try {
      const int r = rows.index(key.substr(0, comma));
      const int c = cols.index(key.substr(comma + 1));
      a.set(r, c, parse_value<S>(value));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  return a;
}

template <Semifield S>
json emit_matrix_impl(const TropMatrix<S>& a) {
  json entries = json::object();
  for (int r = 0; r < a.rows().size(); ++r)
    for (int c = 0; c < a.cols().size(); ++c) {
      const S& v = a.at(r, c);
      if (!v.is_zero()) entries[a.rows().label(r) + "," + a.cols().label(c)] = emit_value(v);
    }
  return json{{"semifield", std::string(S::name())},
              {"rows", emit_ground_set(a.rows())},
              {"cols", emit_ground_set(a.cols())},
              {"entries", std::move(entries)}};
}

}  // namespace

GroundSet parse_ground_set(const json& arr) {
  if (!arr.is_array()) throw ParseError("ground set must be an array of labels");
  std::vector<std::string> labels;
  for (const json& l : arr) labels.push_back(require_string(l, "ground set label"));
  try {
    return GroundSet(std::move(labels));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json emit_ground_set(const GroundSet& g) {
  json arr = json::array();
  for (const std::string& l : g.labels()) arr.push_back(l);
  return arr;
}

AnyVector parse_vector(const json& doc) {
  switch (parse_kind(doc)) {
    case Kind::MaxPlus:
      return parse_vector_as<TropValue>(doc);
    case Kind::Boolean:
      return parse_vector_as<BoolValue>(doc);
  }
  throw ParseError("unreachable");
}

json emit_vector(const ExteriorVector<TropValue>& v) { return emit_vector_impl(v); }
json emit_vector(const ExteriorVector<BoolValue>& v) { return emit_vector_impl(v); }
json emit_vector(const AnyVector& v) {
  return std::visit([](const auto& x) { return emit_vector_impl(x); }, v);
}

AnyMatrix parse_matrix(const json& doc) {
  switch (parse_kind(doc)) {
    case Kind::MaxPlus:
      return parse_matrix_as<TropValue>(doc);
    case Kind::Boolean:
      return parse_matrix_as<BoolValue>(doc);
  }
  throw ParseError("unreachable");
}

json emit_matrix(const TropMatrix<TropValue>& a) { return emit_matrix_impl(a); }
json emit_matrix(const TropMatrix<BoolValue>& a) { return emit_matrix_impl(a); }
json emit_matrix(const AnyMatrix& a) {
  return std::visit([](const auto& x) { return emit_matrix_impl(x); }, a);
}

Matroid parse_matroid(const json& doc) {
  GroundSet ground = parse_ground_set(require_field(doc, "ground_set"));
  const json& bases = require_field(doc, "bases");
  if (!bases.is_array()) throw ParseError("bases must be an array");
  std::vector<Mask> masks;
  for (const json& b : bases) {
    if (!b.is_array()) throw ParseError("each basis must be an array of labels");
    Mask m = 0;
    for (const json& l : b) {
      try {
        m |= Mask{1} << ground.index(require_string(l, "basis label"));
      } catch (const DomainError& e) {
        throw ParseError(e.what());
      }
    }
    masks.push_back(m);
  }
  return Matroid(std::move(ground), std::move(masks));
}

json emit_matroid(const Matroid& m) {
  json bases = json::array();
  for (Mask b : m.bases()) {
    json basis = json::array();
    for (const std::string& l : m.ground().labels_of(b)) basis.push_back(l);
    bases.push_back(std::move(basis));
  }
  return json{{"ground_set", emit_ground_set(m.ground())}, {"bases", std::move(bases)}};
}

BipartiteGraph parse_graph(const json& doc) {
  GroundSet left = parse_ground_set(require_field(doc, "left"));
  GroundSet right = parse_ground_set(require_field(doc, "right"));
  BipartiteGraph g(std::move(left), std::move(right));
  const json& edges = require_field(doc, "edges");
  if (!edges.is_array()) throw ParseError("edges must be an array of [left,right] pairs");
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a [left,right] pair");
    try {
      g.add_edge(g.left().index(require_string(e[0], "edge endpoint")),
                 g.right().index(require_string(e[1], "edge endpoint")));
    } catch (const DomainError& ex) {
      throw ParseError(ex.what());
    }
  }
  return g;
}

json emit_graph(const BipartiteGraph& g) {
  json edges = json::array();
  for (int r = 0; r < g.right().size(); ++r)
    for (int l = 0; l < g.left().size(); ++l)
      if (g.has_edge(l, r)) edges.push_back(json::array({g.left().label(l), g.right().label(r)}));
  return json{{"left", emit_ground_set(g.left())},
              {"right", emit_ground_set(g.right())},
              {"edges", std::move(edges)}};
}

LaurentPoly parse_poly(const json& doc) {
  if (!doc.is_object()) throw ParseError("a Laurent polynomial must be an exponent→coefficient object");
  LaurentPoly p;
  for (const auto& [key, value] : doc.items()) {
    long long exponent = 0;
    try {
      exponent = std::stoll(key);
    } catch (const std::exception&) {
      throw ParseError("exponent key \"" + key + "\" is not an integer");
    }
    try {
      if (value.is_string())
        p.add_term(exponent, rational_from_string(value.get<std::string>()));
      else if (value.is_number_integer())
        p.add_term(exponent, Rational(value.get<long long>()));
      else
        throw ParseError("coefficients must be fraction strings or integers");
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  return p;
}

json emit_poly(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, q] : p.terms()) out[std::to_string(e)] = rational_to_string(q);
  return out;
}

FieldSpace parse_field_space(const json& doc) {
  GroundSet ground = parse_ground_set(require_field(doc, "ground_set"));
  const json& span = require_field(doc, "span");
  if (!span.is_array() || span.empty()) throw ParseError("span must be a nonempty array of rows");
  PolyMatrix rows;
  for (const json& row : span) {
    if (!row.is_array()) throw ParseError("each spanning row must be an array of polynomials");
    std::vector<LaurentPoly> out;
    for (const json& cell : row) out.push_back(parse_poly(cell));
    rows.push_back(std::move(out));
  }
  try {
    return FieldSpace(std::move(ground), std::move(rows));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json emit_field_space(const FieldSpace& s) {
  json span = json::array();
  for (const auto& row : s.span()) {
    json r = json::array();
    for (const LaurentPoly& p : row) r.push_back(emit_poly(p));
    span.push_back(std::move(r));
  }
  return json{{"ground_set", emit_ground_set(s.ground())}, {"span", std::move(span)}};
}

FieldMatrix parse_field_matrix(const json& doc) {
  GroundSet rows = parse_ground_set(require_field(doc, "rows"));
  GroundSet cols = parse_ground_set(require_field(doc, "cols"));
  FieldMatrix m{rows, cols,
                PolyMatrix(static_cast<std::size_t>(rows.size()),
                           std::vector<LaurentPoly>(static_cast<std::size_t>(cols.size())))};
  const json& entries = require_field(doc, "entries");
  if (!entries.is_object()) throw ParseError("entries must be an object");
  for (const auto& [key, value] : entries.items()) {
    const std::size_t comma = key.find(',');
    if (comma == std::string::npos) throw ParseError("matrix keys must be \"row,col\"");
    try {
      const int r = rows.index(key.substr(0, comma));
      const int c = cols.index(key.substr(comma + 1));
      m.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = parse_poly(value);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  return m;
}

json emit_field_matrix(const FieldMatrix& m) {
  json entries = json::object();
  for (int r = 0; r < m.rows.size(); ++r)
    for (int c = 0; c < m.cols.size(); ++c) {
      const LaurentPoly& p = m.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (!p.is_zero()) entries[m.rows.label(r) + "," + m.cols.label(c)] = emit_poly(p);
    }
  return json{{"rows", emit_ground_set(m.rows)},
              {"cols", emit_ground_set(m.cols)},
              {"entries", std::move(entries)}};
}

}  // namespace troplin::io

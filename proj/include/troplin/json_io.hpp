#pragma once

#include <json.hpp>

#include <stdexcept>
#include <variant>

#include "troplin/extension.hpp"
#include "troplin/lift.hpp"
#include "troplin/matroid.hpp"
#include "troplin/plucker.hpp"

namespace troplin::io {

// Insertion-ordered JSON keeps emitted documents in canonical (bitmask /
// row-major) order, so identical inputs produce byte-identical outputs.
using json = nlohmann::ordered_json;

// Structurally invalid input (missing fields, wrong types, bad literals).
// The CLI maps this to exit code 2; DomainError remains exit code 1.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

using AnyVector = std::variant<ExteriorVector<TropValue>, ExteriorVector<BoolValue>>;
using AnyMatrix = std::variant<TropMatrix<TropValue>, TropMatrix<BoolValue>>;

GroundSet parse_ground_set(const json& arr);
json emit_ground_set(const GroundSet& g);

AnyVector parse_vector(const json& doc);
json emit_vector(const ExteriorVector<TropValue>& v);
json emit_vector(const ExteriorVector<BoolValue>& v);
json emit_vector(const AnyVector& v);

AnyMatrix parse_matrix(const json& doc);
json emit_matrix(const TropMatrix<TropValue>& a);
json emit_matrix(const TropMatrix<BoolValue>& a);
json emit_matrix(const AnyMatrix& a);

Matroid parse_matroid(const json& doc);
json emit_matroid(const Matroid& m);

BipartiteGraph parse_graph(const json& doc);
json emit_graph(const BipartiteGraph& g);

LaurentPoly parse_poly(const json& doc);
json emit_poly(const LaurentPoly& p);

FieldSpace parse_field_space(const json& doc);
json emit_field_space(const FieldSpace& s);

FieldMatrix parse_field_matrix(const json& doc);
json emit_field_matrix(const FieldMatrix& m);

}  // namespace troplin::io

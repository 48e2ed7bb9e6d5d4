#pragma once

// JSON interchange. Algebras:
//   {"field":{"kind":"Q"} | {"kind":"Fp","p":5}, "dim":3, "basis":["E","F","G"],
//    "brackets":[{"lhs":"E","rhs":"G","out":[["E","1"]]}, …]}
// Unlisted pairs are zero; listing (i,j) and (j,i) is an error. Scalars are strings ("-3/4").
// Matrices are arrays of rows. Matched pairs:
//   {"g":algebra, "h":algebra, "right":[{"x":"E","a":"H","out":[["E","-1"]]}], "left":[…]}
// All parse failures throw Error(Format) with a message naming the offending path, or
// line/column for malformed JSON.

#include <string>
#include <string_view>

#include <json.hpp>

#include "bicross/derivations.hpp"
#include "bicross/matched.hpp"

namespace bicross {

using nlohmann::json;

/// "Q", "GF(p)", "Fp" or a bare prime.
FieldDescriptor parse_field(std::string_view text);

json to_json(FieldDescriptor f);
json to_json(std::span<const Scalar> v);
json to_json(const Matrix& m);
json to_json(const LieAlgebra& L);
json to_json(const MatchedPair& mp);
json to_json(const TnElement& t);

FieldDescriptor field_from_json(const json& j);
Vector vector_from_json(FieldDescriptor f, const json& j, std::size_t length);
Matrix matrix_from_json(FieldDescriptor f, const json& j, std::size_t rows, std::size_t cols);
LieAlgebra algebra_from_json(const json& j);
MatchedPair matched_pair_from_json(const json& j);
TnElement tn_from_json(const json& j);

/// Parses text, reporting syntax errors as "line L, column C: …".
json parse_json(std::string_view text);
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace bicross

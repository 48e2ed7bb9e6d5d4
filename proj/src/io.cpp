#include "bicross/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace bicross {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  raise(ErrorKind::Format, where + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

Scalar scalar_from_json(FieldDescriptor f, const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Scalar::parse(f, j.get<std::string>());
    } catch (const Error& e) {
      bad(where, e.what());
    }
  }
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
  bad(where, "expected a scalar string");
}

// [["E","1"], …] on the given basis
Vector combination_from_json(const LieAlgebra& L, const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of [name, coefficient] pairs");
  Vector out = L.zero();
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string w = where + "[" + std::to_string(t) + "]";
    const json& term = j[t];
    if (!term.is_array() || term.size() != 2 || !term[0].is_string()) bad(w, "expected [name, coefficient]");
    const auto idx = L.index_of(term[0].get<std::string>());
    if (!idx) bad(w, "unknown basis element \"" + term[0].get<std::string>() + "\"");
    out[*idx] += scalar_from_json(L.field(), term[1], w);
  }
  return out;
}

json combination_to_json(const LieAlgebra& L, std::span<const Scalar> v) {
  json out = json::array();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.push_back({L.name(k), v[k].to_string()});
  return out;
}

std::size_t name_index(const LieAlgebra& L, const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a basis name");
  const auto idx = L.index_of(j.get<std::string>());
  if (!idx) bad(where, "unknown basis element \"" + j.get<std::string>() + "\"");
  return *idx;
}

void read_action(const json& list, const LieAlgebra& h, const LieAlgebra& g, const LieAlgebra& target,
                 std::vector<std::vector<Vector>>& table, const std::string& where) {
  if (!list.is_array()) bad(where, "expected an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t t = 0; t < list.size(); ++t) {
    const std::string w = where + "[" + std::to_string(t) + "]";
    const std::size_t x = name_index(h, member(list[t], "x", w), w + ".x");
    const std::size_t a = name_index(g, member(list[t], "a", w), w + ".a");
    if (!seen.emplace(x, a).second) bad(w, "duplicate entry");
    table[x][a] = combination_from_json(target, member(list[t], "out", w), w + ".out");
  }
}

json action_to_json(const MatchedPair& mp, const std::vector<std::vector<Vector>>& table, const LieAlgebra& target) {
  json out = json::array();
  for (std::size_t x = 0; x < mp.h.dim(); ++x)
    for (std::size_t a = 0; a < mp.g.dim(); ++a)
      if (!is_zero_vector(table[x][a])) {
        out.push_back({{"x", mp.h.name(x)}, {"a", mp.g.name(a)}, {"out", combination_to_json(target, table[x][a])}});
      }
  return out;
}

}  // namespace

FieldDescriptor parse_field(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (s == "Q") return FieldDescriptor::rationals();
  std::string digits = s;
  if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
    digits = s.substr(3, s.size() - 4);
  } else if (s.rfind("GF", 0) == 0) {
    digits = s.substr(2);
  } else if (s.rfind("F", 0) == 0) {
    digits = s.substr(1);
  }
  if (digits.empty() || digits.size() > 9 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    raise(ErrorKind::Format, "unknown field '" + std::string(text) + "' (use Q, GF(p) or Fp)");
  }
  return FieldDescriptor::prime_field(std::stoull(digits));
}

json to_json(FieldDescriptor f) {
  if (!f.is_finite()) return {{"kind", "Q"}};
  return {{"kind", "Fp"}, {"p", f.modulus()}};
}

json to_json(std::span<const Scalar> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const LieAlgebra& L) {
  json brackets = json::array();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const Vector b = L.basis_bracket(i, j);
      if (!is_zero_vector(b)) brackets.push_back({{"lhs", L.name(i)}, {"rhs", L.name(j)}, {"out", combination_to_json(L, b)}});
    }
  return {{"field", to_json(L.field())}, {"dim", L.dim()}, {"basis", L.basis_names()}, {"brackets", brackets}};
}

json to_json(const MatchedPair& mp) {
  return {{"g", to_json(mp.g)},
          {"h", to_json(mp.h)},
          {"right", action_to_json(mp, mp.right, mp.h)},
          {"left", action_to_json(mp, mp.left, mp.g)}};
}

json to_json(const TnElement& t) {
  return {{"field", to_json(t.field())}, {"n", t.n},         {"lambda0", t.lambda0.to_string()},
          {"A", to_json(t.A)},           {"B", to_json(t.B)}, {"C", to_json(t.C)},
          {"D", to_json(t.D)},           {"delta", to_json(t.delta)}};
}

FieldDescriptor field_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return parse_field(j.get<std::string>());
    } catch (const Error& e) {
      bad("field", e.what());
    }
  }
  const json& kind = member(j, "kind", "field");
  if (!kind.is_string()) bad("field.kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "Q") return FieldDescriptor::rationals();
  if (k == "Fp" || k == "GF") {
    const json& p = member(j, "p", "field");
    if (!p.is_number_unsigned()) bad("field.p", "expected a positive integer");
    try {
      return FieldDescriptor::prime_field(p.get<std::uint64_t>());
    } catch (const Error& e) {
      bad("field.p", e.what());
    }
  }
  bad("field.kind", "unknown kind \"" + k + "\" (use \"Q\" or \"Fp\")");
}

Vector vector_from_json(FieldDescriptor f, const json& j, std::size_t length) {
  if (!j.is_array() || j.size() != length) bad("vector", "expected an array of " + std::to_string(length) + " scalars");
  Vector out;
  for (std::size_t k = 0; k < length; ++k) out.push_back(scalar_from_json(f, j[k], "vector[" + std::to_string(k) + "]"));
  return out;
}

Matrix matrix_from_json(FieldDescriptor f, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) bad("matrix", "expected " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string w = "matrix[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) bad(w, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(f, j[r][c], w + "[" + std::to_string(c) + "]");
  }
  return m;
}

LieAlgebra algebra_from_json(const json& j) {
  const FieldDescriptor f = field_from_json(member(j, "field", "algebra"));
  const json& basis = member(j, "basis", "algebra");
  if (!basis.is_array()) bad("basis", "expected an array of names");
  std::vector<std::string> names;
  std::set<std::string> unique;
  for (const auto& n : basis) {
    if (!n.is_string() || n.get<std::string>().empty()) bad("basis", "names must be nonempty strings");
    if (!unique.insert(n.get<std::string>()).second) bad("basis", "duplicate name \"" + n.get<std::string>() + "\"");
    names.push_back(n.get<std::string>());
  }
  if (const auto it = j.find("dim"); it != j.end()) {
    if (!it->is_number_unsigned() || it->get<std::size_t>() != names.size()) {
      bad("dim", "does not match the basis length " + std::to_string(names.size()));
    }
  }
  LieAlgebraBuilder b(f, names);
  const LieAlgebra shape(f, names);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  const json& brackets = j.contains("brackets") ? j.at("brackets") : json::array();
  if (!brackets.is_array()) bad("brackets", "expected an array");
  for (std::size_t t = 0; t < brackets.size(); ++t) {
    const std::string w = "brackets[" + std::to_string(t) + "]";
    const std::size_t lhs = name_index(shape, member(brackets[t], "lhs", w), w + ".lhs");
    const std::size_t rhs = name_index(shape, member(brackets[t], "rhs", w), w + ".rhs");
    if (lhs == rhs) bad(w, "[x, x] cannot be listed");
    if (!seen.emplace(std::min(lhs, rhs), std::max(lhs, rhs)).second) {
      bad(w, "pair (" + names[lhs] + ", " + names[rhs] + ") listed twice");
    }
    b.set(lhs, rhs, combination_from_json(shape, member(brackets[t], "out", w), w + ".out"));
  }
  return b.build();
}

MatchedPair matched_pair_from_json(const json& j) {
  LieAlgebra g, h;
  try {
    g = algebra_from_json(member(j, "g", "pair"));
    h = algebra_from_json(member(j, "h", "pair"));
  } catch (const Error& e) {
    bad("pair", e.what());
  }
  if (g.field() != h.field()) bad("pair", "g and h are over different fields");
  MatchedPair mp = MatchedPair::trivial(g, h);
  if (j.contains("right")) read_action(j.at("right"), h, g, h, mp.right, "right");
  if (j.contains("left")) read_action(j.at("left"), h, g, g, mp.left, "left");
  return mp;
}

TnElement tn_from_json(const json& j) {
  const FieldDescriptor f = field_from_json(member(j, "field", "tn"));
  const json& nj = member(j, "n", "tn");
  if (!nj.is_number_unsigned() || nj.get<std::size_t>() == 0) bad("n", "expected a positive integer");
  const std::size_t n = nj.get<std::size_t>();
  TnElement t;
  t.n = n;
  t.lambda0 = scalar_from_json(f, member(j, "lambda0", "tn"), "lambda0");
  t.A = matrix_from_json(f, member(j, "A", "tn"), n, n);
  t.B = matrix_from_json(f, member(j, "B", "tn"), n, n);
  t.C = matrix_from_json(f, member(j, "C", "tn"), n, n);
  t.D = matrix_from_json(f, member(j, "D", "tn"), n, n);
  t.delta = vector_from_json(f, member(j, "delta", "tn"), 2 * n + 1);
  return t;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < upto; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (const auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    raise(ErrorKind::Format, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::Format, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const Error& e) {
    raise(ErrorKind::Format, path + ": " + (e.kind() == ErrorKind::Format ? e.detail() : std::string(e.what())));
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) raise(ErrorKind::Format, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace bicross

#include <doctest.h>

#include "bicross/deform.hpp"
#include "bicross/families.hpp"
#include "bicross/io.hpp"

using namespace bicross;

namespace {

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Format;
}

std::string message_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("field names") {
  CHECK(parse_field("Q") == FieldDescriptor::rationals());
  CHECK(parse_field("GF(7)") == FieldDescriptor::prime_field(7));
  CHECK(parse_field("F5") == FieldDescriptor::prime_field(5));
  CHECK(parse_field("3") == FieldDescriptor::prime_field(3));
  CHECK(kind_of([] { (void)parse_field("GF(6)"); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { (void)parse_field("R"); }) == ErrorKind::Format);
}

TEST_CASE("the documented l(3) record") {
  const auto j = parse_json(R"({"field":{"kind":"Q"},"dim":3,"basis":["E","F","G"],
    "brackets":[{"lhs":"E","rhs":"G","out":[["E","1"]]},{"lhs":"G","rhs":"F","out":[["F","1"]]}]})");
  CHECK(algebra_from_json(j) == make_l(1, FieldDescriptor::rationals()));
}

TEST_CASE("builders round-trip through JSON") {
  for (const FieldDescriptor f : {FieldDescriptor::rationals(), FieldDescriptor::prime_field(5)}) {
    const std::vector<LieAlgebra> algebras = {
        make_l(2, f), make_L(2, f), make_m(1, f), make_h5(f), make_sl2(f), make_L_minus1(f),
        make_Lalpha(Scalar::parse(f, "3")), make_h_a(Scalar::parse(f, "2")), make_lbar_a(vector_from_ints(f, {1, 2}))};
    for (const auto& L : algebras) {
      const json j = to_json(L);
      CHECK(algebra_from_json(parse_json(j.dump())) == L);
    }
    for (const auto& mp : {mpcanon_L(2, f), mpcanon_m(1, f), mp_h5(f)}) {
      const MatchedPair back = matched_pair_from_json(parse_json(to_json(mp).dump()));
      CHECK(back.g == mp.g);
      CHECK(back.h == mp.h);
      CHECK(back.left == mp.left);
      CHECK(back.right == mp.right);
    }
  }
  const FieldDescriptor Q = FieldDescriptor::rationals();
  TnElement t = TnElement::zero(Q, 2);
  t.lambda0 = Scalar::parse(Q, "3/2");
  t.delta[4] = Scalar::parse(Q, "-1/7");
  t.A(0, 1) = Scalar::parse(Q, "5");
  const TnElement back = tn_from_json(parse_json(to_json(t).dump()));
  CHECK(back.lambda0 == t.lambda0);
  CHECK(back.A == t.A);
  CHECK(back.delta == t.delta);
  CHECK(matrix_from_json(Q, to_json(t.A), 2, 2) == t.A);
}

TEST_CASE("format errors") {
  // both orders of one pair
  const std::string dup = R"({"field":{"kind":"Q"},"basis":["x","y"],
    "brackets":[{"lhs":"x","rhs":"y","out":[["x","1"]]},{"lhs":"y","rhs":"x","out":[["x","-1"]]}]})";
  CHECK(kind_of([&] { (void)algebra_from_json(parse_json(dup)); }) == ErrorKind::Format);
  CHECK(message_of([&] { (void)algebra_from_json(parse_json(dup)); }).find("twice") != std::string::npos);

  const std::string malformed = "{\n  \"field\": {\"kind\": \"Q\"},\n  \"basis\": [\"x\" \"y\"]\n}";
  const std::string msg = message_of([&] { (void)parse_json(malformed); });
  CHECK(msg.find("line 3") != std::string::npos);

  CHECK(message_of([] {
          (void)algebra_from_json(parse_json(R"({"field":{"kind":"Q"},"basis":["x"],"brackets":[{"lhs":"x","rhs":"z","out":[]}]})"));
        }).find("unknown basis element") != std::string::npos);
  CHECK(kind_of([] { (void)algebra_from_json(parse_json(R"({"field":{"kind":"Q"},"dim":2,"basis":["x"]})")); }) ==
        ErrorKind::Format);
  CHECK(kind_of([] {
          (void)algebra_from_json(parse_json(R"({"field":{"kind":"Fp","p":5},"basis":["x","y"],"brackets":[{"lhs":"x","rhs":"y","out":[["x","1/5"]]}]})"));
        }) == ErrorKind::Format);
  CHECK(kind_of([] { (void)algebra_from_json(parse_json(R"({"field":{"kind":"R"},"basis":[]})")); }) == ErrorKind::Format);
}

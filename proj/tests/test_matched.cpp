#include <doctest.h>

#include "bicross/families.hpp"
#include "bicross/matched.hpp"

using namespace bicross;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

Subspace span_of(const LieAlgebra& L, std::initializer_list<const char*> names) {
  std::vector<Vector> gens;
  for (const char* n : names) gens.push_back(L.unit(n));
  return {L.field(), L.dim(), gens};
}

Subspace complement_span(const LieAlgebra& L, const char* excluded) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < L.dim(); ++i)
    if (L.name(i) != excluded) gens.push_back(L.unit(i));
  return {L.field(), L.dim(), gens};
}

bool same_actions(const MatchedPair& a, const MatchedPair& b) {
  return a.g == b.g && a.h == b.h && a.left == b.left && a.right == b.right;
}

}  // namespace

TEST_CASE("named matched pairs satisfy the axioms") {
  for (std::size_t n : {1u, 2u, 3u}) {
    CHECK(check_matched_pair(mpcanon_L(n, Q)).empty());
    CHECK(check_matched_pair(mpcanon_m(n, Q)).empty());
  }
  CHECK(check_matched_pair(MatchedPair::trivial(make_sl2(Q), make_l(1, Q))).empty());
  CHECK(check_matched_pair(mp_h5(Q)).empty());

  MatchedPair broken = mpcanon_L(1, Q);
  broken.left[2][0][0] = Scalar::from_int(Q, -1);
  const auto v = check_matched_pair(broken);
  CHECK_FALSE(v.empty());
  CHECK_FALSE(v.front().describe(broken).empty());
  try {
    (void)bicrossed_product(broken);
    FAIL("expected InvalidMatchedPair");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidMatchedPair);
  }
}

TEST_CASE("bicrossed products of the named pairs") {
  CHECK(bicrossed_product(MatchedPair::trivial(make_sl2(Q), make_l(1, Q))) == direct_product(make_sl2(Q), make_l(1, Q)));
  for (std::size_t n : {1u, 2u}) {
    const LieAlgebra L = bicrossed_product(mpcanon_L(n, Q));
    CHECK(equal_up_to_basis_order(L, make_L(n, Q)));
    CHECK(check_jacobi(L).empty());
    CHECK(equal_up_to_basis_order(bicrossed_product(mpcanon_m(n, Q)), make_m(n, Q)));
  }
  const LieAlgebra L4 = make_L(1, Q);
  CHECK(L4.bracket(L4.unit("G"), L4.unit("H")) == add(L4.unit("H"), L4.unit("G")));
  const LieAlgebra m4 = make_m(1, Q);
  CHECK(m4.bracket(m4.unit("G"), m4.unit("H")) == add(m4.unit("E"), m4.unit("F")));
}

TEST_CASE("canonical matched pairs recover the named pairs") {
  for (std::size_t n : {1u, 2u}) {
    const LieAlgebra L = make_L(n, Q);
    const Factorization f{L, span_of(L, {"H"}), complement_span(L, "H")};
    CHECK_FALSE(factorization_defect(f).has_value());
    CHECK(same_actions(canonical_matched_pair(f), mpcanon_L(n, Q)));
    CHECK(bicrossed_product(canonical_matched_pair(f)) == adapted_algebra(f));

    const LieAlgebra m = make_m(n, Q);
    const Factorization fm{m, span_of(m, {"H"}), complement_span(m, "H")};
    const MatchedPair cm = canonical_matched_pair(fm);
    CHECK(same_actions(cm, mpcanon_m(n, Q)));
    for (const auto& row : cm.left)
      for (const auto& v : row) CHECK(is_zero_vector(v));
  }
  const LieAlgebra d = direct_product(make_sl2(Q), make_l(1, Q));
  const Factorization fd{d, span_of(d, {"e", "f", "h"}), span_of(d, {"E", "F", "G"})};
  CHECK(same_actions(canonical_matched_pair(fd), MatchedPair::trivial(make_sl2(Q), make_l(1, Q))));
}

TEST_CASE("non-factorizations are rejected with a reason") {
  const LieAlgebra L = make_L(1, Q);
  const Factorization overlap{L, span_of(L, {"H", "E"}), complement_span(L, "H")};
  CHECK(factorization_defect(overlap).has_value());
  const Factorization notsub{L, span_of(L, {"H"}), span_of(L, {"E", "F"})};
  try {
    (void)canonical_matched_pair(notsub);
    FAIL("expected NotAFactorization");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAFactorization);
  }
}

TEST_CASE("codimension-one extensions") {
  const LieAlgebra l = make_l(1, Q);
  CHECK(equal_up_to_basis_order(h_lambda_delta(l, {l.zero(), Matrix(Q, 3, 3)}),
                                direct_product(LieAlgebra(Q, {"H"}), l)));
  TnElement t = TnElement::zero(Q, 1);
  t.lambda0 = Scalar::one(Q);
  t.delta = vector_from_ints(Q, {0, 0, 1});
  t.A = Matrix::from_ints(Q, {{-1}});
  t.D = Matrix::from_ints(Q, {{1}});
  CHECK(equal_up_to_basis_order(h_lambda_delta(l, tn_to_twisted(t)), make_L(1, Q)));
  CHECK_THROWS_AS((void)h_lambda_delta(l, {l.zero(), Matrix::identity(Q, 3)}), Error);

  const LieAlgebra h6 = bicrossed_product(mp_h5(Q));
  CHECK(h6.dim() == 6);
  CHECK(check_jacobi(h6).empty());
  const LieAlgebra h5 = make_h5(Q);
  const Vector d1 = h6.bracket(h6.unit("e1"), h6.unit("F"));
  CHECK(d1 == vector_from_ints(Q, {0, 1, 0, 0, -1, 0}));
}

TEST_CASE("the involution (a, x) -> (a, -x) on bicrossed products") {
  for (const MatchedPair& mp : {mpcanon_L(1, Q), mpcanon_m(2, Q), mp_h5(Q)}) {
    const LieAlgebra L = bicrossed_product(mp);
    const Matrix f = bicrossed_involution(mp);
    CHECK(is_product_structure(L, f));
    const auto [plus, minus] = split_product_structure(L, f);
    CHECK(plus.dim() == mp.g.dim());
    CHECK(minus.dim() == mp.h.dim());
  }
}

TEST_CASE("family builders") {
  const Vector d001 = vector_from_ints(Q, {0, 0, 1});
  CHECK(make_l1(1, Scalar::one(Q), d001) == make_L(1, Q));
  const Matrix I = Matrix::identity(Q, 1);
  CHECK(make_l2(1, I, I, vector_from_ints(Q, {1, 1})) == make_m(1, Q));
  CHECK_FALSE(make_l2(1, I, I, vector_from_ints(Q, {1, 0})) == make_m(1, Q));
  try {
    (void)make_l1(1, Scalar::from_int(Q, 2), d001);
    FAIL("expected BadParameter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadParameter);
  }
  CHECK_THROWS_AS((void)make_l1_char2(1, I, I, I, I, vector_from_ints(Q, {0, 0})), Error);
  CHECK_THROWS_AS((void)make_l3(1, I, vector_from_ints(FieldDescriptor::prime_field(2), {0, 0, 0})), Error);
  CHECK_THROWS_AS((void)make_l2_char2(1, Scalar::zero(FieldDescriptor::prime_field(2)),
                                      vector_from_ints(FieldDescriptor::prime_field(2), {0, 0, 0})),
                  Error);
  for (const LieAlgebra& a : {make_h5(Q), make_sl2(Q), make_Lalpha(Scalar::from_int(Q, 3)), make_L_minus1(Q), make_lp1_f(Q),
                              make_l(3, Q), make_L(3, Q), make_m(3, Q)}) {
    CHECK(check_jacobi(a).empty());
  }
}

TEST_CASE("each l-family builder is the extension by its T(n) datum") {
  const auto f5 = FieldDescriptor::prime_field(5);
  const auto f2 = FieldDescriptor::prime_field(2);
  for (std::size_t n : {1u, 2u}) {
    const LieAlgebra l = make_l(n, f5);
    Matrix M(f5, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) M(r, c) = Scalar::from_int(f5, static_cast<long long>(r * n + c + 2));
    Vector delta(2 * n + 1, Scalar::zero(f5));
    for (std::size_t k = 0; k < delta.size(); ++k) delta[k] = Scalar::from_int(f5, static_cast<long long>(k + 1));
    const Vector delta2n(delta.begin(), delta.end() - 1);
    const Scalar three = Scalar::from_int(f5, 3);
    const Scalar half = delta.back() / Scalar::from_int(f5, 2);
    const Matrix id = Matrix::identity(f5, n);

    TnElement t1 = TnElement::zero(f5, n);
    t1.lambda0 = Scalar::one(f5);
    t1.delta = delta;
    t1.A = -delta.back() * id;
    t1.D = delta.back() * id;
    CHECK(equal_up_to_basis_order(h_lambda_delta(l, tn_to_twisted(t1)), make_l1(n, Scalar::one(f5), delta)));

    TnElement t2 = TnElement::zero(f5, n);
    t2.A = M;
    t2.D = three * M;
    std::copy(delta2n.begin(), delta2n.end(), t2.delta.begin());
    CHECK(equal_up_to_basis_order(h_lambda_delta(l, tn_to_twisted(t2)), make_l2(n, M, three * M, delta2n)));

    TnElement t3 = TnElement::zero(f5, n);
    t3.lambda0 = Scalar::from_int(f5, 2);
    t3.C = M;
    t3.delta = delta;
    t3.A = -half * id;
    t3.D = half * id;
    CHECK(equal_up_to_basis_order(h_lambda_delta(l, tn_to_twisted(t3)), make_l3(n, M, delta)));

    TnElement t4 = TnElement::zero(f5, n);
    t4.lambda0 = Scalar::from_int(f5, -2);
    t4.B = M;
    t4.delta = delta;
    t4.A = half * id;
    t4.D = -half * id;
    CHECK(equal_up_to_basis_order(h_lambda_delta(l, tn_to_twisted(t4)), make_l4(n, M, delta)));

    const LieAlgebra l2 = make_l(n, f2);
    Matrix N(f2, n, n);
    N(0, 0) = Scalar::one(f2);
    const Matrix one2 = Matrix::identity(f2, n);
    TnElement c1 = TnElement::zero(f2, n);
    c1.A = N;
    c1.B = one2;
    c1.C = N;
    c1.D = one2;
    c1.delta[0] = Scalar::one(f2);
    CHECK(equal_up_to_basis_order(h_lambda_delta(l2, tn_to_twisted(c1)),
                                  make_l1_char2(n, N, one2, N, one2, Vector(c1.delta.begin(), c1.delta.end() - 1))));
    TnElement c2 = TnElement::zero(f2, n);
    c2.lambda0 = Scalar::one(f2);
    c2.delta = zero_vector(f2, 2 * n + 1);
    c2.delta.back() = Scalar::one(f2);
    c2.A = c2.D = one2;
    CHECK(equal_up_to_basis_order(h_lambda_delta(l2, tn_to_twisted(c2)), make_l2_char2(n, Scalar::one(f2), c2.delta)));
  }
}

TEST_CASE("every valid T(1) datum over GF(3) extends l(3)") {
  const auto f3 = FieldDescriptor::prime_field(3);
  const LieAlgebra l = make_l(1, f3);
  const Subspace codim1 = [&] {
    std::vector<Vector> gens;
    for (std::size_t i = 1; i < 4; ++i) gens.push_back(unit_vector(f3, 4, i));
    return Subspace(f3, 4, gens);
  }();
  std::size_t count = 0;
  for (const auto& v : enumerate_vectors(f3, 8)) {
    TnElement t = TnElement::zero(f3, 1);
    t.lambda0 = v[0];
    t.A(0, 0) = v[1];
    t.B(0, 0) = v[2];
    t.C(0, 0) = v[3];
    t.D(0, 0) = v[4];
    t.delta = {v[5], v[6], v[7]};
    if (!tn_validate(t)) continue;
    const LieAlgebra ext = h_lambda_delta(l, tn_to_twisted(t));
    CHECK(check_jacobi(ext).empty());
    const Factorization f{ext, Subspace(f3, 4, {unit_vector(f3, 4, 0)}), codim1};
    CHECK(canonical_matched_pair(f).h == l);
    ++count;
  }
  CHECK(count == 243);
}

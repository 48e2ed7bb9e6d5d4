#include <doctest.h>

#include "bicross/derivations.hpp"
#include "bicross/families.hpp"

using namespace bicross;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

// Jacobi of the span {F} + h with [e_i, F] = λ(e_i) F + Δ(e_i), assembled directly.
bool extension_is_lie(const LieAlgebra& h, const Vector& lambda, const Matrix& delta) {
  const std::size_t d = h.dim();
  std::vector<std::string> names{"ext"};
  for (const auto& n : h.basis_names()) names.push_back(n);
  LieAlgebraBuilder b(h.field(), names);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector v = zero_vector(h.field(), d + 1);
      const Vector src = h.basis_bracket(i, j);
      std::copy(src.begin(), src.end(), v.begin() + 1);
      b.set(i + 1, j + 1, v);
    }
    Vector v = zero_vector(h.field(), d + 1);
    v[0] = lambda[i];
    for (std::size_t r = 0; r < d; ++r) v[r + 1] = delta(r, i);
    b.set(i + 1, 0, v);
  }
  return check_jacobi(b.build()).empty();
}

Matrix block_delta(const TnElement& t) {
  const std::size_t n = t.n;
  Matrix m(t.field(), 2 * n + 1, 2 * n + 1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = t.A(r, c);
      m(r, n + c) = t.B(r, c);
      m(n + r, c) = t.C(r, c);
      m(n + r, n + c) = t.D(r, c);
    }
  for (std::size_t r = 0; r < 2 * n + 1; ++r) m(r, 2 * n) = t.delta[r];
  return m;
}

}  // namespace

TEST_CASE("derivations of the perfect five-dimensional algebra") {
  const LieAlgebra h = make_h5(Q);
  CHECK(is_perfect(h));
  CHECK(derivation_space(h).size() == 6);
  const Matrix delta = h5_delta(Q);
  CHECK(is_derivation(h, delta));
  CHECK_FALSE(is_inner(h, delta).has_value());
  // The displayed six-parameter family: every member is a derivation and the family has dim 6.
  std::vector<Matrix> family;
  for (int k = 0; k < 6; ++k) {
    long long a[6] = {0, 0, 0, 0, 0, 0};
    a[k] = 1;
    const auto [a1, a2, a3, a4, a5, a6] = std::tuple{a[0], a[1], a[2], a[3], a[4], a[5]};
    family.push_back(Matrix::from_ints(Q, {{a1, 0, -2 * a4, 0, 0},
                                           {0, -a1, -2 * a2, 0, 0},
                                           {a2, a4, 0, 0, 0},
                                           {a3, 0, a5, a6, a4},
                                           {0, a5, -a3, -a2, a6 - a1}}));
    CHECK(is_derivation(h, family.back()));
  }
  CHECK(matrix_span(Q, 5, 5, family) == matrix_span(Q, 5, 5, derivation_space(h)));
}

TEST_CASE("derivations of sl2 are inner; abelian algebras have all endomorphisms") {
  const LieAlgebra s = make_sl2(Q);
  const auto der = derivation_space(s);
  CHECK(der.size() == 3);
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < 3; ++i) ads.push_back(inner_derivation(s, s.unit(i)));
  CHECK(matrix_span(Q, 3, 3, ads) == matrix_span(Q, 3, 3, der));
  for (const auto& d : der) {
    const auto x = is_inner(s, d);
    REQUIRE(x);
    CHECK(s.ad(*x) == d);
  }
  const Matrix adh = inner_derivation(s, s.unit("h"));
  CHECK(adh == Matrix::from_ints(Q, {{2, 0, 0}, {0, -2, 0}, {0, 0, 0}}));
  CHECK(is_inner(s, Matrix(Q, 3, 3)) == s.zero());
  CHECK_THROWS_AS((void)is_inner(s, Matrix::identity(Q, 3)), Error);
  CHECK(derivation_space(abelian_algebra(Q, 2)).size() == 4);
}

TEST_CASE("inner derivation of G on l(3)") {
  const LieAlgebra l = make_l(1, Q);
  CHECK(inner_derivation(l, l.unit("G")) == Matrix::from_ints(Q, {{-1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
  CHECK(inner_derivation(l, l.zero()).is_zero());
}

TEST_CASE("twisted derivations for a fixed functional") {
  const LieAlgebra l = make_l(1, Q);
  CHECK(matrix_span(Q, 3, 3, twisted_derivations_for_lambda(l, l.zero())) ==
        matrix_span(Q, 3, 3, derivation_space(l)));
  CHECK(twisted_derivations_for_lambda(l, vector_from_ints(Q, {0, 0, 1})).size() == 3);
  CHECK(twisted_derivations_for_lambda(l, vector_from_ints(Q, {0, 0, 5})).size() == 3);
  CHECK(twisted_derivations_for_lambda(l, vector_from_ints(Q, {0, 0, 0})).size() == 4);
  CHECK(twisted_derivations_for_lambda(l, vector_from_ints(Q, {0, 0, 2})).size() == 4);
  try {
    (void)twisted_derivations_for_lambda(l, vector_from_ints(Q, {1, 0, 0}));
    FAIL("expected LambdaNotAdmissible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LambdaNotAdmissible);
  }
  for (const auto& d : twisted_derivations_for_lambda(l, vector_from_ints(Q, {0, 0, 3}))) {
    CHECK(is_twisted_derivation(l, {vector_from_ints(Q, {0, 0, 3}), d}));
  }
}

TEST_CASE("enumeration of twisted derivations over finite fields") {
  const auto f5 = FieldDescriptor::prime_field(5);
  const auto fams = enumerate_twisted_derivations(make_l(1, f5));
  REQUIRE(fams.size() == 5);
  const std::size_t expected[] = {4, 3, 4, 4, 3};
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(fams[k].lambda == vector_from_ints(f5, {0, 0, static_cast<long long>(k)}));
    CHECK(fams[k].basis.size() == expected[k]);
  }
  const auto perfect = enumerate_twisted_derivations(make_sl2(f5));
  REQUIRE(perfect.size() == 1);
  CHECK(is_zero_vector(perfect[0].lambda));

  const auto f3 = FieldDescriptor::prime_field(3);
  const auto ab = enumerate_twisted_derivations(abelian_algebra(f3, 1));
  REQUIRE(ab.size() == 3);
  for (const auto& fam : ab) CHECK(fam.basis.size() == 1);
  CHECK_THROWS_AS((void)enumerate_twisted_derivations(make_l(1, Q)), Error);
  CHECK_THROWS_AS((void)enumerate_twisted_derivations(abelian_algebra(f5, 9), 1000), Error);
}

TEST_CASE("twisted law is exactly the Jacobi condition of the extension") {
  // Exhaustive on the two-dimensional non-abelian algebra over GF(3).
  const auto f3 = FieldDescriptor::prime_field(3);
  LieAlgebraBuilder b(f3, {"x", "y"});
  b.set("x", "y", {{"x", 1}});
  const LieAlgebra two = b.build();
  std::size_t agree = 0;
  for (const auto& lam : enumerate_vectors(f3, 2))
    for (const auto& entries : enumerate_vectors(f3, 4)) {
      const Matrix d = Matrix::from_rows(f3, {{entries[0], entries[1]}, {entries[2], entries[3]}}, 2);
      CHECK(is_twisted_derivation(two, {lam, d}) == extension_is_lie(two, lam, d));
      ++agree;
    }
  CHECK(agree == 729);
  // The displayed data of L(4): λ0 = 1, A = −1, D = 1, δ = (0, 0, 1).
  const LieAlgebra l = make_l(1, Q);
  const Matrix d = Matrix::from_ints(Q, {{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(is_twisted_derivation(l, {vector_from_ints(Q, {0, 0, 1}), d}));
  CHECK(extension_is_lie(l, vector_from_ints(Q, {0, 0, 1}), d));
}

TEST_CASE("T(n) validation examples") {
  TnElement t = TnElement::zero(Q, 1);
  t.lambda0 = Scalar::one(Q);
  t.delta = vector_from_ints(Q, {0, 0, 1});
  t.A = Matrix::from_ints(Q, {{-1}});
  t.D = Matrix::from_ints(Q, {{1}});
  CHECK(tn_validate(t));
  CHECK(is_twisted_derivation(make_l(1, Q), tn_to_twisted(t)));
  CHECK(tn_from_twisted(1, tn_to_twisted(t)) == t);

  TnElement bad = TnElement::zero(Q, 1);
  bad.A = bad.D = Matrix::identity(Q, 1);
  bad.delta = vector_from_ints(Q, {1, 0, 1});
  CHECK_FALSE(tn_validate(bad));
  CHECK_THROWS_AS((void)tn_to_twisted(bad), Error);

  TnElement m4 = TnElement::zero(Q, 1);
  m4.A = m4.D = Matrix::identity(Q, 1);
  m4.delta = vector_from_ints(Q, {1, 0, 0});
  CHECK(tn_validate(m4));
  m4.delta = vector_from_ints(Q, {1, 1, 0});
  CHECK(tn_validate(m4));
}

TEST_CASE("T(n) conditions agree with the twisted law, exhaustively over GF(3), n = 1") {
  const auto f3 = FieldDescriptor::prime_field(3);
  const LieAlgebra l = make_l(1, f3);
  std::size_t valid = 0;
  for (const auto& v : enumerate_vectors(f3, 8)) {
    TnElement t = TnElement::zero(f3, 1);
    t.lambda0 = v[0];
    t.A(0, 0) = v[1];
    t.B(0, 0) = v[2];
    t.C(0, 0) = v[3];
    t.D(0, 0) = v[4];
    t.delta = {v[5], v[6], v[7]};
    Vector lambda = zero_vector(f3, 3);
    lambda[2] = v[0];
    const bool ok = tn_validate(t);
    CHECK(ok == is_twisted_derivation(l, {lambda, block_delta(t)}));
    valid += ok;
  }
  // λ0 = 0: 3^4 (A, D, δ1, δ2); λ0 = 1 (= −2): 3^4 (B, δ); λ0 = 2: 3^4 (C, δ).
  CHECK(valid == 243);
}

TEST_CASE("closed form matches the solver for small cases") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto f = FieldDescriptor::prime_field(p);
    for (std::size_t n : {1u, 2u}) {
      const LieAlgebra l = make_l(n, f);
      const std::size_t d = 2 * n + 1;
      for (const auto& fam : enumerate_twisted_derivations(l)) {
        std::vector<Matrix> closed;
        for (const auto& t : tn_closed_form_basis(f, n, fam.lambda[2 * n])) {
          CHECK(tn_validate(t));
          closed.push_back(tn_to_twisted(t).delta);
        }
        CHECK(matrix_span(f, d, d, closed) == matrix_span(f, d, d, fam.basis));
      }
    }
  }
}

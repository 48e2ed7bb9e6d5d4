#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bicross/derivations.hpp"
#include "bicross/families.hpp"
#include "bicross/iso.hpp"

using namespace bicross;

namespace {

FieldDescriptor gf(std::uint64_t p) { return FieldDescriptor::prime_field(p); }

Scalar s(FieldDescriptor f, long long v) { return Scalar::from_int(f, v); }

// Oracle: brute force over every n×n matrix.
std::vector<LinearMap> naive_automorphisms(const LieAlgebra& L) {
  const FieldDescriptor f = L.field();
  const std::size_t n = L.dim();
  std::vector<LinearMap> out;
  for (const auto& entries : VectorEnumerator(f, n * n)) {
    Matrix m(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = entries[r * n + c];
    if (!determinant(m).is_zero() && is_lie_map(L, L, m)) out.push_back(m);
  }
  return out;
}

std::set<std::vector<std::string>> as_set(const std::vector<LinearMap>& maps) {
  std::set<std::vector<std::string>> out;
  for (const auto& m : maps) {
    std::vector<std::string> key;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) key.push_back(m(r, c).to_string());
    out.insert(key);
  }
  return out;
}

LinearMap random_invertible(FieldDescriptor f, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, static_cast<int>(f.modulus()) - 1);
  for (;;) {
    Matrix m(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = s(f, dist(rng));
    if (!determinant(m).is_zero()) return m;
  }
}

}  // namespace

TEST_CASE("automorphism search agrees with brute force") {
  const FieldDescriptor f3 = gf(3);
  const std::vector<LieAlgebra> algebras = {abelian_algebra(f3, 2), make_l(1, f3), make_sl2(f3), make_Lalpha(s(f3, 1)),
                                            make_L_minus1(f3)};
  for (const auto& L : algebras) {
    const auto fast = aut_enumerate(L);
    const auto slow = naive_automorphisms(L);
    CHECK(fast.size() == slow.size());
    CHECK(as_set(fast) == as_set(slow));
    for (const auto& m : fast) CHECK(verify_iso(L, L, m));
  }
  CHECK(aut_enumerate(abelian_algebra(f3, 2)).size() == 48);  // |GL(2,3)|
  CHECK(aut_enumerate(make_sl2(f3)).size() == 24);            // |PGL(2,3)|
}

TEST_CASE("fingerprints separate l(3) from the algebra with ad E = -1") {
  const FieldDescriptor f5 = gf(5);
  const auto r = are_isomorphic(make_l(1, f5), make_L_minus1(f5));
  CHECK(r.verdict == IsoResult::Verdict::No);
  CHECK(!r.certificate.empty());
  const Fingerprint a = fingerprint(make_l(1, f5));
  const Fingerprint b = fingerprint(make_L_minus1(f5));
  CHECK(a.derived == b.derived);
  CHECK(a.derivation_dim != b.derivation_dim);
}

TEST_CASE("explicit isomorphism f1->E, f2->F-G, f3->G") {
  for (const FieldDescriptor f : {FieldDescriptor::rationals(), gf(5)}) {
    const LieAlgebra lp = make_lp1_f(f);
    const LieAlgebra l = make_l(1, f);
    const LinearMap m = Matrix::from_ints(f, {{1, 0, 0}, {0, 1, 0}, {0, -1, 1}});
    CHECK(verify_iso(lp, l, m));
  }
  const auto r = are_isomorphic(make_lp1_f(gf(7)), make_l(1, gf(7)));
  REQUIRE(r.verdict == IsoResult::Verdict::Yes);
  CHECK(verify_iso(make_lp1_f(gf(7)), make_l(1, gf(7)), *r.map));
}

TEST_CASE("L_alpha classes: alpha ~ beta iff beta in {alpha, 1/alpha}") {
  for (std::uint64_t p : {5u, 7u}) {
    const FieldDescriptor f = gf(p);
    for (std::uint32_t a = 1; a < p; ++a)
      for (std::uint32_t b = 1; b < p; ++b) {
        const Scalar alpha = s(f, a);
        const Scalar beta = s(f, b);
        const bool expected = alpha == beta || alpha * beta == Scalar::one(f);
        const auto r = are_isomorphic(make_Lalpha(alpha), make_Lalpha(beta));
        CAPTURE(p);
        CAPTURE(a);
        CAPTURE(b);
        CHECK((r.verdict == IsoResult::Verdict::Yes) == expected);
        CHECK(r.verdict != IsoResult::Verdict::Unknown);
        if (r.map) CHECK(verify_iso(make_Lalpha(alpha), make_Lalpha(beta), *r.map));
      }
  }
  CHECK(are_isomorphic(make_l(1, gf(5)), make_Lalpha(s(gf(5), -1))).verdict == IsoResult::Verdict::Yes);
}

TEST_CASE("fingerprint and isomorphism survive a random change of basis") {
  std::mt19937 rng(7);
  const FieldDescriptor f5 = gf(5);
  const std::vector<LieAlgebra> algebras = {make_l(2, f5), make_L(1, f5), make_m(1, f5), make_h5(f5), make_sl2(f5)};
  for (const auto& L : algebras) {
    const LinearMap P = random_invertible(f5, L.dim(), rng);
    const LieAlgebra M = change_basis(L, P);
    CHECK(fingerprint(L) == fingerprint(M));
    CHECK(verify_iso(M, L, P));  // coordinates in the new basis map to old coordinates
    const auto r = are_isomorphic(L, M);
    REQUIRE(r.verdict == IsoResult::Verdict::Yes);
    CHECK(verify_iso(L, M, *r.map));
  }
}

TEST_CASE("over Q only the cheap cases are decided") {
  const FieldDescriptor Q = FieldDescriptor::rationals();
  CHECK(are_isomorphic(make_l(1, Q), make_l(1, Q)).verdict == IsoResult::Verdict::Yes);
  CHECK(are_isomorphic(make_l(1, Q), make_L_minus1(Q)).verdict == IsoResult::Verdict::No);
  CHECK(are_isomorphic(make_lp1_f(Q), make_l(1, Q)).verdict == IsoResult::Verdict::Unknown);
  CHECK_THROWS_AS(aut_enumerate(make_l(1, Q)), Error);
}

TEST_CASE("search budget") {
  const auto r = are_isomorphic(make_lp1_f(gf(5)), make_l(1, gf(5)), 1);
  CHECK(r.verdict == IsoResult::Verdict::Unknown);
  try {
    (void)aut_enumerate(make_sl2(gf(5)), 3);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("automorphism triples of sl2 with an inner derivation form a group") {
  const FieldDescriptor f3 = gf(3);
  const LieAlgebra h = make_sl2(f3);
  const Vector x0 = h.unit("h");
  const LinearMap delta = h.ad(x0);
  const auto triples = enumerate_aut_triples(h, delta);
  const std::set<AutTriple> group(triples.begin(), triples.end());
  CHECK(group.size() == triples.size());
  CHECK(triples.size() == 2 * aut_enumerate(h).size());

  const LieAlgebra ext = h_lambda_delta(h, {h.zero(), delta}, "F");
  REQUIRE(ext.name(0) == "F");
  CHECK(group.count(aut_identity(h)) == 1);
  for (const auto& t : triples) {
    CHECK(is_valid_triple(h, delta, delta, t));
    CHECK(gcheck_inner(h, x0, t));
    CHECK(verify_iso(ext, ext, phi_from_triple(h, t)));
    CHECK(group.count(aut_inverse(t)) == 1);
    CHECK(aut_multiply(t, aut_inverse(t)) == aut_identity(h));
  }
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
  for (int k = 0; k < 200; ++k) {
    const auto& a = triples[pick(rng)];
    const auto& b = triples[pick(rng)];
    const auto& c = triples[pick(rng)];
    const AutTriple ab = aut_multiply(a, b);
    CHECK(group.count(ab) == 1);
    CHECK(aut_multiply(ab, c) == aut_multiply(a, aut_multiply(b, c)));
    // composition of the induced automorphisms of h_(Δ)
    CHECK(phi_from_triple(h, ab) == phi_from_triple(h, a) * phi_from_triple(h, b));
    CHECK(semidirect_embed(ab) == semidirect_multiply(semidirect_embed(a), semidirect_embed(b)));
  }
  std::set<std::vector<std::string>> images;
  for (const auto& t : triples) {
    const auto e = semidirect_embed(t);
    std::vector<std::string> key{e.alpha.to_string(), to_string(e.h)};
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) key.push_back(e.v(r, c).to_string());
    images.insert(key);
  }
  CHECK(images.size() == triples.size());
}

TEST_CASE("triples require a perfect algebra") {
  const LieAlgebra l = make_l(1, gf(3));
  CHECK_THROWS_AS(enumerate_aut_triples(l, Matrix::identity(gf(3), 3)), Error);
  CHECK_THROWS_AS(aut_inverse({Scalar::zero(gf(3)), l.zero(), Matrix::identity(gf(3), 3)}), Error);
}

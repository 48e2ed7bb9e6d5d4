#include <doctest.h>

#include <algorithm>
#include <set>

#include "bicross/deform.hpp"
#include "bicross/families.hpp"
#include "bicross/iso.hpp"

using namespace bicross;

namespace {

FieldDescriptor gf(std::uint64_t p) { return FieldDescriptor::prime_field(p); }
const FieldDescriptor Q = FieldDescriptor::rationals();

Scalar s(FieldDescriptor f, long long v) { return Scalar::from_int(f, v); }

std::string key(const LinearMap& m) {
  std::string k;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) k += m(r, c).to_string() + ",";
  return k;
}

std::set<std::string> keys(const std::vector<LinearMap>& maps) {
  std::set<std::string> out;
  for (const auto& m : maps) out.insert(key(m));
  return out;
}

// Oracle: r is a deformation map iff its graph {(r(x), x)} is a subalgebra of g ⋈ h.
bool graph_is_subalgebra(const LieAlgebra& bicrossed, const LinearMap& r) {
  const std::size_t dg = r.rows();
  const std::size_t dh = r.cols();
  auto lift = [&](const Vector& x) {
    Vector v = r.apply(x);
    v.insert(v.end(), x.begin(), x.end());
    return v;
  };
  const FieldDescriptor f = r.field();
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t j = i + 1; j < dh; ++j) {
      const Vector b = bicrossed.bracket(lift(unit_vector(f, dh, i)), lift(unit_vector(f, dh, j)));
      const Vector gpart(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(dg));
      const Vector hpart(b.begin() + static_cast<std::ptrdiff_t>(dg), b.end());
      if (gpart != r.apply(hpart)) return false;
    }
  return true;
}

std::vector<LinearMap> oracle_maps(const MatchedPair& mp) {
  const LieAlgebra bp = bicrossed_product(mp);
  const std::size_t dg = mp.g.dim();
  const std::size_t dh = mp.h.dim();
  std::vector<LinearMap> out;
  for (const auto& entries : VectorEnumerator(mp.h.field(), dg * dh)) {
    Matrix r(mp.h.field(), dg, dh);
    for (std::size_t a = 0; a < dg; ++a)
      for (std::size_t x = 0; x < dh; ++x) r(a, x) = entries[a * dh + x];
    if (graph_is_subalgebra(bp, r)) out.push_back(r);
  }
  return out;
}

std::vector<LinearMap> flatten(const std::vector<DeformationFamily>& fams) {
  std::vector<LinearMap> out;
  for (const auto& f : fams) out.insert(out.end(), f.maps.begin(), f.maps.end());
  return out;
}

}  // namespace

TEST_CASE("deformation-map enumeration is exhaustive") {
  std::vector<MatchedPair> pairs;
  for (std::uint64_t p : {3u, 5u}) {
    pairs.push_back(mpcanon_L(1, gf(p)));
    pairs.push_back(mpcanon_m(1, gf(p)));
    pairs.push_back(MatchedPair::trivial(LieAlgebra(gf(p), {"z"}), make_l(1, gf(p))));
  }
  pairs.push_back(mpcanon_L(2, gf(3)));
  pairs.push_back(mpcanon_m(2, gf(3)));
  pairs.push_back(mp_h5(gf(5)));
  pairs.push_back(MatchedPair::trivial(make_l(1, gf(3)), abelian_algebra(gf(3), 2)));
  for (const auto& mp : pairs) {
    const auto fast = enumerate_deformation_maps(mp);
    const auto slow = oracle_maps(mp);
    CHECK(keys(fast) == keys(slow));
    CHECK(fast.size() == slow.size());
    for (const auto& r : fast) CHECK(is_deformation_map(mp, r));
    CHECK(std::is_sorted(fast.begin(), fast.end(), [](const LinearMap& a, const LinearMap& b) {
      return lex_less(a.transpose().entries(), b.transpose().entries());
    }));
  }
}

TEST_CASE("deformation-map counts") {
  const FieldDescriptor f5 = gf(5);
  CHECK(enumerate_deformation_maps(mpcanon_L(1, f5)).size() == 29);
  CHECK(enumerate_deformation_maps(mpcanon_m(1, f5)).size() == 13);
  CHECK(enumerate_deformation_maps(MatchedPair::trivial(LieAlgebra(f5, {"z"}), make_l(1, f5))).size() == 5);
  CHECK(enumerate_deformation_maps(mp_h5(gf(7))).size() == 7);
  for (std::uint64_t p : {3u, 5u, 7u}) {
    // (pⁿ − 1) + pⁿ·p and 2(pⁿ − 1) + p for n = 1
    CHECK(enumerate_deformation_maps(mpcanon_L(1, gf(p))).size() == (p - 1) + p * p);
    CHECK(enumerate_deformation_maps(mpcanon_m(1, gf(p))).size() == 2 * (p - 1) + p);
  }
}

TEST_CASE("closed forms equal the enumeration") {
  for (std::uint64_t p : {3u, 5u})
    for (std::size_t n : {1u, 2u}) {
      const FieldDescriptor f = gf(p);
      const auto L = closed_form_defmaps_L(n, f);
      const auto m = closed_form_defmaps_m(n, f);
      CHECK(keys(flatten(L)) == keys(enumerate_deformation_maps(mpcanon_L(n, f))));
      CHECK(keys(flatten(m)) == keys(enumerate_deformation_maps(mpcanon_m(n, f))));
      CHECK(flatten(L).size() == keys(flatten(L)).size());  // the families are disjoint
      CHECK(flatten(m).size() == keys(flatten(m)).size());
    }
  const auto L = closed_form_defmaps_L(1, gf(5));
  REQUIRE(L.size() == 2);
  CHECK(L[0].maps.size() == 4);
  CHECK(L[1].maps.size() == 25);
  const auto m = closed_form_defmaps_m(1, gf(5));
  REQUIRE(m.size() == 3);
  CHECK(m[0].maps.size() == 4);
  CHECK(m[1].maps.size() == 4);
  CHECK(m[2].maps.size() == 5);
  CHECK_THROWS_AS(closed_form_defmaps_L(1, gf(2)), Error);
  CHECK_THROWS_AS(closed_form_defmaps_m(1, Q), Error);
}

TEST_CASE("individual deformation maps") {
  const MatchedPair mp = mpcanon_L(1, Q);
  for (long long a : {1, -3, 7}) {
    CHECK(is_deformation_map(mp, Matrix::from_ints(Q, {{a, 0, 1}})));
  }
  CHECK_FALSE(is_deformation_map(mp, Matrix::from_ints(Q, {{1, 1, 1}})));
  CHECK(is_deformation_map(mp, Matrix(Q, 1, 3)));
  CHECK_THROWS_AS(is_deformation_map(mp, Matrix(Q, 2, 3)), Error);

  const auto ma = defmap_m_a(vector_from_ints(gf(5), {2}));
  CHECK(ma == Matrix::from_ints(gf(5), {{2, 0, 1}}));
  CHECK(defmap_m_c(1, s(Q, 0)) == Matrix(Q, 1, 3));
  CHECK(defmap_L_a(vector_from_ints(Q, {1, 1})) == Matrix::from_ints(Q, {{1, 1, 0, 0, 1}}));
  CHECK_THROWS_AS(defmap_L_a(vector_from_ints(Q, {0})), Error);
  CHECK_THROWS_AS(defmap_m_b(vector_from_ints(gf(3), {0, 0})), Error);
}

TEST_CASE("r-deformations") {
  for (const FieldDescriptor f : {Q, gf(5)}) {
    for (const MatchedPair& mp : {mpcanon_L(1, f), mpcanon_m(2, f), mp_h5(f)}) {
      CHECK(r_deformation(mp, Matrix(f, mp.g.dim(), mp.h.dim())) == mp.h);
    }
  }
  const MatchedPair mp = mpcanon_L(1, Q);
  LieAlgebraBuilder expect(Q, {"E", "F", "G"});
  expect.set("E", "F", {{"F", -1}});
  expect.set("E", "G", {{"G", -1}});
  CHECK(r_deformation(mp, defmap_L_a(vector_from_ints(Q, {1}))) == expect.build());
  CHECK(r_deformation(mp, defmap_L_bc(vector_from_ints(Q, {0}), s(Q, 1))).is_abelian());
  CHECK_THROWS_AS(r_deformation(mp, Matrix::from_ints(Q, {{1, 1, 1}})), Error);

  // Each r-deformation is a complement of g in g ⋈ h.
  for (const MatchedPair& p : {mpcanon_L(1, gf(5)), mpcanon_m(1, gf(5)), mp_h5(gf(7))}) {
    const LieAlgebra bp = bicrossed_product(p);
    for (const auto& r : enumerate_deformation_maps(p)) {
      const LieAlgebra hr = r_deformation(p, r);
      CHECK(check_jacobi(hr).empty());
      const LinearMap emb = deformation_complement(p, r);
      CHECK(is_lie_map(hr, bp, emb));
      std::vector<Vector> cols;
      for (std::size_t a = 0; a < p.g.dim(); ++a) cols.push_back(bp.unit(a));
      for (std::size_t x = 0; x < p.h.dim(); ++x) cols.push_back(emb.column(x));
      CHECK(rank(Matrix::from_columns(bp.field(), cols, bp.dim())) == bp.dim());
    }
  }
}

TEST_CASE("bracket tables of the complements match the deformations") {
  for (const FieldDescriptor f : {gf(3), gf(5)})
    for (std::size_t n : {1u, 2u}) {
      const MatchedPair L = mpcanon_L(n, f);
      const MatchedPair m = mpcanon_m(n, f);
      for (const auto& v : VectorEnumerator(f, n)) {
        for (const auto& c : VectorEnumerator(f, 1)) {
          CHECK(r_deformation(L, defmap_L_bc(v, c[0])) == make_l_bc(v, c[0]));
          CHECK(r_deformation(m, defmap_m_c(n, c[0])) == make_lbarpp_c(n, c[0]));
        }
        CHECK(make_lpp_b(v) == make_l_bc(v, Scalar::one(f)));
        if (is_zero_vector(v)) continue;
        CHECK(r_deformation(L, defmap_L_a(v)) == make_l_a(v));
        CHECK(r_deformation(m, defmap_m_a(v)) == make_lbar_a(v));
        CHECK(r_deformation(m, defmap_m_b(v)) == make_lbarp_b(v));
      }
    }
  // l_(b,c) ≅ l'_(b) via G ↦ (c − 1)⁻¹ G
  const FieldDescriptor f5 = gf(5);
  for (const auto& b : VectorEnumerator(f5, 2))
    for (long long c : {0, 2, 3, 4}) {
      Matrix g = Matrix::identity(f5, 5);
      g(4, 4) = (s(f5, c) - s(f5, 1)).inverse();
      CHECK(verify_iso(make_lp_b(b), make_l_bc(b, s(f5, c)), g));
    }
  for (long long a : {1, 2, -1, 5}) {
    CHECK(r_deformation(mp_h5(Q), defmap_h5_a(s(Q, a))) == make_h_a(s(Q, a)));
  }
  for (std::uint32_t a = 1; a < 7; ++a) {
    CHECK(r_deformation(mp_h5(gf(7)), defmap_h5_a(s(gf(7), a))) == make_h_a(s(gf(7), a)));
  }
  CHECK_THROWS_AS(make_l_a(vector_from_ints(Q, {0, 0})), Error);
  CHECK_THROWS_AS(make_h_a(s(Q, 0)), Error);
}

TEST_CASE("named complements") {
  const FieldDescriptor f5 = gf(5);
  CHECK(make_lpp_b(vector_from_ints(f5, {0, 0})).is_abelian());
  for (std::size_t n : {1u, 2u}) {
    const LieAlgebra lp0 = make_lp_b(zero_vector(f5, n));
    Matrix flip = Matrix::identity(f5, 2 * n + 1);
    flip(2 * n, 2 * n) = s(f5, -1);
    CHECK(verify_iso(lp0, make_l(n, f5), flip));
  }
  CHECK(are_isomorphic(make_lp_b(vector_from_ints(f5, {0})), make_l(1, f5)).verdict == IsoResult::Verdict::Yes);
  // the f-basis algebra is l'_(1) with G ↦ −G
  CHECK(verify_iso(make_lp1_f(f5), make_lp_b(vector_from_ints(f5, {1})),
                   Matrix::from_ints(f5, {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}})));
  CHECK(derived_algebra(make_h_a(s(Q, 1))).dim() == 3);
}

TEST_CASE("isomorphisms between the complements of m(4)") {
  const FieldDescriptor f7 = gf(7);
  const Scalar half = s(f7, 2).inverse();
  const LieAlgebra L0 = make_Lalpha(s(f7, 0));
  for (std::uint32_t ai = 1; ai < 7; ++ai) {
    const Scalar a = s(f7, ai);
    const LieAlgebra la = make_lbar_a(Vector{a});
    // E ↦ y + a z, F ↦ x, G ↦ x + y + (a − 2) z
    Matrix phi(f7, 3, 3);
    phi(1, 0) = s(f7, 1);
    phi(2, 0) = a;
    phi(0, 1) = s(f7, 1);
    phi(0, 2) = s(f7, 1);
    phi(1, 2) = s(f7, 1);
    phi(2, 2) = a - s(f7, 2);
    CHECK(verify_iso(la, L0, phi));
    for (std::uint32_t bi = 1; bi < 7; ++bi) {
      const Scalar b = s(f7, bi);
      Matrix gamma(f7, 3, 3);
      gamma(0, 0) = half * (b - a);
      gamma(1, 0) = half * (b - a + s(f7, 2));
      gamma(2, 0) = half * (a - b);
      gamma(0, 1) = s(f7, 1);
      gamma(0, 2) = half * (b - a + s(f7, 4));
      gamma(1, 2) = half * (b - a + s(f7, 4));
      gamma(2, 2) = half * (a - b - s(f7, 2));
      CHECK(verify_iso(la, make_lbarp_b(Vector{b}), gamma));
    }
  }
  // a = b = 1: E ↦ F, F ↦ E, G ↦ 2E + 2F − G
  CHECK(verify_iso(make_lbar_a(vector_from_ints(f7, {1})), make_lbarp_b(vector_from_ints(f7, {1})),
                   Matrix::from_ints(f7, {{0, 1, 2}, {1, 0, 2}, {0, 0, -1}})));
  for (std::uint32_t ci = 0; ci < 7; ++ci) {
    const Scalar c = s(f7, ci);
    if (c == s(f7, -1)) {
      CHECK(are_isomorphic(make_lbarpp_c(1, c), L0).verdict == IsoResult::Verdict::Yes);
      continue;
    }
    Matrix psi = Matrix::identity(f7, 3);
    psi(2, 2) = c + s(f7, 1);
    CHECK(verify_iso(make_lbarpp_c(1, c), make_Lalpha((c - s(f7, 1)) / (c + s(f7, 1))), psi));
  }
}

TEST_CASE("complement classification") {
  for (std::uint64_t p : {3u, 5u}) {
    for (const MatchedPair& mp : {mpcanon_L(1, gf(p)), mpcanon_m(1, gf(p)), mp_h5(gf(p))}) {
      const auto fwd = classify_complements(mp);
      const auto bwd = classify_complements(mp, 10'000'000, true);
      REQUIRE(fwd.index);
      CHECK(fwd.index == bwd.index);
      std::multiset<Fingerprint> a, b;
      for (const auto& L : fwd.representatives) a.insert(fingerprint(L));
      for (const auto& L : bwd.representatives) b.insert(fingerprint(L));
      CHECK(a == b);
      std::size_t total = 0;
      for (auto c : fwd.class_sizes) total += c;
      CHECK(total == fwd.deformation_count);
      CHECK(fwd.deformation_count == fwd.maps.size());
      for (std::size_t i = 0; i < fwd.representatives.size(); ++i) {
        CHECK(check_jacobi(fwd.representatives[i]).empty());
        CHECK(r_deformation(mp, fwd.representative_maps[i]) == fwd.representatives[i]);
        for (std::size_t j = i + 1; j < fwd.representatives.size(); ++j) {
          CHECK(are_isomorphic(fwd.representatives[i], fwd.representatives[j]).verdict == IsoResult::Verdict::No);
        }
      }
      for (std::size_t k = 0; k < fwd.maps.size(); ++k) {
        CHECK(are_isomorphic(r_deformation(mp, fwd.maps[k]), fwd.representatives[fwd.class_of[k]]).verdict ==
              IsoResult::Verdict::Yes);
      }
    }
  }
  // h and the h_a split into two classes: h_a is not perfect
  const auto h5 = classify_complements(mp_h5(gf(7)));
  CHECK(h5.deformation_count == 7);
  CHECK(h5.index == 2u);
}

TEST_CASE("infinite index over Q") {
  const auto rep = classify_complements(mpcanon_m(1, Q));
  CHECK(rep.infinite());
  CHECK(rep.representatives.size() >= 5);
  std::set<std::string> values;
  for (const auto& L : rep.representatives) {
    const auto inv = eigenvalue_ratio_invariant(L);
    REQUIRE(inv);
    values.insert(inv->to_string());
  }
  CHECK(values.size() == rep.representatives.size());
  CHECK_THROWS_AS(classify_complements(mpcanon_L(1, Q)), Error);

  // (1 + α)²/α for L_α, and 4c²/(c² − 1) for the r_c deformation
  for (long long a : {2, 3, -5}) {
    const Scalar al = s(Q, a);
    CHECK(*eigenvalue_ratio_invariant(make_Lalpha(al)) == (s(Q, 1) + al) * (s(Q, 1) + al) / al);
    CHECK(*eigenvalue_ratio_invariant(make_Lalpha(al)) == *eigenvalue_ratio_invariant(make_Lalpha(al.inverse())));
    const Scalar c = s(Q, a);
    CHECK(*eigenvalue_ratio_invariant(make_lbarpp_c(1, c)) == s(Q, 4) * c * c / (c * c - s(Q, 1)));
  }
  CHECK_FALSE(eigenvalue_ratio_invariant(make_sl2(Q)));
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_deformation_maps(mpcanon_L(1, Q)), Error);
  try {
    (void)enumerate_deformation_maps(mpcanon_L(1, gf(5)), 100);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
    CHECK(std::string(e.what()).find("125") != std::string::npos);
  }
}

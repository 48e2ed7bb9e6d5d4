#include "bicross/deform.hpp"

#include <algorithm>
#include <map>

#include "bicross/families.hpp"
#include "bicross/iso.hpp"

namespace bicross {

namespace {

void require_shape(const MatchedPair& mp, const LinearMap& r) {
  if (r.rows() != mp.g.dim() || r.cols() != mp.h.dim() || r.field() != mp.h.field()) {
    raise(ErrorKind::DimensionMismatch,
          "deformation map must be " + std::to_string(mp.g.dim()) + "x" + std::to_string(mp.h.dim()));
  }
}

// lhs − rhs of the deformation condition on (e_i, e_j); reads only the columns the pair depends on.
Vector pair_defect(const MatchedPair& mp, const LinearMap& r, std::size_t i, std::size_t j) {
  const Vector ei = mp.h.unit(i);
  const Vector ej = mp.h.unit(j);
  const Vector ri = r.column(i);
  const Vector rj = r.column(j);
  Vector lhs = sub(r.apply(mp.h.basis_bracket(i, j)), mp.g.bracket(ri, rj));
  Vector rhs = r.apply(sub(mp.act_right(ej, ri), mp.act_right(ei, rj)));
  rhs = add(rhs, sub(mp.act_left(ei, rj), mp.act_left(ej, ri)));
  return sub(lhs, rhs);
}

void support(std::span<const Scalar> v, std::size_t& hi) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) hi = std::max(hi, k);
}

class DefmapSearch {
 public:
  explicit DefmapSearch(const MatchedPair& mp)
      : mp_(mp), dg_(mp.g.dim()), dh_(mp.h.dim()), r_(mp.h.field(), dg_, dh_), checks_(dh_) {
    // A pair is checked once every column it reads has been assigned.
    for (std::size_t i = 0; i < dh_; ++i)
      for (std::size_t j = i + 1; j < dh_; ++j) {
        std::size_t hi = j;
        support(mp.h.basis_bracket(i, j), hi);
        for (std::size_t a = 0; a < dg_; ++a) {
          support(mp.right[i][a], hi);
          support(mp.right[j][a], hi);
        }
        checks_[hi].emplace_back(i, j);
      }
  }

  std::vector<LinearMap> run() {
    if (dh_ == 0) return {r_};
    descend(0);
    return std::move(out_);
  }

 private:
  void descend(std::size_t col) {
    for (const auto& v : VectorEnumerator(mp_.h.field(), dg_)) {
      r_.set_column(col, v);
      const bool ok = std::all_of(checks_[col].begin(), checks_[col].end(), [&](const auto& p) {
        return is_zero_vector(pair_defect(mp_, r_, p.first, p.second));
      });
      if (!ok) continue;
      if (col + 1 == dh_) {
        out_.push_back(r_);
      } else {
        descend(col + 1);
      }
    }
    r_.set_column(col, zero_vector(mp_.h.field(), dg_));
  }

  const MatchedPair& mp_;
  std::size_t dg_, dh_;
  LinearMap r_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> checks_;
  std::vector<LinearMap> out_;
};

void require_odd(FieldDescriptor f) {
  if (f.characteristic() == 2) raise(ErrorKind::CharTwo, "the closed forms require characteristic != 2");
}

void require_nonzero(const Vector& v, const char* name) {
  if (v.empty()) raise(ErrorKind::BadParameter, std::string(name) + " must have length n >= 1");
  if (is_zero_vector(v)) raise(ErrorKind::BadParameter, std::string(name) + " must be nonzero");
}

FieldDescriptor field_of(const Vector& v) {
  if (v.empty()) raise(ErrorKind::BadParameter, "parameter vector must have length n >= 1");
  return v.front().field();
}

LinearMap row_map(FieldDescriptor f, std::size_t n) { return Matrix(f, 1, 2 * n + 1); }

std::vector<Vector> nonzero_vectors(FieldDescriptor f, std::size_t n) {
  std::vector<Vector> out;
  for (const auto& v : VectorEnumerator(f, n))
    if (!is_zero_vector(v)) out.push_back(v);
  return out;
}

std::vector<Scalar> all_scalars(FieldDescriptor f) {
  std::vector<Scalar> out;
  for (std::uint32_t c = 0; c < f.modulus(); ++c) out.push_back(Scalar::from_int(f, c));
  return out;
}

void require_finite(FieldDescriptor f) {
  if (!f.is_finite()) raise(ErrorKind::NotFinite, "closed-form families are listed only over GF(p)");
}

// Index helpers on the basis E_1..E_n, F_1..F_n, G.
struct LIdx {
  std::size_t n;
  [[nodiscard]] std::size_t E(std::size_t i) const { return i; }
  [[nodiscard]] std::size_t F(std::size_t i) const { return n + i; }
  [[nodiscard]] std::size_t G() const { return 2 * n; }
};

bool same_pair(const MatchedPair& a, const MatchedPair& b) {
  return a.g == b.g && a.h == b.h && a.left == b.left && a.right == b.right;
}

}  // namespace

bool is_deformation_map(const MatchedPair& mp, const LinearMap& r) {
  require_shape(mp, r);
  for (std::size_t i = 0; i < mp.h.dim(); ++i)
    for (std::size_t j = i + 1; j < mp.h.dim(); ++j)
      if (!is_zero_vector(pair_defect(mp, r, i, j))) return false;
  return true;
}

std::vector<LinearMap> enumerate_deformation_maps(const MatchedPair& mp, std::uint64_t budget) {
  const FieldDescriptor f = mp.h.field();
  if (!f.is_finite()) raise(ErrorKind::NotFinite, "deformation maps can only be enumerated over GF(p)");
  const auto count = checked_power(f.modulus(), mp.g.dim() * mp.h.dim());
  if (!count || *count > budget) {
    raise(ErrorKind::BudgetExceeded, "need " + (count ? std::to_string(*count) : std::string("> 2^64")) +
                                         " candidate maps, budget " + std::to_string(budget));
  }
  return DefmapSearch(mp).run();
}

LieAlgebra r_deformation(const MatchedPair& mp, const LinearMap& r) {
  if (!is_deformation_map(mp, r)) raise(ErrorKind::InvalidDeformationMap, "r violates the deformation condition");
  LieAlgebraBuilder b(mp.h.field(), mp.h.basis_names());
  for (std::size_t i = 0; i < mp.h.dim(); ++i)
    for (std::size_t j = i + 1; j < mp.h.dim(); ++j) {
      Vector v = mp.h.basis_bracket(i, j);
      v = add(v, mp.act_right(mp.h.unit(i), r.column(j)));
      v = sub(v, mp.act_right(mp.h.unit(j), r.column(i)));
      b.set(i, j, v);
    }
  return b.build();
}

LinearMap deformation_complement(const MatchedPair& mp, const LinearMap& r) {
  require_shape(mp, r);
  const std::size_t dg = mp.g.dim();
  const std::size_t dh = mp.h.dim();
  Matrix m(mp.h.field(), dg + dh, dh);
  m.set_block(0, 0, r);
  m.set_block(dg, 0, Matrix::identity(mp.h.field(), dh));
  return m;
}

// ---------------------------------------------------------------------------
// Closed forms

LinearMap defmap_L_a(const Vector& a) {
  const FieldDescriptor f = field_of(a);
  require_odd(f);
  require_nonzero(a, "a");
  const LIdx ix{a.size()};
  LinearMap r = row_map(f, ix.n);
  for (std::size_t i = 0; i < ix.n; ++i) r(0, ix.E(i)) = a[i];
  r(0, ix.G()) = Scalar::one(f);
  return r;
}

LinearMap defmap_L_bc(const Vector& b, const Scalar& c) {
  const FieldDescriptor f = field_of(b);
  require_odd(f);
  const LIdx ix{b.size()};
  LinearMap r = row_map(f, ix.n);
  for (std::size_t i = 0; i < ix.n; ++i) r(0, ix.F(i)) = b[i];
  r(0, ix.G()) = c;
  return r;
}

LinearMap defmap_m_a(const Vector& a) {
  const FieldDescriptor f = field_of(a);
  require_odd(f);
  require_nonzero(a, "a");
  const LIdx ix{a.size()};
  LinearMap r = row_map(f, ix.n);
  for (std::size_t i = 0; i < ix.n; ++i) r(0, ix.E(i)) = a[i];
  r(0, ix.G()) = a[0] - Scalar::one(f);
  return r;
}

LinearMap defmap_m_b(const Vector& b) {
  const FieldDescriptor f = field_of(b);
  require_odd(f);
  require_nonzero(b, "b");
  const LIdx ix{b.size()};
  LinearMap r = row_map(f, ix.n);
  for (std::size_t i = 0; i < ix.n; ++i) r(0, ix.F(i)) = b[i];
  r(0, ix.G()) = b.back() + Scalar::one(f);
  return r;
}

LinearMap defmap_m_c(std::size_t n, const Scalar& c) {
  require_odd(c.field());
  if (n == 0) raise(ErrorKind::BadParameter, "n must be positive");
  LinearMap r = row_map(c.field(), n);
  r(0, 2 * n) = c;
  return r;
}

std::vector<DeformationFamily> closed_form_defmaps_L(std::size_t n, FieldDescriptor field) {
  require_odd(field);
  require_finite(field);
  DeformationFamily fa{"r_a", {}};
  for (const auto& a : nonzero_vectors(field, n)) fa.maps.push_back(defmap_L_a(a));
  DeformationFamily fbc{"r_(b,c)", {}};
  for (const auto& b : VectorEnumerator(field, n))
    for (const auto& c : all_scalars(field)) fbc.maps.push_back(defmap_L_bc(b, c));
  return {fa, fbc};
}

std::vector<DeformationFamily> closed_form_defmaps_m(std::size_t n, FieldDescriptor field) {
  require_odd(field);
  require_finite(field);
  DeformationFamily fa{"r_a", {}};
  for (const auto& a : nonzero_vectors(field, n)) fa.maps.push_back(defmap_m_a(a));
  DeformationFamily fb{"r_b", {}};
  for (const auto& b : nonzero_vectors(field, n)) fb.maps.push_back(defmap_m_b(b));
  DeformationFamily fc{"r_c", {}};
  for (const auto& c : all_scalars(field)) fc.maps.push_back(defmap_m_c(n, c));
  return {fa, fb, fc};
}

// ---------------------------------------------------------------------------
// Bracket tables

LieAlgebra make_l_a(const Vector& a) {
  const FieldDescriptor f = field_of(a);
  require_nonzero(a, "a");
  const LIdx ix{a.size()};
  LieAlgebraBuilder b(f, l_basis_names(ix.n));
  for (std::size_t i = 0; i < ix.n; ++i) {
    for (std::size_t j = i + 1; j < ix.n; ++j) {
      b.add(ix.E(i), ix.E(j), ix.E(j), a[i]);
      b.add(ix.E(i), ix.E(j), ix.E(i), -a[j]);
    }
    for (std::size_t j = 0; j < ix.n; ++j) b.add(ix.E(i), ix.F(j), ix.F(j), -a[i]);
    b.add(ix.E(i), ix.G(), ix.G(), -a[i]);
  }
  return b.build();
}

LieAlgebra make_l_bc(const Vector& bv, const Scalar& c) {
  const FieldDescriptor f = field_of(bv);
  const Scalar one = Scalar::one(f);
  const LIdx ix{bv.size()};
  LieAlgebraBuilder b(f, l_basis_names(ix.n));
  for (std::size_t i = 0; i < ix.n; ++i) {
    for (std::size_t j = 0; j < ix.n; ++j) b.add(ix.E(i), ix.F(j), ix.E(i), -bv[j]);
    for (std::size_t j = i + 1; j < ix.n; ++j) {
      b.add(ix.F(i), ix.F(j), ix.F(i), bv[j]);
      b.add(ix.F(i), ix.F(j), ix.F(j), -bv[i]);
    }
    b.add(ix.E(i), ix.G(), ix.E(i), one - c);
    b.add(ix.F(i), ix.G(), ix.F(i), c - one);
    b.add(ix.F(i), ix.G(), ix.G(), -bv[i]);
  }
  return b.build();
}

LieAlgebra make_lp_b(const Vector& bv) {
  const FieldDescriptor f = field_of(bv);
  const LIdx ix{bv.size()};
  LieAlgebraBuilder b(f, l_basis_names(ix.n));
  for (std::size_t i = 0; i < ix.n; ++i) {
    for (std::size_t j = 0; j < ix.n; ++j) b.add(ix.E(i), ix.F(j), ix.E(i), -bv[j]);
    for (std::size_t j = i + 1; j < ix.n; ++j) {
      b.add(ix.F(i), ix.F(j), ix.F(i), bv[j]);
      b.add(ix.F(i), ix.F(j), ix.F(j), -bv[i]);
    }
    b.add(ix.E(i), ix.G(), ix.E(i), -Scalar::one(f));
    b.add(ix.F(i), ix.G(), ix.F(i), Scalar::one(f));
    b.add(ix.F(i), ix.G(), ix.G(), -bv[i]);
  }
  return b.build();
}

LieAlgebra make_lpp_b(const Vector& bv) { return make_l_bc(bv, Scalar::one(field_of(bv))); }

LieAlgebra make_lbar_a(const Vector& a) {
  const FieldDescriptor f = field_of(a);
  require_nonzero(a, "a");
  const LIdx ix{a.size()};
  const std::size_t n = ix.n;
  LieAlgebraBuilder b(f, l_basis_names(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      b.add(ix.E(i), ix.E(j), ix.E(i), a[j]);
      b.add(ix.E(i), ix.E(j), ix.E(j), -a[i]);
    }
    for (std::size_t j = 0; j < n; ++j) b.add(ix.E(i), ix.F(j), ix.F(j), -a[i]);
    b.add(ix.E(i), ix.G(), ix.E(i), a[0]);
    b.add(ix.E(i), ix.G(), ix.E(0), -a[i]);
    b.add(ix.E(i), ix.G(), ix.F(n - 1), -a[i]);
    b.add(ix.G(), ix.F(i), ix.F(i), Scalar::from_int(f, 2) - a[0]);
  }
  return b.build();
}

LieAlgebra make_lbarp_b(const Vector& bv) {
  const FieldDescriptor f = field_of(bv);
  require_nonzero(bv, "b");
  const LIdx ix{bv.size()};
  const std::size_t n = ix.n;
  LieAlgebraBuilder b(f, l_basis_names(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      b.add(ix.F(i), ix.F(j), ix.F(i), bv[j]);
      b.add(ix.F(i), ix.F(j), ix.F(j), -bv[i]);
    }
    for (std::size_t j = 0; j < n; ++j) b.add(ix.E(i), ix.F(j), ix.E(i), bv[j]);
    b.add(ix.E(i), ix.G(), ix.E(i), Scalar::from_int(f, 2) + bv[n - 1]);
    b.add(ix.G(), ix.F(i), ix.E(0), bv[i]);
    b.add(ix.G(), ix.F(i), ix.F(n - 1), bv[i]);
    b.add(ix.G(), ix.F(i), ix.F(i), -bv[n - 1]);
  }
  return b.build();
}

LieAlgebra make_lbarpp_c(std::size_t n, const Scalar& c) {
  if (n == 0) raise(ErrorKind::BadParameter, "n must be positive");
  const FieldDescriptor f = c.field();
  const Scalar one = Scalar::one(f);
  const LIdx ix{n};
  LieAlgebraBuilder b(f, l_basis_names(n));
  for (std::size_t i = 0; i < n; ++i) {
    b.add(ix.E(i), ix.G(), ix.E(i), one + c);
    b.add(ix.G(), ix.F(i), ix.F(i), one - c);
  }
  return b.build();
}

LieAlgebra make_h_a(const Scalar& a) {
  if (a.is_zero()) raise(ErrorKind::BadParameter, "a must be invertible");
  const FieldDescriptor f = a.field();
  const Scalar ai = a.inverse();
  const Scalar one = Scalar::one(f);
  const Scalar two = Scalar::from_int(f, 2);
  const Scalar three = Scalar::from_int(f, 3);
  LieAlgebraBuilder b(f, {"e1", "e2", "e3", "e4", "e5"});
  auto put = [&](std::size_t i, std::size_t j, std::initializer_list<std::pair<std::size_t, Scalar>> terms) {
    for (const auto& [k, c] : terms) b.add(i - 1, j - 1, k - 1, c);
  };
  put(1, 2, {{1, -ai}, {2, a}, {3, one}, {4, ai}});
  put(1, 3, {{4, -two}, {5, -a}});
  put(1, 4, {{4, a}});
  put(1, 5, {{4, one}, {5, two * a}});
  put(2, 3, {{5, ai}});
  put(2, 4, {{5, one}, {4, -ai}});
  put(2, 5, {{5, -two * ai}});
  put(3, 4, {{4, three}});
  put(3, 5, {{5, three}});
  return b.build();
}

LinearMap defmap_h5_a(const Scalar& a) {
  if (a.is_zero()) raise(ErrorKind::BadParameter, "a must be invertible");
  const FieldDescriptor f = a.field();
  Matrix r(f, 1, 5);
  r(0, 0) = a;
  r(0, 1) = -a.inverse();
  r(0, 2) = Scalar::from_int(f, 2);
  return r;
}

// ---------------------------------------------------------------------------
// Complements

std::optional<Scalar> eigenvalue_ratio_invariant(const LieAlgebra& algebra) {
  if (algebra.dim() != 3) return std::nullopt;
  const Subspace d = derived_algebra(algebra);
  if (d.dim() != 2 || !bracket_subspace(algebra, d, d).basis().empty()) return std::nullopt;
  std::size_t w = 0;
  while (d.contains(algebra.unit(w))) ++w;
  const FieldDescriptor f = algebra.field();
  Matrix m(f, 2, 2);
  for (std::size_t c = 0; c < 2; ++c) {
    const auto coords = d.coordinates(algebra.bracket(algebra.unit(w), d.basis()[c]));
    m(0, c) = (*coords)[0];
    m(1, c) = (*coords)[1];
  }
  const Scalar det = determinant(m);
  if (det.is_zero()) return std::nullopt;
  const Scalar tr = m(0, 0) + m(1, 1);
  return tr * tr / det;
}

ComplementReport classify_complements(const MatchedPair& mp, std::uint64_t budget, bool reverse) {
  const FieldDescriptor f = mp.h.field();
  ComplementReport rep;
  if (!f.is_finite()) {
    if (!same_pair(mp, mpcanon_m(1, f))) {
      raise(ErrorKind::NotFinite, "over Q only the canonical matched pair of m(4) has a registered classification");
    }
    // r_c deformations for c = 2, 3, …: invariant 4c²/(c² − 1) takes distinct values.
    std::map<std::string, std::size_t> seen;
    rep.certificate = "eigenvalue-ratio invariant of ad(w) on [L,L]:";
    for (int c = 2; c <= 9; ++c) {
      const LinearMap r = defmap_m_c(1, Scalar::from_int(f, c));
      LieAlgebra L = r_deformation(mp, r);
      const auto inv = eigenvalue_ratio_invariant(L);
      if (!inv || !seen.emplace(inv->to_string(), c).second) {
        raise(ErrorKind::BadParameter, "invariant failed to separate the sampled deformations");
      }
      rep.certificate += " c=" + std::to_string(c) + " -> " + inv->to_string();
      rep.class_of.push_back(rep.representatives.size());
      rep.maps.push_back(r);
      rep.representative_maps.push_back(r);
      rep.representatives.push_back(std::move(L));
      rep.class_sizes.push_back(1);
    }
    rep.certificate += "; pairwise distinct, so infinitely many classes";
    rep.deformation_count = rep.maps.size();
    return rep;
  }

  rep.maps = enumerate_deformation_maps(mp, budget);
  if (reverse) std::reverse(rep.maps.begin(), rep.maps.end());
  rep.deformation_count = rep.maps.size();
  std::vector<Fingerprint> fps;
  for (const auto& r : rep.maps) {
    LieAlgebra L = r_deformation(mp, r);
    const Fingerprint fp = fingerprint(L);
    std::optional<std::size_t> cls;
    for (std::size_t k = 0; k < rep.representatives.size() && !cls; ++k) {
      if (fps[k] != fp) continue;
      const IsoResult res = are_isomorphic(L, rep.representatives[k], budget);
      if (res.verdict == IsoResult::Verdict::Unknown) {
        raise(ErrorKind::BudgetExceeded, "isomorphism undecided: " + res.certificate);
      }
      if (res.verdict == IsoResult::Verdict::Yes) cls = k;
    }
    if (!cls) {
      cls = rep.representatives.size();
      rep.representatives.push_back(std::move(L));
      rep.representative_maps.push_back(r);
      rep.class_sizes.push_back(0);
      fps.push_back(fp);
    }
    ++rep.class_sizes[*cls];
    rep.class_of.push_back(*cls);
  }
  rep.index = rep.representatives.size();
  return rep;
}

}  // namespace bicross

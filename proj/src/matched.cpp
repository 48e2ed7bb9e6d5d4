#include "bicross/matched.hpp"

#include <algorithm>
#include <sstream>

namespace bicross {

namespace {

std::vector<std::vector<Vector>> zero_table(std::size_t rows, std::size_t cols, FieldDescriptor f, std::size_t len) {
  return std::vector<std::vector<Vector>>(rows, std::vector<Vector>(cols, zero_vector(f, len)));
}

void require_shapes(const MatchedPair& mp) {
  if (mp.g.field() != mp.h.field()) raise(ErrorKind::FieldMismatch, "matched pair algebras over different fields");
  const auto ok = [](const auto& table, std::size_t rows, std::size_t cols, std::size_t len) {
    if (table.size() != rows) return false;
    for (const auto& row : table) {
      if (row.size() != cols) return false;
      for (const auto& v : row)
        if (v.size() != len) return false;
    }
    return true;
  };
  if (!ok(mp.right, mp.h.dim(), mp.g.dim(), mp.h.dim()) || !ok(mp.left, mp.h.dim(), mp.g.dim(), mp.g.dim())) {
    raise(ErrorKind::DimensionMismatch, "action tables do not match dim h x dim g");
  }
}

std::vector<std::string> merged_names(const LieAlgebra& g, const LieAlgebra& h) {
  std::vector<std::string> names = g.basis_names();
  for (auto n : h.basis_names()) {
    while (std::find(names.begin(), names.end(), n) != names.end()) n += "'";
    names.push_back(n);
  }
  return names;
}

std::vector<std::string> subspace_names(const LieAlgebra& ambient, const Subspace& s, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const Vector& v = s.basis()[k];
    const auto nz = std::count_if(v.begin(), v.end(), [](const Scalar& c) { return !c.is_zero(); });
    const auto it = std::find_if(v.begin(), v.end(), [](const Scalar& c) { return !c.is_zero(); });
    if (nz == 1 && it->is_one()) {
      out.push_back(ambient.name(static_cast<std::size_t>(it - v.begin())));
    } else {
      out.push_back(prefix + std::to_string(k + 1));
    }
  }
  return out;
}

// Structure constants of a subalgebra in its own basis.
LieAlgebra induced_algebra(const LieAlgebra& ambient, const Subspace& s, std::vector<std::string> names) {
  LieAlgebraBuilder b(ambient.field(), std::move(names));
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      const auto c = s.coordinates(ambient.bracket(s.basis()[i], s.basis()[j]));
      if (!c) raise(ErrorKind::NotAFactorization, "subspace is not a subalgebra");
      b.set(i, j, *c);
    }
  return b.build();
}

}  // namespace

MatchedPair MatchedPair::trivial(LieAlgebra g, LieAlgebra h) {
  if (g.field() != h.field()) raise(ErrorKind::FieldMismatch, "matched pair algebras over different fields");
  MatchedPair mp;
  mp.right = zero_table(h.dim(), g.dim(), h.field(), h.dim());
  mp.left = zero_table(h.dim(), g.dim(), h.field(), g.dim());
  mp.g = std::move(g);
  mp.h = std::move(h);
  return mp;
}

Vector MatchedPair::act_right(std::span<const Scalar> x, std::span<const Scalar> a) const {
  Vector out = h.zero();
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (!a[j].is_zero()) axpy(x[i] * a[j], right[i][j], out);
    }
  }
  return out;
}

Vector MatchedPair::act_left(std::span<const Scalar> x, std::span<const Scalar> a) const {
  Vector out = g.zero();
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (!a[j].is_zero()) axpy(x[i] * a[j], left[i][j], out);
    }
  }
  return out;
}

void MatchedPair::set_right(std::string_view x, std::string_view a, std::span<const Scalar> out) {
  if (out.size() != h.dim()) raise(ErrorKind::DimensionMismatch, "right action value must lie in h");
  right[h.require_index(x)][g.require_index(a)] = Vector(out.begin(), out.end());
}

void MatchedPair::set_left(std::string_view x, std::string_view a, std::span<const Scalar> out) {
  if (out.size() != g.dim()) raise(ErrorKind::DimensionMismatch, "left action value must lie in g");
  left[h.require_index(x)][g.require_index(a)] = Vector(out.begin(), out.end());
}

std::string_view to_string(MatchedPairViolation::Axiom a) noexcept {
  switch (a) {
    case MatchedPairViolation::Axiom::LeftModule: return "left module";
    case MatchedPairViolation::Axiom::RightModule: return "right module";
    case MatchedPairViolation::Axiom::LeftCompatibility: return "x > [a,b] compatibility";
    case MatchedPairViolation::Axiom::RightCompatibility: return "[x,y] < a compatibility";
  }
  return "?";
}

std::string MatchedPairViolation::describe(const MatchedPair& mp) const {
  std::ostringstream os;
  os << to_string(axiom) << " fails at ";
  switch (axiom) {
    case Axiom::LeftModule:
    case Axiom::RightCompatibility:
      os << "x=" << mp.h.name(x) << ", y=" << mp.h.name(y) << ", a=" << mp.g.name(a);
      break;
    case Axiom::RightModule:
    case Axiom::LeftCompatibility:
      os << "x=" << mp.h.name(x) << ", a=" << mp.g.name(y) << ", b=" << mp.g.name(a);
      break;
  }
  os << " (lhs - rhs = " << to_string(value) << ")";
  return os.str();
}

std::vector<MatchedPairViolation> check_matched_pair(const MatchedPair& mp) {
  require_shapes(mp);
  using Axiom = MatchedPairViolation::Axiom;
  const LieAlgebra& g = mp.g;
  const LieAlgebra& h = mp.h;
  std::vector<MatchedPairViolation> out;

  for (std::size_t x = 0; x < h.dim(); ++x)
    for (std::size_t y = x + 1; y < h.dim(); ++y) {
      const Vector xy = h.basis_bracket(x, y);
      for (std::size_t a = 0; a < g.dim(); ++a) {
        const Vector ea = g.unit(a);
        const Vector ex = h.unit(x);
        const Vector ey = h.unit(y);
        // [x,y] ▷ a = x ▷ (y ▷ a) − y ▷ (x ▷ a)
        Vector lhs = mp.act_left(xy, ea);
        Vector rhs = sub(mp.act_left(ex, mp.left[y][a]), mp.act_left(ey, mp.left[x][a]));
        if (lhs != rhs) out.push_back({Axiom::LeftModule, x, y, a, sub(lhs, rhs)});
        // [x,y] ◁ a = [x, y ◁ a] + [x ◁ a, y] + x ◁ (y ▷ a) − y ◁ (x ▷ a)
        lhs = mp.act_right(xy, ea);
        rhs = add(h.bracket(ex, mp.right[y][a]), h.bracket(mp.right[x][a], ey));
        rhs = add(rhs, mp.act_right(ex, mp.left[y][a]));
        rhs = sub(rhs, mp.act_right(ey, mp.left[x][a]));
        if (lhs != rhs) out.push_back({Axiom::RightCompatibility, x, y, a, sub(lhs, rhs)});
      }
    }

  for (std::size_t x = 0; x < h.dim(); ++x) {
    const Vector ex = h.unit(x);
    for (std::size_t a = 0; a < g.dim(); ++a)
      for (std::size_t b = a + 1; b < g.dim(); ++b) {
        const Vector ab = g.basis_bracket(a, b);
        const Vector ea = g.unit(a);
        const Vector eb = g.unit(b);
        // x ◁ [a,b] = (x ◁ a) ◁ b − (x ◁ b) ◁ a
        Vector lhs = mp.act_right(ex, ab);
        Vector rhs = sub(mp.act_right(mp.right[x][a], eb), mp.act_right(mp.right[x][b], ea));
        if (lhs != rhs) out.push_back({Axiom::RightModule, x, a, b, sub(lhs, rhs)});
        // x ▷ [a,b] = [x ▷ a, b] + [a, x ▷ b] + (x ◁ a) ▷ b − (x ◁ b) ▷ a
        lhs = mp.act_left(ex, ab);
        rhs = add(g.bracket(mp.left[x][a], eb), g.bracket(ea, mp.left[x][b]));
        rhs = add(rhs, mp.act_left(mp.right[x][a], eb));
        rhs = sub(rhs, mp.act_left(mp.right[x][b], ea));
        if (lhs != rhs) out.push_back({Axiom::LeftCompatibility, x, a, b, sub(lhs, rhs)});
      }
  }
  return out;
}

LieAlgebra bicrossed_product(const MatchedPair& mp) {
  const auto violations = check_matched_pair(mp);
  if (!violations.empty()) raise(ErrorKind::InvalidMatchedPair, violations.front().describe(mp));
  const std::size_t dg = mp.g.dim();
  const std::size_t dh = mp.h.dim();
  const FieldDescriptor f = mp.g.field();
  LieAlgebraBuilder b(f, merged_names(mp.g, mp.h));
  auto embed = [&](const Vector& gpart, const Vector& hpart) {
    Vector v = zero_vector(f, dg + dh);
    std::copy(gpart.begin(), gpart.end(), v.begin());
    std::copy(hpart.begin(), hpart.end(), v.begin() + static_cast<std::ptrdiff_t>(dg));
    return v;
  };
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = i + 1; j < dg; ++j) b.set(i, j, embed(mp.g.basis_bracket(i, j), mp.h.zero()));
  for (std::size_t x = 0; x < dh; ++x)
    for (std::size_t y = x + 1; y < dh; ++y) b.set(dg + x, dg + y, embed(mp.g.zero(), mp.h.basis_bracket(x, y)));
  // [x, a] = x ▷ a + x ◁ a
  for (std::size_t x = 0; x < dh; ++x)
    for (std::size_t a = 0; a < dg; ++a) b.set(dg + x, a, embed(mp.left[x][a], mp.right[x][a]));
  return b.build();
}

LinearMap bicrossed_involution(const MatchedPair& mp) {
  const std::size_t dg = mp.g.dim();
  const std::size_t d = dg + mp.h.dim();
  Matrix f = Matrix::identity(mp.g.field(), d);
  for (std::size_t i = dg; i < d; ++i) f(i, i) = -Scalar::one(mp.g.field());
  return f;
}

std::optional<std::string> factorization_defect(const Factorization& f) {
  const std::size_t n = f.ambient.dim();
  if (f.gsub.ambient_dim() != n || f.hsub.ambient_dim() != n) return "subspaces do not live in the ambient algebra";
  if (f.gsub.field() != f.ambient.field() || f.hsub.field() != f.ambient.field()) return "field mismatch";
  if (!f.gsub.is_subalgebra(f.ambient)) return "g is not a subalgebra";
  if (!f.hsub.is_subalgebra(f.ambient)) return "h is not a subalgebra";
  if (subspace_intersection(f.gsub, f.hsub).dim() != 0) return "g and h intersect nontrivially";
  if (f.gsub.dim() + f.hsub.dim() != n) return "g + h is not the whole algebra";
  return std::nullopt;
}

LieAlgebra adapted_algebra(const Factorization& f) {
  if (auto d = factorization_defect(f)) raise(ErrorKind::NotAFactorization, *d);
  std::vector<Vector> cols = f.gsub.basis();
  cols.insert(cols.end(), f.hsub.basis().begin(), f.hsub.basis().end());
  const LieAlgebra g = induced_algebra(f.ambient, f.gsub, subspace_names(f.ambient, f.gsub, "g"));
  const LieAlgebra h = induced_algebra(f.ambient, f.hsub, subspace_names(f.ambient, f.hsub, "h"));
  return change_basis(f.ambient, Matrix::from_columns(f.ambient.field(), cols, f.ambient.dim()), merged_names(g, h));
}

MatchedPair canonical_matched_pair(const Factorization& f) {
  if (auto d = factorization_defect(f)) raise(ErrorKind::NotAFactorization, *d);
  const LieAlgebra& L = f.ambient;
  const std::size_t dg = f.gsub.dim();
  const std::size_t dh = f.hsub.dim();
  MatchedPair mp = MatchedPair::trivial(induced_algebra(L, f.gsub, subspace_names(L, f.gsub, "g")),
                                        induced_algebra(L, f.hsub, subspace_names(L, f.hsub, "h")));
  std::vector<Vector> cols = f.gsub.basis();
  cols.insert(cols.end(), f.hsub.basis().begin(), f.hsub.basis().end());
  const auto inv = inverse(Matrix::from_columns(L.field(), cols, L.dim()));
  if (!inv) raise(ErrorKind::NotAFactorization, "g + h is not direct");
  for (std::size_t x = 0; x < dh; ++x)
    for (std::size_t a = 0; a < dg; ++a) {
      const Vector c = inv->apply(L.bracket(f.hsub.basis()[x], f.gsub.basis()[a]));
      mp.left[x][a] = Vector(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(dg));
      mp.right[x][a] = Vector(c.begin() + static_cast<std::ptrdiff_t>(dg), c.end());
    }
  return mp;
}

MatchedPair matched_pair_from_twisted(const LieAlgebra& h, const TwistedDerivation& t, const std::string& name) {
  if (!is_twisted_derivation(h, t)) raise(ErrorKind::InvalidTwistedDerivation, "(lambda, Delta) is not a twisted derivation");
  const FieldDescriptor f = h.field();
  MatchedPair mp = MatchedPair::trivial(LieAlgebra(f, {name}), h);
  for (std::size_t x = 0; x < h.dim(); ++x) {
    mp.left[x][0] = Vector{t.lambda[x]};
    mp.right[x][0] = t.delta.column(x);
  }
  return mp;
}

LieAlgebra h_lambda_delta(const LieAlgebra& h, const TwistedDerivation& t, const std::string& name) {
  return bicrossed_product(matched_pair_from_twisted(h, t, name));
}

}  // namespace bicross

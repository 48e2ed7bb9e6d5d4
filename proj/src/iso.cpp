#include "bicross/iso.hpp"

#include <algorithm>
#include <sstream>

#include "bicross/derivations.hpp"

namespace bicross {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

struct BudgetHit {};

// Characteristic subspaces of an algebra, in a fixed order shared by both sides of a search.
std::vector<Subspace> characteristic_subspaces(const LieAlgebra& L) {
  std::vector<Subspace> out;
  for (auto& s : derived_series(L)) out.push_back(std::move(s));
  for (auto& s : lower_central_series(L)) out.push_back(std::move(s));
  out.push_back(center(L));
  return out;
}

// Automorphism-invariant data of a single element: membership in the characteristic subspaces
// and the ranks of ad(x)², ad(x) − c for every scalar c (only the c = 0 rank over Q).
std::vector<std::size_t> element_signature(const LieAlgebra& L, const std::vector<Subspace>& chars,
                                           std::span<const Scalar> x) {
  std::vector<std::size_t> sig;
  for (const auto& s : chars) sig.push_back(s.contains(x) ? 1 : 0);
  const Matrix ad = L.ad(x);
  sig.push_back(rank(ad * ad));
  const FieldDescriptor f = L.field();
  const std::uint32_t ncases = f.is_finite() && f.modulus() <= 31 ? f.modulus() : 1;
  const Matrix id = Matrix::identity(f, L.dim());
  for (std::uint32_t c = 0; c < ncases; ++c) sig.push_back(rank(ad - Scalar::from_int(f, c) * id));
  return sig;
}

// Complete backtracking search for isomorphisms a -> b over GF(p). Each node imposes every
// bracket relation with an assigned endpoint as a linear system on the unassigned images, then
// branches on the unassigned image with the smallest solution space.
class IsoSearch {
 public:
  IsoSearch(const LieAlgebra& a, const LieAlgebra& b, std::uint64_t budget, bool collect_all)
      : a_(a), b_(b), n_(a.dim()), f_(a.field()), budget_(budget), all_(collect_all),
        chars_a_(characteristic_subspaces(a)), chars_b_(characteristic_subspaces(b)) {
    for (std::size_t i = 0; i < n_; ++i) {
      sig_a_.push_back(element_signature(a, chars_a_, a.unit(i)));
      rank_a_.push_back(rank(a.ad_basis(i)));
    }
    sc_a_.assign(n_, std::vector<Vector>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) sc_a_[i][j] = a.basis_bracket(i, j);
    img_.assign(n_, std::nullopt);
  }

  // false when the budget was exhausted before the search finished
  bool run() {
    if (chars_a_.size() != chars_b_.size()) return true;  // different series lengths: no map
    try {
      descend(0);
    } catch (const BudgetHit&) {
      return false;
    }
    return true;
  }

  [[nodiscard]] const std::vector<LinearMap>& found() const { return found_; }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

 private:
  void descend(std::size_t depth) {
    if (!all_ && !found_.empty()) return;
    if (depth == n_) {
      std::vector<Vector> cols;
      for (const auto& c : img_) cols.push_back(*c);
      LinearMap m = Matrix::from_columns(f_, cols, n_);
      if (verify_iso(a_, b_, m)) found_.push_back(std::move(m));
      return;
    }

    // Unknowns: coordinates of every unassigned image.
    std::vector<std::size_t> slot(n_, SIZE_MAX);
    std::size_t unknowns = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (!img_[i]) slot[i] = unknowns++;
    const std::size_t nv = unknowns * n_;

    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (!img_[i] && !img_[j]) continue;
        // sum_k c_ij^k φ(e_k) − [φ e_i, φ e_j] = 0
        std::vector<Vector> eq(n_, zero_vector(f_, nv));
        Vector constant = b_.zero();
        for (std::size_t k = 0; k < n_; ++k) {
          const Scalar& c = sc_a_[i][j][k];
          if (c.is_zero()) continue;
          if (img_[k]) {
            axpy(c, *img_[k], constant);
          } else {
            for (std::size_t r = 0; r < n_; ++r) eq[r][slot[k] * n_ + r] += c;
          }
        }
        if (img_[i] && img_[j]) {
          constant = sub(constant, b_.bracket(*img_[i], *img_[j]));
        } else {
          const bool left_known = img_[i].has_value();
          const std::size_t known = left_known ? i : j;
          const std::size_t free = left_known ? j : i;
          Matrix ad = b_.ad(*img_[known]);
          if (!left_known) ad = -ad;  // [φe_i, φe_j] = −ad(φe_j) φe_i
          for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t s = 0; s < n_; ++s) eq[r][slot[free] * n_ + s] -= ad(r, s);
        }
        for (std::size_t r = 0; r < n_; ++r) {
          if (is_zero_vector(eq[r])) {
            if (!constant[r].is_zero()) return;  // inconsistent
            continue;
          }
          rows.push_back(std::move(eq[r]));
          rhs.push_back(-constant[r]);
        }
      }

    LinearSolution sol{zero_vector(f_, nv), {}};
    if (rows.empty()) {
      for (std::size_t k = 0; k < nv; ++k) sol.kernel.push_back(unit_vector(f_, nv, k));
    } else {
      auto s = solve_linear(Matrix::from_rows(f_, rows, nv), rhs);
      if (!s) return;
      sol = std::move(*s);
    }

    // Branch on the most constrained image; ties prefer larger ad-rank, then lower index.
    std::size_t t = SIZE_MAX;
    std::vector<Vector> directions;
    Vector base;
    for (std::size_t u = 0; u < n_; ++u) {
      if (img_[u]) continue;
      const std::size_t off = slot[u] * n_;
      std::vector<Vector> proj;
      for (const auto& k : sol.kernel) {
        proj.emplace_back(k.begin() + static_cast<std::ptrdiff_t>(off), k.begin() + static_cast<std::ptrdiff_t>(off + n_));
      }
      auto dirs = row_space_basis(f_, proj, n_);
      const bool better = t == SIZE_MAX || dirs.size() < directions.size() ||
                          (dirs.size() == directions.size() && rank_a_[u] > rank_a_[t]);
      if (better) {
        t = u;
        directions = std::move(dirs);
        base.assign(sol.particular.begin() + static_cast<std::ptrdiff_t>(off),
                    sol.particular.begin() + static_cast<std::ptrdiff_t>(off + n_));
      }
    }

    std::vector<Vector> assigned;
    for (const auto& c : img_)
      if (c) assigned.push_back(*c);
    const Subspace span(f_, n_, assigned);

    for (const auto& coeffs : VectorEnumerator(f_, directions.size())) {
      Vector cand = base;
      for (std::size_t k = 0; k < directions.size(); ++k) axpy(coeffs[k], directions[k], cand);
      if (is_zero_vector(cand) || span.contains(cand)) continue;
      if (element_signature(b_, chars_b_, cand) != sig_a_[t]) continue;
      if (++nodes_ > budget_) throw BudgetHit{};
      img_[t] = std::move(cand);
      descend(depth + 1);
      img_[t].reset();
      if (!all_ && !found_.empty()) return;
    }
  }

  const LieAlgebra& a_;
  const LieAlgebra& b_;
  std::size_t n_;
  FieldDescriptor f_;
  std::uint64_t budget_;
  bool all_;
  std::vector<Subspace> chars_a_, chars_b_;
  std::vector<std::vector<std::size_t>> sig_a_;
  std::vector<std::size_t> rank_a_;
  std::vector<std::vector<Vector>> sc_a_;
  std::vector<std::optional<Vector>> img_;
  std::vector<LinearMap> found_;
  std::uint64_t nodes_ = 0;
};

void require_perfect(const LieAlgebra& h) {
  if (!is_perfect(h)) raise(ErrorKind::NotPerfect, "the algebra is not perfect");
}

}  // namespace

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "dim " << dim << ", derived " << join(derived) << ", lower central " << join(lower_central) << ", center "
     << center_dim << ", abelianization " << abelianization_dim << ", Killing rank " << killing_rank << ", Der "
     << derivation_dim;
  return os.str();
}

Fingerprint fingerprint(const LieAlgebra& algebra) {
  Fingerprint fp;
  fp.dim = algebra.dim();
  fp.derived = dims(derived_series(algebra));
  fp.lower_central = dims(lower_central_series(algebra));
  fp.center_dim = center(algebra).dim();
  fp.abelianization_dim = algebra.dim() - derived_algebra(algebra).dim();
  fp.killing_rank = rank(killing_form(algebra));
  fp.derivation_dim = derivation_space(algebra).size();
  return fp;
}

bool is_lie_map(const LieAlgebra& from, const LieAlgebra& to, const LinearMap& m) {
  if (m.rows() != to.dim() || m.cols() != from.dim() || from.field() != to.field()) return false;
  for (std::size_t i = 0; i < from.dim(); ++i)
    for (std::size_t j = i + 1; j < from.dim(); ++j) {
      if (m.apply(from.basis_bracket(i, j)) != to.bracket(m.column(i), m.column(j))) return false;
    }
  return true;
}

bool verify_iso(const LieAlgebra& from, const LieAlgebra& to, const LinearMap& m) {
  return from.dim() == to.dim() && is_lie_map(from, to, m) && !determinant(m).is_zero();
}

std::string_view to_string(IsoResult::Verdict v) noexcept {
  switch (v) {
    case IsoResult::Verdict::Yes: return "Yes";
    case IsoResult::Verdict::No: return "No";
    case IsoResult::Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

IsoResult are_isomorphic(const LieAlgebra& a, const LieAlgebra& b, std::uint64_t budget) {
  IsoResult res;
  if (a.field() != b.field()) {
    res.verdict = IsoResult::Verdict::No;
    res.certificate = "different fields";
    return res;
  }
  if (a.dim() != b.dim()) {
    res.verdict = IsoResult::Verdict::No;
    res.certificate = "different dimensions";
    return res;
  }
  const Fingerprint fa = fingerprint(a);
  const Fingerprint fb = fingerprint(b);
  if (fa != fb) {
    res.verdict = IsoResult::Verdict::No;
    res.certificate = "fingerprints differ: (" + fa.to_string() + ") vs (" + fb.to_string() + ")";
    return res;
  }
  const LinearMap id = Matrix::identity(a.field(), a.dim());
  if (verify_iso(a, b, id)) {
    res.verdict = IsoResult::Verdict::Yes;
    res.map = id;
    return res;
  }
  if (!a.field().is_finite()) {
    res.verdict = IsoResult::Verdict::Unknown;
    res.certificate = "equal fingerprints; no complete search over Q";
    return res;
  }
  IsoSearch search(a, b, budget, false);
  const bool complete = search.run();
  res.nodes = search.nodes();
  if (!search.found().empty()) {
    res.verdict = IsoResult::Verdict::Yes;
    res.map = search.found().front();
  } else if (complete) {
    res.verdict = IsoResult::Verdict::No;
    res.certificate = "exhaustive search found no isomorphism (" + std::to_string(res.nodes) + " nodes)";
  } else {
    res.verdict = IsoResult::Verdict::Unknown;
    res.certificate = "search budget of " + std::to_string(budget) + " nodes exhausted";
  }
  return res;
}

std::vector<LinearMap> aut_enumerate(const LieAlgebra& algebra, std::uint64_t budget) {
  if (!algebra.field().is_finite()) raise(ErrorKind::NotFinite, "automorphisms can only be enumerated over GF(p)");
  IsoSearch search(algebra, algebra, budget, true);
  if (!search.run()) raise(ErrorKind::BudgetExceeded, "automorphism search exceeded " + std::to_string(budget) + " nodes");
  return search.found();
}

// ---------------------------------------------------------------------------
// Triples

bool operator<(const AutTriple& a, const AutTriple& b) {
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  if (a.h0 != b.h0) return lex_less(a.h0, b.h0);
  return a.v < b.v;
}

bool is_valid_triple(const LieAlgebra& h, const LinearMap& delta, const LinearMap& delta_prime, const AutTriple& t) {
  require_perfect(h);
  if (t.h0.size() != h.dim()) raise(ErrorKind::DimensionMismatch, "h0 length");
  if (!is_lie_map(h, h, t.v)) return false;
  const LinearMap lhs = t.v * delta - t.alpha * (delta_prime * t.v);
  for (std::size_t x = 0; x < h.dim(); ++x) {
    if (lhs.column(x) != h.bracket(t.v.column(x), t.h0)) return false;
  }
  return true;
}

LinearMap phi_from_triple(const LieAlgebra& h, const AutTriple& t) {
  const std::size_t d = h.dim();
  Matrix m(h.field(), d + 1, d + 1);
  m(0, 0) = t.alpha;
  for (std::size_t r = 0; r < d; ++r) m(r + 1, 0) = t.h0[r];
  m.set_block(1, 1, t.v);
  return m;
}

AutTriple aut_multiply(const AutTriple& a, const AutTriple& b) {
  return {a.alpha * b.alpha, add(scaled(b.alpha, a.h0), a.v.apply(b.h0)), a.v * b.v};
}

AutTriple aut_inverse(const AutTriple& t) {
  if (t.alpha.is_zero()) raise(ErrorKind::InvalidTriple, "alpha must be nonzero");
  const auto vinv = inverse(t.v);
  if (!vinv) raise(ErrorKind::InvalidTriple, "v must be invertible");
  const Scalar ainv = t.alpha.inverse();
  return {ainv, scaled(-ainv, vinv->apply(t.h0)), *vinv};
}

AutTriple aut_identity(const LieAlgebra& h) {
  return {Scalar::one(h.field()), h.zero(), Matrix::identity(h.field(), h.dim())};
}

SemidirectElement semidirect_embed(const AutTriple& t) {
  if (t.alpha.is_zero()) raise(ErrorKind::InvalidTriple, "alpha must be nonzero");
  return {scaled(t.alpha.inverse(), t.h0), t.alpha, t.v};
}

SemidirectElement semidirect_multiply(const SemidirectElement& a, const SemidirectElement& b) {
  return {add(a.h, scaled(a.alpha.inverse(), a.v.apply(b.h))), a.alpha * b.alpha, a.v * b.v};
}

std::vector<AutTriple> enumerate_aut_triples(const LieAlgebra& h, const LinearMap& delta, std::uint64_t budget) {
  const FieldDescriptor f = h.field();
  if (!f.is_finite()) raise(ErrorKind::NotFinite, "triples can only be enumerated over GF(p)");
  require_perfect(h);
  const std::size_t d = h.dim();
  const auto auts = aut_enumerate(h, budget);
  std::vector<AutTriple> out;
  for (const auto& v : auts) {
    // [v(e_x), h0] = sum_k h0_k [v(e_x), e_k]
    Matrix sys(f, d * d, d);
    for (std::size_t x = 0; x < d; ++x) sys.set_block(x * d, 0, h.ad(v.column(x)));
    for (std::uint32_t a = 1; a < f.modulus(); ++a) {
      const Scalar alpha = Scalar::from_int(f, a);
      const LinearMap lhs = v * delta - alpha * (delta * v);
      Vector rhs;
      for (std::size_t x = 0; x < d; ++x) {
        const Vector c = lhs.column(x);
        rhs.insert(rhs.end(), c.begin(), c.end());
      }
      const auto sol = solve_linear(sys, rhs);
      if (!sol) continue;
      for (const auto& coeffs : VectorEnumerator(f, sol->kernel.size())) {
        Vector h0 = sol->particular;
        for (std::size_t k = 0; k < coeffs.size(); ++k) axpy(coeffs[k], sol->kernel[k], h0);
        if (out.size() >= budget) raise(ErrorKind::BudgetExceeded, "triple enumeration exceeded budget");
        out.push_back({alpha, std::move(h0), v});
      }
    }
  }
  return out;
}

bool gcheck_inner(const LieAlgebra& h, std::span<const Scalar> x0, const AutTriple& t) {
  Vector w = t.v.apply(x0);
  axpy(-t.alpha, x0, w);
  w = add(w, t.h0);
  return center(h).contains(w);
}

}  // namespace bicross

#include "bicross/liecore.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bicross {

// ---------------------------------------------------------------------------
// LieAlgebra

LieAlgebra::LieAlgebra(FieldDescriptor field, std::vector<std::string> basis_names)
    : field_(field), names_(std::move(basis_names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) raise(ErrorKind::Format, "empty basis name");
    if (!seen.insert(n).second) raise(ErrorKind::Format, "duplicate basis name '" + n + "'");
  }
  const std::size_t d = names_.size();
  upper_.assign(d * (d == 0 ? 0 : d - 1) / 2, zero_vector(field_, d));
}

std::optional<std::size_t> LieAlgebra::index_of(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t LieAlgebra::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  raise(ErrorKind::BadParameter, "unknown basis element '" + std::string(name) + "'");
}

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const noexcept {
  const std::size_t d = dim();
  return i * d - i * (i + 1) / 2 + (j - i - 1);
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) raise(ErrorKind::DimensionMismatch, "basis index out of range");
  if (i == j) return zero();
  if (i < j) return upper_[pair_index(i, j)];
  Vector v = upper_[pair_index(j, i)];
  for (auto& x : v) x = -x;
  return v;
}

Vector LieAlgebra::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
  const std::size_t d = dim();
  if (x.size() != d || y.size() != d) {
    raise(ErrorKind::DimensionMismatch, "bracket arguments must have length " + std::to_string(d));
  }
  Vector out = zero();
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j || y[j].is_zero()) continue;
      const Scalar c = x[i] * y[j];
      if (i < j) {
        axpy(c, upper_[pair_index(i, j)], out);
      } else {
        axpy(-c, upper_[pair_index(j, i)], out);
      }
    }
  }
  return out;
}

Matrix LieAlgebra::ad(std::span<const Scalar> x) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, bracket(x, unit(j)));
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const { return ad(unit(i)); }

bool LieAlgebra::is_abelian() const noexcept {
  return std::all_of(upper_.begin(), upper_.end(), [](const Vector& v) { return is_zero_vector(v); });
}

LieAlgebra LieAlgebra::renamed(std::vector<std::string> names) const {
  if (names.size() != dim()) raise(ErrorKind::DimensionMismatch, "renamed: wrong number of names");
  LieAlgebra out(field_, std::move(names));
  out.upper_ = upper_;
  return out;
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  return a.field_ == b.field_ && a.names_ == b.names_ && a.upper_ == b.upper_;
}

LieAlgebraBuilder::LieAlgebraBuilder(FieldDescriptor field, std::vector<std::string> basis_names)
    : algebra_(field, std::move(basis_names)) {}

LieAlgebraBuilder& LieAlgebraBuilder::set(std::size_t i, std::size_t j, std::span<const Scalar> out) {
  const std::size_t d = algebra_.dim();
  if (i >= d || j >= d || out.size() != d) raise(ErrorKind::DimensionMismatch, "builder set");
  if (i == j) {
    if (!is_zero_vector(out)) raise(ErrorKind::BadParameter, "[e_i, e_i] must vanish");
    return *this;
  }
  if (i < j) {
    algebra_.upper_[algebra_.pair_index(i, j)] = Vector(out.begin(), out.end());
  } else {
    algebra_.upper_[algebra_.pair_index(j, i)] = scaled(-Scalar::one(field()), out);
  }
  return *this;
}

LieAlgebraBuilder& LieAlgebraBuilder::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  const std::size_t d = algebra_.dim();
  if (i >= d || j >= d || k >= d) raise(ErrorKind::DimensionMismatch, "builder add");
  if (i == j) {
    if (!c.is_zero()) raise(ErrorKind::BadParameter, "[e_i, e_i] must vanish");
    return *this;
  }
  if (i < j) {
    algebra_.upper_[algebra_.pair_index(i, j)][k] += c;
  } else {
    algebra_.upper_[algebra_.pair_index(j, i)][k] -= c;
  }
  return *this;
}

LieAlgebraBuilder& LieAlgebraBuilder::set(std::string_view a, std::string_view b,
                                          std::initializer_list<std::pair<std::string_view, long long>> terms) {
  Vector out = algebra_.zero();
  for (const auto& [name, c] : terms) out[index(name)] += Scalar::from_int(field(), c);
  return set(index(a), index(b), out);
}

bool equal_up_to_basis_order(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.field() != b.field() || a.dim() != b.dim()) return false;
  std::vector<std::size_t> to_b(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto j = b.index_of(a.name(i));
    if (!j) return false;
    to_b[i] = *j;
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const Vector va = a.basis_bracket(i, j);
      const Vector vb = b.basis_bracket(to_b[i], to_b[j]);
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (va[k] != vb[to_b[k]]) return false;
      }
    }
  }
  return true;
}

std::vector<JacobiViolation> check_jacobi(const LieAlgebra& algebra) {
  std::vector<JacobiViolation> out;
  const std::size_t d = algebra.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t l = j + 1; l < d; ++l) {
        Vector v = algebra.bracket(algebra.basis_bracket(i, j), algebra.unit(l));
        v = add(v, algebra.bracket(algebra.basis_bracket(j, l), algebra.unit(i)));
        v = add(v, algebra.bracket(algebra.basis_bracket(l, i), algebra.unit(j)));
        if (!is_zero_vector(v)) out.push_back({i, j, l, std::move(v)});
      }
  return out;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(FieldDescriptor field, std::size_t ambient_dim, const std::vector<Vector>& spanning)
    : field_(field), ambient_(ambient_dim) {
  for (const auto& v : spanning) {
    if (v.size() != ambient_dim) raise(ErrorKind::DimensionMismatch, "subspace generator length");
  }
  basis_ = row_space_basis(field, spanning, ambient_dim);
  for (const auto& b : basis_) {
    const auto it = std::find_if(b.begin(), b.end(), [](const Scalar& s) { return !s.is_zero(); });
    pivots_.push_back(static_cast<std::size_t>(it - b.begin()));
  }
}

Subspace Subspace::whole(FieldDescriptor field, std::size_t n) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(unit_vector(field, n, i));
  return {field, n, gens};
}

Subspace Subspace::zero(FieldDescriptor field, std::size_t n) { return {field, n, {}}; }

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_) raise(ErrorKind::DimensionMismatch, "subspace membership");
  Vector rest(v.begin(), v.end());
  Vector coords = zero_vector(field_, basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar c = rest[pivots_[k]];
    if (c.is_zero()) continue;
    coords[k] = c;
    axpy(-c, basis_[k], rest);
  }
  if (!is_zero_vector(rest)) return std::nullopt;
  return coords;
}

bool Subspace::contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
}

bool Subspace::is_subalgebra(const LieAlgebra& algebra) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      if (!contains(algebra.bracket(basis_[i], basis_[j]))) return false;
    }
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  std::vector<Vector> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return {a.field(), a.ambient_dim(), gens};
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  // Solve sum_i s_i a_i - sum_j t_j b_j = 0 and map the kernel through the a-basis.
  const std::size_t n = a.ambient_dim();
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  Matrix m(a.field(), n, da + db);
  for (std::size_t i = 0; i < da; ++i) m.set_column(i, a.basis()[i]);
  for (std::size_t j = 0; j < db; ++j) m.set_column(da + j, scaled(-Scalar::one(a.field()), b.basis()[j]));
  std::vector<Vector> gens;
  for (const auto& k : nullspace(m)) {
    Vector v = zero_vector(a.field(), n);
    for (std::size_t i = 0; i < da; ++i) axpy(k[i], a.basis()[i], v);
    gens.push_back(std::move(v));
  }
  return {a.field(), n, gens};
}

Subspace bracket_subspace(const LieAlgebra& algebra, const Subspace& a, const Subspace& b) {
  std::vector<Vector> gens;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      Vector v = algebra.bracket(x, y);
      if (!is_zero_vector(v)) gens.push_back(std::move(v));
    }
  return {algebra.field(), algebra.dim(), gens};
}

Subspace derived_algebra(const LieAlgebra& algebra) {
  const auto whole = Subspace::whole(algebra.field(), algebra.dim());
  return bracket_subspace(algebra, whole, whole);
}

namespace {

template <class Next>
std::vector<Subspace> descending_series(const LieAlgebra& algebra, Next next) {
  std::vector<Subspace> series{Subspace::whole(algebra.field(), algebra.dim())};
  while (series.back().dim() > 0) {
    Subspace s = next(series.back());
    if (s == series.back()) break;
    series.push_back(std::move(s));
  }
  return series;
}

}  // namespace

std::vector<Subspace> derived_series(const LieAlgebra& algebra) {
  return descending_series(algebra, [&](const Subspace& s) { return bracket_subspace(algebra, s, s); });
}

std::vector<Subspace> lower_central_series(const LieAlgebra& algebra) {
  const auto whole = Subspace::whole(algebra.field(), algebra.dim());
  return descending_series(algebra, [&](const Subspace& s) { return bracket_subspace(algebra, whole, s); });
}

std::vector<std::size_t> dims(const std::vector<Subspace>& series) {
  std::vector<std::size_t> out;
  out.reserve(series.size());
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

Subspace center(const LieAlgebra& algebra) {
  const std::size_t d = algebra.dim();
  // Row block i: x -> [x, e_i] = -ad(e_i) x.
  Matrix m(algebra.field(), d * d, d);
  for (std::size_t i = 0; i < d; ++i) m.set_block(i * d, 0, algebra.ad_basis(i));
  return {algebra.field(), d, nullspace(m)};
}

bool is_perfect(const LieAlgebra& algebra) { return derived_algebra(algebra).dim() == algebra.dim(); }

std::optional<std::size_t> solvable_length(const LieAlgebra& algebra) {
  const auto series = derived_series(algebra);
  if (series.back().dim() != 0) return std::nullopt;
  return series.size() - 1;
}

bool is_metabelian(const LieAlgebra& algebra) {
  const auto len = solvable_length(algebra);
  return len && *len <= 2;
}

Matrix killing_form(const LieAlgebra& algebra) {
  const std::size_t d = algebra.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < d; ++i) ads.push_back(algebra.ad_basis(i));
  Matrix k(algebra.field(), d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      const Matrix prod = ads[i] * ads[j];
      Scalar tr = Scalar::zero(algebra.field());
      for (std::size_t t = 0; t < d; ++t) tr += prod(t, t);
      k(i, j) = tr;
      k(j, i) = tr;
    }
  return k;
}

// ---------------------------------------------------------------------------
// Invariant forms

Scalar BilinearForm::operator()(std::span<const Scalar> x, std::span<const Scalar> y) const {
  return dot(x, gram.apply(y));
}

bool is_invariant_form(const LieAlgebra& algebra, const Matrix& gram) {
  const std::size_t d = algebra.dim();
  if (gram.rows() != d || gram.cols() != d) raise(ErrorKind::DimensionMismatch, "gram matrix shape");
  const BilinearForm b{gram};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        if (b(algebra.basis_bracket(i, j), algebra.unit(l)) != b(algebra.unit(i), algebra.basis_bracket(j, l))) {
          return false;
        }
      }
  return true;
}

std::vector<BilinearForm> invariant_bilinear_forms(const LieAlgebra& algebra, bool symmetric_only) {
  const std::size_t d = algebra.dim();
  const FieldDescriptor f = algebra.field();
  // Unknown G(r, c) sits at column r * d + c.
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Vector ab = algebra.basis_bracket(a, b);
      for (std::size_t c = 0; c < d; ++c) {
        const Vector bc = algebra.basis_bracket(b, c);
        Vector row = zero_vector(f, d * d);
        for (std::size_t k = 0; k < d; ++k) {
          row[k * d + c] += ab[k];
          row[a * d + k] -= bc[k];
        }
        if (!is_zero_vector(row)) rows.push_back(std::move(row));
      }
    }
  if (symmetric_only) {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t c = a + 1; c < d; ++c) {
        Vector row = zero_vector(f, d * d);
        row[a * d + c] = Scalar::one(f);
        row[c * d + a] = -Scalar::one(f);
        rows.push_back(std::move(row));
      }
  }
  const Matrix system = rows.empty() ? Matrix(f, 0, d * d) : Matrix::from_rows(f, rows, d * d);
  std::vector<BilinearForm> out;
  for (const auto& v : nullspace(system)) {
    Matrix g(f, d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) g(r, c) = v[r * d + c];
    out.push_back({std::move(g)});
  }
  return out;
}

std::string_view to_string(SelfDualResult::Verdict v) noexcept {
  switch (v) {
    case SelfDualResult::Verdict::Yes: return "Yes";
    case SelfDualResult::Verdict::No: return "No";
    case SelfDualResult::Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

SelfDualResult self_dual(const LieAlgebra& algebra, std::uint64_t budget) {
  const std::size_t d = algebra.dim();
  const FieldDescriptor f = algebra.field();
  SelfDualResult res;
  if (d == 0) {
    res.verdict = SelfDualResult::Verdict::Yes;
    res.form = Matrix(f, 0, 0);
    return res;
  }
  const auto forms = invariant_bilinear_forms(algebra);

  // A common left radical vector w (B(w, -) = 0 for all B) certifies degeneracy of every combination.
  for (const bool left : {true, false}) {
    Matrix stacked(f, d * std::max<std::size_t>(forms.size(), 1), d);
    for (std::size_t k = 0; k < forms.size(); ++k) {
      stacked.set_block(k * d, 0, left ? forms[k].gram.transpose() : forms[k].gram);
    }
    const Subspace radical(f, d, nullspace(stacked));
    if (radical.dim() > 0) {
      res.verdict = SelfDualResult::Verdict::No;
      res.radical_witness = radical.basis().front();
      res.note = left ? "common left radical of all invariant forms" : "common right radical of all invariant forms";
      return res;
    }
  }

  std::uint64_t tried = 0;
  auto accept = [&](const Matrix& g, const char* note) {
    ++tried;
    if (determinant(g).is_zero()) return false;
    res.verdict = SelfDualResult::Verdict::Yes;
    res.form = g;
    res.note = note;
    return true;
  };

  const Matrix kill = killing_form(algebra);
  if (is_invariant_form(algebra, kill) && accept(kill, "Killing form")) return res;
  const Matrix id = Matrix::identity(f, d);
  if (is_invariant_form(algebra, id) && accept(id, "identity")) return res;

  auto combine = [&](const Vector& coeffs) {
    Matrix g(f, d, d);
    for (std::size_t k = 0; k < forms.size(); ++k) {
      if (!coeffs[k].is_zero()) g = g + coeffs[k] * forms[k].gram;
    }
    return g;
  };

  const std::size_t m = forms.size();
  if (f.is_finite()) {
    const auto total = checked_power(f.modulus(), m);
    const std::uint64_t limit = total ? std::min<std::uint64_t>(*total, budget) : budget;
    const VectorEnumerator en(f, m);
    for (std::uint64_t idx = 1; idx < limit && tried < budget; ++idx) {
      if (accept(combine(en.at(idx)), "combination of invariant basis")) return res;
    }
    if (total && limit == *total) res.note = "every invariant form is degenerate but no common radical vector exists";
  } else {
    // Largest box [-B, B]^m with (2B+1)^m within budget.
    long long bound = 1;
    while (true) {
      const auto next = checked_power(static_cast<std::uint64_t>(2 * (bound + 1) + 1), m);
      if (!next || *next > budget) break;
      ++bound;
    }
    const auto side = static_cast<std::uint64_t>(2 * bound + 1);
    const auto total = checked_power(side, m).value_or(budget);
    for (std::uint64_t idx = 1; idx < total && tried < budget; ++idx) {
      Vector coeffs = zero_vector(f, m);
      std::uint64_t rest = idx;
      for (std::size_t k = m; k-- > 0;) {
        coeffs[k] = Scalar::from_int(f, static_cast<long long>(rest % side) - bound);
        rest /= side;
      }
      if (accept(combine(coeffs), "integer combination of invariant basis")) return res;
    }
  }
  res.verdict = SelfDualResult::Verdict::Unknown;
  if (res.note.empty()) res.note = "search budget exhausted";
  return res;
}

// ---------------------------------------------------------------------------
// Product structures

bool is_product_structure(const LieAlgebra& algebra, const Matrix& f) {
  const std::size_t d = algebra.dim();
  if (f.rows() != d || f.cols() != d) raise(ErrorKind::DimensionMismatch, "endomorphism shape");
  const Matrix id = Matrix::identity(algebra.field(), d);
  if (f * f != id || f == id || f == -id) return false;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vector fx = f.column(i);
      const Vector fy = f.column(j);
      const Vector lhs = f.apply(algebra.basis_bracket(i, j));
      Vector rhs = add(algebra.bracket(fx, algebra.unit(j)), algebra.bracket(algebra.unit(i), fy));
      rhs = sub(rhs, f.apply(algebra.bracket(fx, fy)));
      if (lhs != rhs) return false;
    }
  return true;
}

std::pair<Subspace, Subspace> split_product_structure(const LieAlgebra& algebra, const Matrix& f) {
  if (algebra.field().characteristic() == 2) raise(ErrorKind::CharTwo, "eigenspace split undefined in characteristic 2");
  if (!is_product_structure(algebra, f)) raise(ErrorKind::BadParameter, "not a product structure");
  const std::size_t d = algebra.dim();
  const Matrix id = Matrix::identity(algebra.field(), d);
  Subspace plus(algebra.field(), d, nullspace(f - id));
  Subspace minus(algebra.field(), d, nullspace(f + id));
  return {std::move(plus), std::move(minus)};
}

// ---------------------------------------------------------------------------
// Constructions

LieAlgebra direct_product(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.field() != b.field()) raise(ErrorKind::FieldMismatch, "direct product of algebras over different fields");
  std::vector<std::string> names = a.basis_names();
  for (auto n : b.basis_names()) {
    while (std::find(names.begin(), names.end(), n) != names.end()) n += "'";
    names.push_back(n);
  }
  const std::size_t da = a.dim();
  const std::size_t d = da + b.dim();
  LieAlgebraBuilder builder(a.field(), names);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = i + 1; j < da; ++j) {
      Vector v = zero_vector(a.field(), d);
      const Vector src = a.basis_bracket(i, j);
      std::copy(src.begin(), src.end(), v.begin());
      builder.set(i, j, v);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j) {
      Vector v = zero_vector(a.field(), d);
      const Vector src = b.basis_bracket(i, j);
      std::copy(src.begin(), src.end(), v.begin() + static_cast<std::ptrdiff_t>(da));
      builder.set(da + i, da + j, v);
    }
  return builder.build();
}

LieAlgebra abelian_algebra(FieldDescriptor field, std::size_t n, std::string_view prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(i + 1));
  return {field, names};
}

LieAlgebra change_basis(const LieAlgebra& algebra, const Matrix& basis, std::optional<std::vector<std::string>> names) {
  const std::size_t d = algebra.dim();
  if (basis.rows() != d || basis.cols() != d) raise(ErrorKind::DimensionMismatch, "change_basis shape");
  const auto inv = inverse(basis);
  if (!inv) raise(ErrorKind::BadParameter, "change_basis: basis matrix is singular");
  LieAlgebraBuilder builder(algebra.field(), names ? *names : algebra.basis_names());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      builder.set(i, j, inv->apply(algebra.bracket(basis.column(i), basis.column(j))));
    }
  return builder.build();
}

}  // namespace bicross

#include "bicross/derivations.hpp"

namespace bicross {

namespace {

// Linear conditions on the entries of Δ (unknown Δ(r, c) at column r * d + c) for a fixed λ.
Matrix twisted_system(const LieAlgebra& algebra, std::span<const Scalar> lambda) {
  const std::size_t d = algebra.dim();
  const FieldDescriptor f = algebra.field();
  std::vector<std::vector<Vector>> sc(d, std::vector<Vector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) sc[i][j] = algebra.basis_bracket(i, j);

  std::vector<Vector> rows;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t r = 0; r < d; ++r) {
        Vector row = zero_vector(f, d * d);
        for (std::size_t k = 0; k < d; ++k) row[r * d + k] += sc[i][j][k];
        for (std::size_t s = 0; s < d; ++s) {
          row[s * d + i] -= sc[s][j][r];
          row[s * d + j] -= sc[i][s][r];
        }
        row[r * d + i] -= lambda[j];
        row[r * d + j] += lambda[i];
        if (!is_zero_vector(row)) rows.push_back(std::move(row));
      }
  if (rows.empty()) return Matrix(f, 0, d * d);
  return Matrix::from_rows(f, rows, d * d);
}

LinearMap unflatten(FieldDescriptor f, std::size_t d, const Vector& v) {
  Matrix m(f, d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = v[r * d + c];
  return m;
}

std::vector<LinearMap> solve_for_delta(const LieAlgebra& algebra, std::span<const Scalar> lambda) {
  std::vector<LinearMap> out;
  for (const auto& v : nullspace(twisted_system(algebra, lambda))) out.push_back(unflatten(algebra.field(), algebra.dim(), v));
  return out;
}

void require_square(const LieAlgebra& algebra, const LinearMap& d) {
  if (d.rows() != algebra.dim() || d.cols() != algebra.dim()) {
    raise(ErrorKind::DimensionMismatch, "endomorphism must be " + std::to_string(algebra.dim()) + "x" +
                                            std::to_string(algebra.dim()));
  }
}

}  // namespace

bool is_twisted_derivation(const LieAlgebra& algebra, const TwistedDerivation& t) {
  require_square(algebra, t.delta);
  const std::size_t d = algebra.dim();
  if (t.lambda.size() != d) raise(ErrorKind::DimensionMismatch, "lambda must have length " + std::to_string(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vector b = algebra.basis_bracket(i, j);
      if (!dot(t.lambda, b).is_zero()) return false;
      const Vector di = t.delta.column(i);
      const Vector dj = t.delta.column(j);
      Vector rhs = add(algebra.bracket(di, algebra.unit(j)), algebra.bracket(algebra.unit(i), dj));
      axpy(t.lambda[j], di, rhs);
      axpy(-t.lambda[i], dj, rhs);
      if (t.delta.apply(b) != rhs) return false;
    }
  return true;
}

bool is_derivation(const LieAlgebra& algebra, const LinearMap& d) {
  return is_twisted_derivation(algebra, {algebra.zero(), d});
}

std::vector<LinearMap> derivation_space(const LieAlgebra& algebra) { return solve_for_delta(algebra, algebra.zero()); }

LinearMap inner_derivation(const LieAlgebra& algebra, std::span<const Scalar> x) { return algebra.ad(x); }

std::optional<Vector> is_inner(const LieAlgebra& algebra, const LinearMap& d) {
  if (!is_derivation(algebra, d)) raise(ErrorKind::NotADerivation, "map is not a derivation");
  const std::size_t n = algebra.dim();
  // ad(x)(r, j) = sum_i x_i c_ij^r
  Matrix sys(algebra.field(), n * n, n);
  Vector rhs(n * n, Scalar::zero(algebra.field()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector b = algebra.basis_bracket(i, j);
      for (std::size_t r = 0; r < n; ++r) sys(r * n + j, i) = b[r];
    }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) rhs[r * n + j] = d(r, j);
  auto sol = solve_linear(sys, rhs);
  if (!sol) return std::nullopt;
  return sol->particular;
}

std::vector<Vector> admissible_lambda_basis(const LieAlgebra& algebra) {
  const Subspace der = derived_algebra(algebra);
  if (der.dim() == 0) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < algebra.dim(); ++i) all.push_back(algebra.unit(i));
    return all;
  }
  return nullspace(Matrix::from_rows(algebra.field(), der.basis(), algebra.dim()));
}

std::vector<LinearMap> twisted_derivations_for_lambda(const LieAlgebra& algebra, std::span<const Scalar> lambda) {
  if (lambda.size() != algebra.dim()) raise(ErrorKind::DimensionMismatch, "lambda length");
  const Subspace der = derived_algebra(algebra);
  for (const auto& b : der.basis()) {
    if (!dot(lambda, b).is_zero()) raise(ErrorKind::LambdaNotAdmissible, "lambda does not vanish on [L, L]");
  }
  return solve_for_delta(algebra, lambda);
}

std::vector<TwistedFamily> enumerate_twisted_derivations(const LieAlgebra& algebra, std::uint64_t budget) {
  const FieldDescriptor f = algebra.field();
  if (!f.is_finite()) raise(ErrorKind::NotFinite, "twisted derivations can only be enumerated over GF(p)");
  const auto basis = admissible_lambda_basis(algebra);
  const auto count = checked_power(f.modulus(), basis.size());
  if (!count || *count > budget) {
    raise(ErrorKind::BudgetExceeded, "need " + (count ? std::to_string(*count) : std::string("> 2^64")) +
                                         " admissible functionals, budget " + std::to_string(budget));
  }
  std::vector<TwistedFamily> out;
  for (const auto& coeffs : VectorEnumerator(f, basis.size())) {
    Vector lambda = algebra.zero();
    for (std::size_t k = 0; k < basis.size(); ++k) axpy(coeffs[k], basis[k], lambda);
    out.push_back({lambda, solve_for_delta(algebra, lambda)});
  }
  return out;
}

Subspace matrix_span(FieldDescriptor field, std::size_t rows, std::size_t cols, const std::vector<LinearMap>& maps) {
  std::vector<Vector> flat;
  for (const auto& m : maps) {
    if (m.rows() != rows || m.cols() != cols) raise(ErrorKind::DimensionMismatch, "matrix_span shape");
    flat.emplace_back(m.entries().begin(), m.entries().end());
  }
  return {field, rows * cols, flat};
}

// ---------------------------------------------------------------------------
// T(n)

TnElement TnElement::zero(FieldDescriptor field, std::size_t n) {
  TnElement t;
  t.n = n;
  t.lambda0 = Scalar::zero(field);
  t.A = t.B = t.C = t.D = Matrix(field, n, n);
  t.delta = zero_vector(field, 2 * n + 1);
  return t;
}

bool tn_validate(const TnElement& t) {
  const std::size_t n = t.n;
  for (const Matrix* m : {&t.A, &t.B, &t.C, &t.D}) {
    if (m->rows() != n || m->cols() != n) return false;
  }
  if (t.delta.size() != 2 * n + 1 || n == 0) return false;
  const FieldDescriptor f = t.field();
  const Scalar two = Scalar::from_int(f, 2);
  const Matrix id = Matrix::identity(f, n);
  const Scalar& last = t.delta[2 * n];
  return t.lambda0 * t.A == -last * id && ((two + t.lambda0) * t.B).is_zero() &&
         ((two - t.lambda0) * t.C).is_zero() && t.lambda0 * t.D == last * id;
}

TwistedDerivation tn_to_twisted(const TnElement& t) {
  if (!tn_validate(t)) raise(ErrorKind::InvalidTn, "(A, B, C, D, lambda0, delta) violates the T(n) conditions");
  const std::size_t n = t.n;
  const std::size_t d = 2 * n + 1;
  const FieldDescriptor f = t.field();
  TwistedDerivation out{zero_vector(f, d), Matrix(f, d, d)};
  out.lambda[2 * n] = t.lambda0;
  out.delta.set_block(0, 0, t.A);
  out.delta.set_block(0, n, t.B);
  out.delta.set_block(n, 0, t.C);
  out.delta.set_block(n, n, t.D);
  out.delta.set_column(2 * n, t.delta);
  return out;
}

TnElement tn_from_twisted(std::size_t n, const TwistedDerivation& t) {
  const std::size_t d = 2 * n + 1;
  if (t.delta.rows() != d || t.delta.cols() != d || t.lambda.size() != d) {
    raise(ErrorKind::InvalidTwistedDerivation, "shape does not match l(2n+1)");
  }
  for (std::size_t i = 0; i < 2 * n; ++i) {
    if (!t.lambda[i].is_zero() || !t.delta(2 * n, i).is_zero()) {
      raise(ErrorKind::InvalidTwistedDerivation, "not of block form for l(2n+1)");
    }
  }
  TnElement out;
  out.n = n;
  out.lambda0 = t.lambda[2 * n];
  out.A = t.delta.block(0, 0, n, n);
  out.B = t.delta.block(0, n, n, n);
  out.C = t.delta.block(n, 0, n, n);
  out.D = t.delta.block(n, n, n, n);
  out.delta = t.delta.column(2 * n);
  return out;
}

std::vector<TnElement> tn_closed_form_basis(FieldDescriptor field, std::size_t n, const Scalar& lambda0) {
  const Scalar two = Scalar::from_int(field, 2);
  const bool char2 = field.characteristic() == 2;
  const bool zero = lambda0.is_zero();
  const bool plus2 = !char2 && lambda0 == two;
  const bool minus2 = !char2 && lambda0 == -two;
  const Scalar one = Scalar::one(field);
  const TnElement base = [&] {
    TnElement t = TnElement::zero(field, n);
    t.lambda0 = lambda0;
    return t;
  }();
  std::vector<TnElement> out;

  auto unit_matrix = [&](std::size_t r, std::size_t c) {
    Matrix m(field, n, n);
    m(r, c) = one;
    return m;
  };
  // δ_1 .. δ_2n are free in every branch.
  for (std::size_t k = 0; k < 2 * n; ++k) {
    TnElement t = base;
    t.delta[k] = one;
    out.push_back(t);
  }
  if (zero) {
    // δ_{2n+1} = 0; A and D free; B and C free exactly when 2 = 0.
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        TnElement a = base;
        a.A = unit_matrix(r, c);
        out.push_back(a);
        TnElement d = base;
        d.D = unit_matrix(r, c);
        out.push_back(d);
        if (char2) {
          TnElement b = base;
          b.B = unit_matrix(r, c);
          out.push_back(b);
          TnElement cc = base;
          cc.C = unit_matrix(r, c);
          out.push_back(cc);
        }
      }
    return out;
  }
  // δ_{2n+1} free, A = −δ_{2n+1}/λ0 · I, D = δ_{2n+1}/λ0 · I.
  {
    TnElement t = base;
    t.delta[2 * n] = one;
    const Scalar s = one / lambda0;
    t.A = -s * Matrix::identity(field, n);
    t.D = s * Matrix::identity(field, n);
    out.push_back(t);
  }
  if (plus2 || minus2) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        TnElement t = base;
        (plus2 ? t.C : t.B) = unit_matrix(r, c);
        out.push_back(t);
      }
  }
  return out;
}

}  // namespace bicross

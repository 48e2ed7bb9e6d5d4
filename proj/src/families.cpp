#include "bicross/families.hpp"

namespace bicross {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) raise(ErrorKind::BadParameter, what);
}

void require_odd_char(FieldDescriptor f, const char* family) {
  require(f.characteristic() != 2, std::string(family) + " requires characteristic != 2");
}

void require_square(const Matrix& m, std::size_t n, const char* name) {
  require(m.rows() == n && m.cols() == n, std::string(name) + " must be " + std::to_string(n) + "x" + std::to_string(n));
}

struct LBuilder {
  std::size_t n;
  FieldDescriptor f;
  LieAlgebraBuilder b;

  LBuilder(std::size_t n_, FieldDescriptor f_, bool with_h)
      : n(n_), f(f_), b(f_, l_basis_names(n_, with_h)) {
    require(n_ >= 1, "n must be positive");
    for (std::size_t i = 0; i < n; ++i) {
      b.add(E(i), G(), E(i), Scalar::one(f));
      b.add(G(), F(i), F(i), Scalar::one(f));
    }
  }
  [[nodiscard]] std::size_t E(std::size_t i) const { return i; }
  [[nodiscard]] std::size_t F(std::size_t i) const { return n + i; }
  [[nodiscard]] std::size_t G() const { return 2 * n; }
  [[nodiscard]] std::size_t H() const { return 2 * n + 1; }

  // [G, H] = λ H + Σ δ_j E_j + Σ δ_{n+j} F_j (+ δ_{2n+1} G when present)
  void set_gh(const Scalar& lambda, const Vector& delta) {
    for (std::size_t k = 0; k < delta.size(); ++k) b.add(G(), H(), k, delta[k]);
    b.add(G(), H(), H(), lambda);
  }
};

}  // namespace

std::vector<std::string> l_basis_names(std::size_t n, bool with_h) {
  std::vector<std::string> names;
  if (n == 1) {
    names = {"E", "F", "G"};
  } else {
    for (std::size_t i = 1; i <= n; ++i) names.push_back("E" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back("F" + std::to_string(i));
    names.push_back("G");
  }
  if (with_h) names.push_back("H");
  return names;
}

LieAlgebra make_l(std::size_t n, FieldDescriptor field) { return LBuilder(n, field, false).b.build(); }

LieAlgebra make_L(std::size_t n, FieldDescriptor field) {
  Vector delta = zero_vector(field, 2 * n + 1);
  delta[2 * n] = Scalar::one(field);
  LBuilder l(n, field, true);
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < n; ++i) {
    l.b.add(l.E(i), l.H(), l.E(i), -one);
    l.b.add(l.F(i), l.H(), l.F(i), one);
  }
  l.set_gh(one, delta);
  return l.b.build();
}

LieAlgebra make_m(std::size_t n, FieldDescriptor field) {
  LBuilder l(n, field, true);
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < n; ++i) {
    l.b.add(l.E(i), l.H(), l.E(i), one);
    l.b.add(l.F(i), l.H(), l.F(i), one);
  }
  l.b.add(l.G(), l.H(), l.E(0), one);
  l.b.add(l.G(), l.H(), l.F(n - 1), one);
  return l.b.build();
}

LieAlgebra make_l1(std::size_t n, const Scalar& lambda0, const Vector& delta) {
  const FieldDescriptor f = lambda0.field();
  require_odd_char(f, "l1");
  const Scalar two = Scalar::from_int(f, 2);
  require(!lambda0.is_zero() && lambda0 != two && lambda0 != -two, "l1 requires lambda0 not in {0, 2, -2}");
  require(delta.size() == 2 * n + 1, "l1 requires delta of length 2n+1");
  LBuilder l(n, f, true);
  const Scalar t = delta[2 * n] / lambda0;
  for (std::size_t i = 0; i < n; ++i) {
    l.b.add(l.E(i), l.H(), l.E(i), -t);
    l.b.add(l.F(i), l.H(), l.F(i), t);
  }
  l.set_gh(lambda0, delta);
  return l.b.build();
}

LieAlgebra make_l2(std::size_t n, const Matrix& A, const Matrix& D, const Vector& delta) {
  const FieldDescriptor f = A.field();
  require_odd_char(f, "l2");
  require_square(A, n, "A");
  require_square(D, n, "D");
  require(delta.size() == 2 * n, "l2 requires delta of length 2n");
  LBuilder l(n, f, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      l.b.add(l.E(i), l.H(), l.E(j), A(j, i));
      l.b.add(l.F(i), l.H(), l.F(j), D(j, i));
    }
  l.set_gh(Scalar::zero(f), delta);
  return l.b.build();
}

LieAlgebra make_l3(std::size_t n, const Matrix& C, const Vector& delta) {
  const FieldDescriptor f = C.field();
  require_odd_char(f, "l3");
  require_square(C, n, "C");
  require(delta.size() == 2 * n + 1, "l3 requires delta of length 2n+1");
  LBuilder l(n, f, true);
  const Scalar half = delta[2 * n] / Scalar::from_int(f, 2);
  for (std::size_t i = 0; i < n; ++i) {
    l.b.add(l.E(i), l.H(), l.E(i), -half);
    for (std::size_t j = 0; j < n; ++j) l.b.add(l.E(i), l.H(), l.F(j), C(j, i));
    l.b.add(l.F(i), l.H(), l.F(i), half);
  }
  l.set_gh(Scalar::from_int(f, 2), delta);
  return l.b.build();
}

LieAlgebra make_l4(std::size_t n, const Matrix& B, const Vector& delta) {
  const FieldDescriptor f = B.field();
  require_odd_char(f, "l4");
  require_square(B, n, "B");
  require(delta.size() == 2 * n + 1, "l4 requires delta of length 2n+1");
  LBuilder l(n, f, true);
  const Scalar half = delta[2 * n] / Scalar::from_int(f, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) l.b.add(l.F(i), l.H(), l.E(j), B(j, i));
    l.b.add(l.F(i), l.H(), l.F(i), -half);
    l.b.add(l.E(i), l.H(), l.E(i), half);
  }
  l.set_gh(Scalar::from_int(f, -2), delta);
  return l.b.build();
}

LieAlgebra make_l1_char2(std::size_t n, const Matrix& A, const Matrix& B, const Matrix& C, const Matrix& D,
                         const Vector& delta) {
  const FieldDescriptor f = A.field();
  require(f.characteristic() == 2, "l_1 requires characteristic 2");
  for (const auto* m : {&A, &B, &C, &D}) require_square(*m, n, "A, B, C, D");
  require(delta.size() == 2 * n, "l_1 requires delta of length 2n");
  LBuilder l(n, f, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      l.b.add(l.E(i), l.H(), l.E(j), A(j, i));
      l.b.add(l.E(i), l.H(), l.F(j), C(j, i));
      l.b.add(l.F(i), l.H(), l.E(j), B(j, i));
      l.b.add(l.F(i), l.H(), l.F(j), D(j, i));
    }
  l.set_gh(Scalar::zero(f), delta);
  return l.b.build();
}

LieAlgebra make_l2_char2(std::size_t n, const Scalar& lambda0, const Vector& delta) {
  const FieldDescriptor f = lambda0.field();
  require(f.characteristic() == 2, "l_2 requires characteristic 2");
  require(!lambda0.is_zero(), "l_2 requires lambda0 != 0");
  require(delta.size() == 2 * n + 1, "l_2 requires delta of length 2n+1");
  LBuilder l(n, f, true);
  const Scalar t = delta[2 * n] / lambda0;
  for (std::size_t i = 0; i < n; ++i) {
    l.b.add(l.E(i), l.H(), l.E(i), -t);
    l.b.add(l.F(i), l.H(), l.F(i), t);
  }
  l.set_gh(lambda0, delta);
  return l.b.build();
}

LieAlgebra make_h5(FieldDescriptor field) {
  LieAlgebraBuilder b(field, {"e1", "e2", "e3", "e4", "e5"});
  b.set("e1", "e2", {{"e3", 1}});
  b.set("e1", "e3", {{"e1", -2}});
  b.set("e1", "e5", {{"e4", 1}});
  b.set("e3", "e4", {{"e4", 1}});
  b.set("e2", "e3", {{"e2", 2}});
  b.set("e2", "e4", {{"e5", 1}});
  b.set("e3", "e5", {{"e5", -1}});
  return b.build();
}

LinearMap h5_delta(FieldDescriptor field) {
  Matrix d(field, 5, 5);
  auto e = [&](std::size_t i, std::size_t j, long long v) { d(i - 1, j - 1) = Scalar::from_int(field, v); };
  e(1, 1, 1);
  e(4, 1, -1);
  e(2, 2, -1);
  e(5, 3, 1);
  e(4, 4, -1);
  e(5, 5, -2);
  return d;
}

LieAlgebra make_sl2(FieldDescriptor field) {
  LieAlgebraBuilder b(field, {"e", "f", "h"});
  b.set("h", "e", {{"e", 2}});
  b.set("h", "f", {{"f", -2}});
  b.set("e", "f", {{"h", 1}});
  return b.build();
}

LieAlgebra make_Lalpha(const Scalar& alpha) {
  const FieldDescriptor f = alpha.field();
  LieAlgebraBuilder b(f, {"x", "y", "z"});
  b.add(0, 2, 0, Scalar::one(f));
  b.add(1, 2, 1, alpha);
  return b.build();
}

LieAlgebra make_L_minus1(FieldDescriptor field) {
  LieAlgebraBuilder b(field, {"E", "F", "G"});
  b.set("F", "E", {{"F", 1}});
  b.set("E", "G", {{"G", -1}});
  return b.build();
}

LieAlgebra make_lp1_f(FieldDescriptor field) {
  LieAlgebraBuilder b(field, {"f1", "f2", "f3"});
  b.set("f1", "f2", {{"f1", -1}});
  b.set("f1", "f3", {{"f1", 1}});
  b.set("f3", "f2", {{"f2", 1}, {"f3", 1}});
  return b.build();
}

MatchedPair mpcanon_L(std::size_t n, FieldDescriptor field) {
  MatchedPair mp = MatchedPair::trivial(LieAlgebra(field, {"H"}), make_l(n, field));
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < n; ++i) {
    mp.right[i][0][i] = -one;
    mp.right[n + i][0][n + i] = one;
  }
  mp.right[2 * n][0][2 * n] = one;
  mp.left[2 * n][0][0] = one;
  return mp;
}

MatchedPair mpcanon_m(std::size_t n, FieldDescriptor field) {
  MatchedPair mp = MatchedPair::trivial(LieAlgebra(field, {"H"}), make_l(n, field));
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < n; ++i) {
    mp.right[i][0][i] = one;
    mp.right[n + i][0][n + i] = one;
  }
  mp.right[2 * n][0][0] += one;
  mp.right[2 * n][0][2 * n - 1] += one;
  return mp;
}

MatchedPair mp_h5(FieldDescriptor field) {
  const LieAlgebra h = make_h5(field);
  return matched_pair_from_twisted(h, {h.zero(), h5_delta(field)}, "F");
}

}  // namespace bicross

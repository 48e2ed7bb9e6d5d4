#pragma once

// Derivations, twisted derivations and the closed form on l(2n+1, k).

#include <cstdint>
#include <vector>

#include "bicross/liecore.hpp"

namespace bicross {

/// A pair (λ, Δ) with λ([g,h]) = 0 and
///   Δ[g,h] = [Δg,h] + [g,Δh] + λ(h)Δg − λ(g)Δh,
/// the law that makes the codimension-one extension h_(λ,Δ) a Lie algebra.
struct TwistedDerivation {
  Vector lambda;
  LinearMap delta;

  friend bool operator==(const TwistedDerivation&, const TwistedDerivation&) = default;
};

bool is_derivation(const LieAlgebra& algebra, const LinearMap& d);
bool is_twisted_derivation(const LieAlgebra& algebra, const TwistedDerivation& t);

/// Basis of Der(L).
std::vector<LinearMap> derivation_space(const LieAlgebra& algebra);
LinearMap inner_derivation(const LieAlgebra& algebra, std::span<const Scalar> x);
/// Some x with ad(x) = d, or nullopt. Throws NotADerivation.
std::optional<Vector> is_inner(const LieAlgebra& algebra, const LinearMap& d);

/// Linear functionals vanishing on [L, L]: a basis, as covectors.
std::vector<Vector> admissible_lambda_basis(const LieAlgebra& algebra);
/// Basis of {Δ : (λ, Δ) twisted}. Throws LambdaNotAdmissible if λ([L,L]) ≠ 0.
std::vector<LinearMap> twisted_derivations_for_lambda(const LieAlgebra& algebra, std::span<const Scalar> lambda);

struct TwistedFamily {
  Vector lambda;
  std::vector<LinearMap> basis;
};

/// One entry per admissible λ over GF(p), in lexicographic order of the coordinates of λ
/// with respect to admissible_lambda_basis. Throws NotFinite or BudgetExceeded when
/// p^(dim L − dim [L,L]) > budget.
std::vector<TwistedFamily> enumerate_twisted_derivations(const LieAlgebra& algebra, std::uint64_t budget = 1'000'000);

/// Canonical form of span(maps), flattening each r×c matrix row-major.
Subspace matrix_span(FieldDescriptor field, std::size_t rows, std::size_t cols, const std::vector<LinearMap>& maps);

/// (A, B, C, D, λ0, δ) for l(2n+1, k) in the basis E_1..E_n, F_1..F_n, G.
struct TnElement {
  std::size_t n = 1;
  Scalar lambda0;
  Matrix A, B, C, D;
  Vector delta;  // length 2n+1

  static TnElement zero(FieldDescriptor field, std::size_t n);
  [[nodiscard]] FieldDescriptor field() const { return lambda0.field(); }

  friend bool operator==(const TnElement&, const TnElement&) = default;
};

/// λ0 A = −δ_{2n+1} I, (2 + λ0) B = 0, (2 − λ0) C = 0, λ0 D = δ_{2n+1} I, with consistent shapes.
bool tn_validate(const TnElement& t);
/// λ = (0, …, 0, λ0) and Δ = [[A, B, δ_top], [C, D, δ_mid], [0, 0, δ_{2n+1}]]. Throws InvalidTn.
TwistedDerivation tn_to_twisted(const TnElement& t);
/// Inverse of tn_to_twisted; throws InvalidTwistedDerivation if the shape is wrong.
TnElement tn_from_twisted(std::size_t n, const TwistedDerivation& t);

/// Spanning set of {t ∈ T(n) : t.lambda0 = λ0}, read off the case split on λ0
/// (λ0 ∉ {0, ±2}, λ0 = 0, λ0 = 2, λ0 = −2; in characteristic 2 only λ0 = 0 or not).
std::vector<TnElement> tn_closed_form_basis(FieldDescriptor field, std::size_t n, const Scalar& lambda0);

}  // namespace bicross

#pragma once

// Matched pairs of Lie algebras, bicrossed products and factorizations.

#include <optional>
#include <string>
#include <vector>

#include "bicross/derivations.hpp"
#include "bicross/liecore.hpp"

namespace bicross {

/// (g, h, ◁, ▷) with ◁: h × g → h and ▷: h × g → g stored on basis pairs.
struct MatchedPair {
  LieAlgebra g;
  LieAlgebra h;
  std::vector<std::vector<Vector>> right;  // right[x][a] = e_x ◁ e_a, in h
  std::vector<std::vector<Vector>> left;   // left[x][a]  = e_x ▷ e_a, in g

  /// Both actions zero; the bicrossed product is the direct product.
  static MatchedPair trivial(LieAlgebra g, LieAlgebra h);

  [[nodiscard]] Vector act_right(std::span<const Scalar> x, std::span<const Scalar> a) const;
  [[nodiscard]] Vector act_left(std::span<const Scalar> x, std::span<const Scalar> a) const;

  void set_right(std::string_view x, std::string_view a, std::span<const Scalar> out);
  void set_left(std::string_view x, std::string_view a, std::span<const Scalar> out);
};

struct MatchedPairViolation {
  enum class Axiom { LeftModule, RightModule, LeftCompatibility, RightCompatibility };
  Axiom axiom;
  std::size_t x, y, a;  // h-indices x, y and a g-index a; unused slots hold a second g-index or 0
  Vector value;         // lhs − rhs

  [[nodiscard]] std::string describe(const MatchedPair& mp) const;
};

std::string_view to_string(MatchedPairViolation::Axiom a) noexcept;

/// Every violated axiom instance:
///   [x,y] ▷ a = x ▷ (y ▷ a) − y ▷ (x ▷ a)
///   x ◁ [a,b] = (x ◁ a) ◁ b − (x ◁ b) ◁ a
///   x ▷ [a,b] = [x ▷ a, b] + [a, x ▷ b] + (x ◁ a) ▷ b − (x ◁ b) ▷ a
///   [x,y] ◁ a = [x, y ◁ a] + [x ◁ a, y] + x ◁ (y ▷ a) − y ◁ (x ▷ a)
std::vector<MatchedPairViolation> check_matched_pair(const MatchedPair& mp);

/// g ⋈ h on the basis of g followed by that of h; clashing h names get a trailing '.
/// {(a,x),(b,y)} = ([a,b] + x ▷ b − y ▷ a, [x,y] + x ◁ b − y ◁ a). Throws InvalidMatchedPair.
LieAlgebra bicrossed_product(const MatchedPair& mp);

/// The involution (a, x) -> (a, −x) on g ⋈ h.
LinearMap bicrossed_involution(const MatchedPair& mp);

struct Factorization {
  LieAlgebra ambient;
  Subspace gsub;
  Subspace hsub;
};

/// Why f is not a factorization, or nullopt when it is.
std::optional<std::string> factorization_defect(const Factorization& f);

/// The ambient algebra written in the concatenated basis (gsub basis, hsub basis).
LieAlgebra adapted_algebra(const Factorization& f);

/// Actions from the decomposition [x, a] = x ▷ a + x ◁ a. Subalgebra bases are the rref bases;
/// a basis vector equal to a unit vector keeps the ambient name. Throws NotAFactorization.
MatchedPair canonical_matched_pair(const Factorization& f);

/// The pair (k0, h) with x ▷ a = a λ(x), x ◁ a = a Δ(x); `name` labels the k0 generator.
MatchedPair matched_pair_from_twisted(const LieAlgebra& h, const TwistedDerivation& t, const std::string& name = "H");

/// h_(λ,Δ): basis {F, e_i} with [e_i, F] = λ(e_i) F + Δ(e_i). Throws InvalidTwistedDerivation.
LieAlgebra h_lambda_delta(const LieAlgebra& h, const TwistedDerivation& t, const std::string& name = "H");

}  // namespace bicross

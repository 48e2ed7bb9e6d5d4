#pragma once

// Deformation maps r: h -> g of a matched pair, r-deformations h_r, and the classification of
// complements of g in g ⋈ h.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicross/matched.hpp"

namespace bicross {

/// r is stored as a dim g × dim h matrix (column x = r(e_x)). Checks, for all basis pairs,
///   r([x,y]) − [r(x), r(y)] = r(y ◁ r(x) − x ◁ r(y)) + x ▷ r(y) − y ▷ r(x).
/// Throws DimensionMismatch on a wrongly shaped r.
bool is_deformation_map(const MatchedPair& mp, const LinearMap& r);

/// All deformation maps over GF(p), ordered lexicographically by (r(e_1), r(e_2), …).
/// Throws NotFinite over Q and BudgetExceeded when p^(dim g · dim h) > budget.
std::vector<LinearMap> enumerate_deformation_maps(const MatchedPair& mp, std::uint64_t budget = 10'000'000);

/// h_r: [x,y]_r = [x,y] + x ◁ r(y) − y ◁ r(x), on h's basis. Throws InvalidDeformationMap.
LieAlgebra r_deformation(const MatchedPair& mp, const LinearMap& r);

/// x ↦ (r(x), x) as a (dim g + dim h) × dim h matrix into g ⋈ h: a Lie map h_r → g ⋈ h whose
/// image is a complement of g.
LinearMap deformation_complement(const MatchedPair& mp, const LinearMap& r);

// Closed forms for the canonical pairs of L(2n+2) and m(2n+2) (g = kH). Builders throw
// CharTwo in characteristic 2 and BadParameter on excluded parameters.

/// r(E_i) = a_i H, r(F_i) = 0, r(G) = H; a ≠ 0.
LinearMap defmap_L_a(const Vector& a);
/// r(E_i) = 0, r(F_i) = b_i H, r(G) = c H.
LinearMap defmap_L_bc(const Vector& b, const Scalar& c);
/// r(E_i) = a_i H, r(F_i) = 0, r(G) = (a_1 − 1) H; a ≠ 0.
LinearMap defmap_m_a(const Vector& a);
/// r(E_i) = 0, r(F_i) = b_i H, r(G) = (b_n + 1) H; b ≠ 0.
LinearMap defmap_m_b(const Vector& b);
/// r(E_i) = r(F_i) = 0, r(G) = c H.
LinearMap defmap_m_c(std::size_t n, const Scalar& c);

struct DeformationFamily {
  std::string name;
  std::vector<LinearMap> maps;  // every parameter value, enumeration order
};

/// Over GF(p): {r_a : a ∈ kⁿ∖0} and {r_(b,c) : (b,c) ∈ kⁿ × k}.
std::vector<DeformationFamily> closed_form_defmaps_L(std::size_t n, FieldDescriptor field);
/// Over GF(p): {r_a : a ∈ kⁿ∖0}, {r_b : b ∈ kⁿ∖0} and {r_c : c ∈ k}.
std::vector<DeformationFamily> closed_form_defmaps_m(std::size_t n, FieldDescriptor field);

// The complements as explicit bracket tables on the basis of l(2n+1).
LieAlgebra make_l_a(const Vector& a);                    // a ≠ 0
LieAlgebra make_lp_b(const Vector& b);
LieAlgebra make_lpp_b(const Vector& b);
LieAlgebra make_l_bc(const Vector& b, const Scalar& c);  // l'_(b) rescaled; c = 1 gives l''_(b)
LieAlgebra make_lbar_a(const Vector& a);                 // a ≠ 0
LieAlgebra make_lbarp_b(const Vector& b);                // b ≠ 0
LieAlgebra make_lbarpp_c(std::size_t n, const Scalar& c);
/// The deformation of the five-dimensional perfect algebra along r(e1) = a, r(e2) = −1/a, r(e3) = 2.
LieAlgebra make_h_a(const Scalar& a);
/// That deformation map, as a 1 × 5 matrix.
LinearMap defmap_h5_a(const Scalar& a);

/// For a 3-dimensional algebra whose derived algebra D is 2-dimensional and abelian with ad(w)|_D
/// invertible (w ∉ D): tr²/det of ad(w)|_D, which does not depend on the choice of w.
/// L_α gives (1 + α)² / α. nullopt when the shape does not apply.
std::optional<Scalar> eigenvalue_ratio_invariant(const LieAlgebra& algebra);

struct ComplementReport {
  std::vector<LieAlgebra> representatives;
  std::vector<LinearMap> representative_maps;  // the deformation map giving each representative
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> class_of;           // per enumerated map
  std::vector<LinearMap> maps;                 // every deformation map, in enumeration order
  std::optional<std::size_t> index;            // nullopt: infinite
  std::size_t deformation_count = 0;
  std::string certificate;                     // how an infinite index was certified

  [[nodiscard]] bool infinite() const noexcept { return !index.has_value(); }
};

/// Over GF(p): every deformation map, grouped into isomorphism classes of h_r by complete
/// search; `reverse` processes the maps in the opposite order. Over Q only the canonical pair
/// of m(4) is handled (index infinite, certified by eigenvalue_ratio_invariant on the r_c
/// deformations); anything else throws NotFinite. An undecided isomorphism throws BudgetExceeded.
ComplementReport classify_complements(const MatchedPair& mp, std::uint64_t budget = 10'000'000,
                                      bool reverse = false);

}  // namespace bicross

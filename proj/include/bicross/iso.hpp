#pragma once

// Isomorphism testing, automorphism enumeration, and the automorphism triples (α, h, v)
// of extensions h_(Δ) of a perfect algebra.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicross/liecore.hpp"

namespace bicross {

/// Cheap isomorphism invariants. derivation_dim is included because the others do not
/// separate l(3) from L_{−1}.
struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> derived;
  std::vector<std::size_t> lower_central;
  std::size_t center_dim = 0;
  std::size_t abelianization_dim = 0;
  std::size_t killing_rank = 0;
  std::size_t derivation_dim = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
  [[nodiscard]] std::string to_string() const;
};

Fingerprint fingerprint(const LieAlgebra& algebra);

/// m maps `from` coordinates to `to` coordinates (column j = image of basis j).
bool is_lie_map(const LieAlgebra& from, const LieAlgebra& to, const LinearMap& m);
/// Invertible Lie map.
bool verify_iso(const LieAlgebra& from, const LieAlgebra& to, const LinearMap& m);

struct IsoResult {
  enum class Verdict { Yes, No, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::optional<LinearMap> map;  // Yes: verified isomorphism a -> b
  std::string certificate;       // No / Unknown: reason
  std::uint64_t nodes = 0;
};

std::string_view to_string(IsoResult::Verdict v) noexcept;

/// Over GF(p) the search is complete: images are assigned one basis vector at a time, every
/// bracket relation with an assigned endpoint is imposed as a linear condition on the remaining
/// images, the next image to branch on is the one with the smallest solution space, and
/// candidates are pruned by linear dependence, membership in the derived and lower central
/// series and the center, and the ranks of ad(x)² and ad(x) − c. Exceeding `budget` search
/// nodes gives Unknown. Over Q only fingerprint differences (No) and literal equality (Yes)
/// are decided.
IsoResult are_isomorphic(const LieAlgebra& a, const LieAlgebra& b, std::uint64_t budget = 2'000'000);

/// Every automorphism over GF(p), in search order. Throws NotFinite or BudgetExceeded.
std::vector<LinearMap> aut_enumerate(const LieAlgebra& algebra, std::uint64_t budget = 2'000'000);

/// (α, h, v) with v: h -> h; see is_valid_triple.
struct AutTriple {
  Scalar alpha;
  Vector h0;
  LinearMap v;

  friend bool operator==(const AutTriple&, const AutTriple&) = default;
  friend bool operator<(const AutTriple& a, const AutTriple& b);
};

/// v a Lie map and v∘Δ − αΔ'∘v = [v(−), h0]. Throws NotPerfect unless h is perfect.
bool is_valid_triple(const LieAlgebra& h, const LinearMap& delta, const LinearMap& delta_prime, const AutTriple& t);
/// φ(a, x) = (aα, a h0 + v(x)) on the basis {F, e_1, …} of h_(Δ) (F first).
LinearMap phi_from_triple(const LieAlgebra& h, const AutTriple& t);

/// (α, h, v)·(β, g, w) = (αβ, βh + v(g), v∘w)
AutTriple aut_multiply(const AutTriple& a, const AutTriple& b);
/// (α⁻¹, −α⁻¹ v⁻¹(h), v⁻¹); throws InvalidTriple when α = 0 or v is singular.
AutTriple aut_inverse(const AutTriple& t);
AutTriple aut_identity(const LieAlgebra& h);

/// Element (h, (α, v)) of h ⋊ (k* × Aut h) with (h1, s1)(h2, s2) = (h1 + α1⁻¹ v1(h2), s1 s2).
struct SemidirectElement {
  Vector h;
  Scalar alpha;
  LinearMap v;

  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

SemidirectElement semidirect_embed(const AutTriple& t);
SemidirectElement semidirect_multiply(const SemidirectElement& a, const SemidirectElement& b);

/// The group 𝒢(h, Δ) over GF(p): α ∈ k*, v ∈ Aut(h), and h0 from the linear condition.
std::vector<AutTriple> enumerate_aut_triples(const LieAlgebra& h, const LinearMap& delta,
                                             std::uint64_t budget = 2'000'000);

/// The inner-case membership test v(x0) − α x0 + h0 ∈ Z(h).
bool gcheck_inner(const LieAlgebra& h, std::span<const Scalar> x0, const AutTriple& t);

}  // namespace bicross

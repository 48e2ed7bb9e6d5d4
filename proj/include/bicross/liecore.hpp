#pragma once

// Lie algebras given by structure constants on a named basis.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bicross/exactmath.hpp"

namespace bicross {

/// Linear maps between coordinate spaces: column j is the image of basis vector j.
using LinearMap = Matrix;

/// Only the brackets [e_i, e_j] with i < j are stored; antisymmetry is structural.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Abelian algebra on the given basis.
  LieAlgebra(FieldDescriptor field, std::vector<std::string> basis_names);

  [[nodiscard]] FieldDescriptor field() const noexcept { return field_; }
  [[nodiscard]] std::size_t dim() const noexcept { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& basis_names() const noexcept { return names_; }
  [[nodiscard]] const std::string& name(std::size_t i) const { return names_.at(i); }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws BadParameter for an unknown name.
  [[nodiscard]] std::size_t require_index(std::string_view name) const;

  /// [e_i, e_j] for any ordered pair.
  [[nodiscard]] Vector basis_bracket(std::size_t i, std::size_t j) const;
  /// Bilinear extension of the structure constants.
  [[nodiscard]] Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;
  /// Matrix of y -> [x, y]; column j is [x, e_j].
  [[nodiscard]] Matrix ad(std::span<const Scalar> x) const;
  [[nodiscard]] Matrix ad_basis(std::size_t i) const;
  [[nodiscard]] bool is_abelian() const noexcept;

  [[nodiscard]] Vector zero() const { return zero_vector(field_, dim()); }
  [[nodiscard]] Vector unit(std::size_t i) const { return unit_vector(field_, dim(), i); }
  [[nodiscard]] Vector unit(std::string_view name) const { return unit(require_index(name)); }

  /// Same structure constants, new basis labels.
  [[nodiscard]] LieAlgebra renamed(std::vector<std::string> names) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

 private:
  friend class LieAlgebraBuilder;
  [[nodiscard]] std::size_t pair_index(std::size_t i, std::size_t j) const noexcept;

  FieldDescriptor field_;
  std::vector<std::string> names_;
  std::vector<Vector> upper_;  // [e_i, e_j], i < j, row-major over pairs
};

class LieAlgebraBuilder {
 public:
  LieAlgebraBuilder(FieldDescriptor field, std::vector<std::string> basis_names);

  /// Set [e_i, e_j] = out (and [e_j, e_i] = -out). i == j requires out = 0.
  LieAlgebraBuilder& set(std::size_t i, std::size_t j, std::span<const Scalar> out);
  /// [e_i, e_j] += c e_k
  LieAlgebraBuilder& add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
  /// Convenience: set("E", "G", {{"E", 1}}).
  LieAlgebraBuilder& set(std::string_view a, std::string_view b,
                         std::initializer_list<std::pair<std::string_view, long long>> terms);

  [[nodiscard]] std::size_t index(std::string_view name) const { return algebra_.require_index(name); }
  [[nodiscard]] FieldDescriptor field() const noexcept { return algebra_.field(); }
  [[nodiscard]] LieAlgebra build() const { return algebra_; }

 private:
  LieAlgebra algebra_;
};

bool equal_up_to_basis_order(const LieAlgebra& a, const LieAlgebra& b);

struct JacobiViolation {
  std::size_t i, j, l;
  Vector value;  // [[e_i,e_j],e_l] + [[e_j,e_l],e_i] + [[e_l,e_i],e_j]
};

/// All violating triples i < j < l; empty means the bracket is a Lie bracket.
std::vector<JacobiViolation> check_jacobi(const LieAlgebra& algebra);

/// A subspace of an algebra's coordinate space, stored as its rref basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(FieldDescriptor field, std::size_t ambient_dim, const std::vector<Vector>& spanning);

  static Subspace whole(FieldDescriptor field, std::size_t n);
  static Subspace zero(FieldDescriptor field, std::size_t n);

  [[nodiscard]] FieldDescriptor field() const noexcept { return field_; }
  [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_; }
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
  [[nodiscard]] const std::vector<Vector>& basis() const noexcept { return basis_; }
  [[nodiscard]] bool contains(std::span<const Scalar> v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;
  /// Coordinates of v in basis(), or nullopt if v is outside.
  [[nodiscard]] std::optional<Vector> coordinates(std::span<const Scalar> v) const;
  [[nodiscard]] bool is_subalgebra(const LieAlgebra& algebra) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  FieldDescriptor field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
/// span{[a, b] : a in A, b in B}
Subspace bracket_subspace(const LieAlgebra& algebra, const Subspace& a, const Subspace& b);

Subspace derived_algebra(const LieAlgebra& algebra);
/// L, [L,L], ... ; stops at the zero subspace or when a term repeats (the repeat is not listed).
std::vector<Subspace> derived_series(const LieAlgebra& algebra);
/// L, [L,L], [L,[L,L]], ... with the same stopping rule.
std::vector<Subspace> lower_central_series(const LieAlgebra& algebra);
std::vector<std::size_t> dims(const std::vector<Subspace>& series);

Subspace center(const LieAlgebra& algebra);
bool is_perfect(const LieAlgebra& algebra);
/// Number of derived steps to reach 0, nullopt when not solvable.
std::optional<std::size_t> solvable_length(const LieAlgebra& algebra);
bool is_metabelian(const LieAlgebra& algebra);

/// Gram matrix of kappa(x, y) = trace(ad x ad y).
Matrix killing_form(const LieAlgebra& algebra);

/// B(x, y) = x^T G y.
struct BilinearForm {
  Matrix gram;

  [[nodiscard]] Scalar operator()(std::span<const Scalar> x, std::span<const Scalar> y) const;
};

bool is_invariant_form(const LieAlgebra& algebra, const Matrix& gram);
/// Basis of {B : B([a,b],c) = B(a,[b,c])}.
std::vector<BilinearForm> invariant_bilinear_forms(const LieAlgebra& algebra, bool symmetric_only = false);

struct SelfDualResult {
  enum class Verdict { Yes, No, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::optional<Matrix> form;            // Yes: invariant and non-degenerate
  std::optional<Vector> radical_witness;  // No: B(w, -) = 0 for every invariant B
  std::string note;
};

std::string_view to_string(SelfDualResult::Verdict v) noexcept;

/// Searches for a non-degenerate invariant form. Candidates are the Killing form, the
/// identity, then combinations of the invariant basis: integer coefficients in a box
/// [-B, B] over Q, full residue combinations over GF(p), until `budget` candidates.
SelfDualResult self_dual(const LieAlgebra& algebra, std::uint64_t budget = 100000);

/// f^2 = id, f != +-id and f([x,y]) = [f x, y] + [x, f y] - f([f x, f y]) on basis pairs.
/// The classical statement is often written with f^2 = f; the +-1 eigenspace split needs f^2 = id.
bool is_product_structure(const LieAlgebra& algebra, const Matrix& f);
/// The +1 and -1 eigenspaces. Throws CharTwo in characteristic 2 and BadParameter when
/// f is not a product structure.
std::pair<Subspace, Subspace> split_product_structure(const LieAlgebra& algebra, const Matrix& f);

/// Block-diagonal brackets; clashing names in the second factor get a trailing '.
LieAlgebra direct_product(const LieAlgebra& a, const LieAlgebra& b);
LieAlgebra abelian_algebra(FieldDescriptor field, std::size_t n, std::string_view prefix = "z");

/// Structure constants in the basis given by the columns of `basis` (must be invertible).
LieAlgebra change_basis(const LieAlgebra& algebra, const Matrix& basis,
                        std::optional<std::vector<std::string>> names = std::nullopt);

}  // namespace bicross

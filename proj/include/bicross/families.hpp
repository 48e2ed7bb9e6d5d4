#pragma once

// Named algebras and matched pairs. Bases of the l-families are E_1..E_n, F_1..F_n, G (then H);
// for n = 1 the labels are plain E, F, G, H.

#include <string>
#include <vector>

#include "bicross/derivations.hpp"
#include "bicross/matched.hpp"

namespace bicross {

std::vector<std::string> l_basis_names(std::size_t n, bool with_h = false);

/// l(2n+1): [E_i, G] = E_i, [G, F_i] = F_i.
LieAlgebra make_l(std::size_t n, FieldDescriptor field);
/// L(2n+2) = l¹ with λ0 = 1, δ = (0, …, 0, 1).
LieAlgebra make_L(std::size_t n, FieldDescriptor field);
/// m(2n+2) = l² with A = D = I, δ = (1, 0, …, 0, 1) ∈ k^{2n}.
LieAlgebra make_m(std::size_t n, FieldDescriptor field);

// The codimension-one extensions of l(2n+1). All throw BadParameter on a violated constraint
// (wrong characteristic, forbidden λ0, shapes).
LieAlgebra make_l1(std::size_t n, const Scalar& lambda0, const Vector& delta);                  // λ0 ∉ {0, ±2}, δ ∈ k^{2n+1}
LieAlgebra make_l2(std::size_t n, const Matrix& A, const Matrix& D, const Vector& delta);       // δ ∈ k^{2n}
LieAlgebra make_l3(std::size_t n, const Matrix& C, const Vector& delta);                        // λ0 = 2
LieAlgebra make_l4(std::size_t n, const Matrix& B, const Vector& delta);                        // λ0 = −2
LieAlgebra make_l1_char2(std::size_t n, const Matrix& A, const Matrix& B, const Matrix& C, const Matrix& D,
                         const Vector& delta);                                                  // char 2, δ ∈ k^{2n}
LieAlgebra make_l2_char2(std::size_t n, const Scalar& lambda0, const Vector& delta);            // char 2, λ0 ≠ 0

/// [e1,e2] = e3, [e1,e3] = −2e1, [e1,e5] = [e3,e4] = e4, [e2,e3] = 2e2, [e2,e4] = e5, [e3,e5] = −e5.
LieAlgebra make_h5(FieldDescriptor field);
/// The non-inner derivation e11 − e41 − e22 + e53 − e44 − 2e55 of h5 (columns are images).
LinearMap h5_delta(FieldDescriptor field);
/// Basis e, f, h with [h,e] = 2e, [h,f] = −2f, [e,f] = h.
LieAlgebra make_sl2(FieldDescriptor field);
/// Basis x, y, z with [x,z] = x, [y,z] = α y.
LieAlgebra make_Lalpha(const Scalar& alpha);
/// Basis E, F, G with [F,E] = F, [E,G] = −G.
LieAlgebra make_L_minus1(FieldDescriptor field);
/// Basis f1, f2, f3 with [f1,f2] = −f1, [f1,f3] = f1, [f3,f2] = f2 + f3.
LieAlgebra make_lp1_f(FieldDescriptor field);

/// (kH, l(2n+1)) with E_i ◁ H = −E_i, F_i ◁ H = F_i, G ◁ H = G, G ▷ H = H.
MatchedPair mpcanon_L(std::size_t n, FieldDescriptor field);
/// (kH, l(2n+1)) with E_i ◁ H = E_i, F_i ◁ H = F_i, G ◁ H = E_1 + F_n, ▷ = 0.
MatchedPair mpcanon_m(std::size_t n, FieldDescriptor field);
/// (k0, h5) from (0, h5_delta), generator named F.
MatchedPair mp_h5(FieldDescriptor field);

}  // namespace bicross

#pragma once

// Lie ideals of g_{2n,ρ}(R) built from an involutive ideal J of R, the
// quotient map by the overline ideal, and recovery of J from a Lie ideal.

#include <vector>

#include "qtlie/lie.hpp"
#include "qtlie/lie_basis.hpp"
#include "qtlie/quotient.hpp"

namespace qtlie {

using TorusLie = GradedLie<TorusRing>;
using TorusMat = LieMat<QTorusElem>;
using FinGen = GenSym<FinAlgElem>;

// --- the torus side -------------------------------------------------------

/// g_{2n,ρ}(C_q/J) with the same n and ρ.
FinLieAlg quotient_lie(const TorusLie& lie, const QuotientRing& quotient);

/// Entrywise reduction modulo J(f,g). Throws std::invalid_argument when the
/// entries live over different parameters.
FinMat quotient_map(const TorusMat& a, const QuotientRing& quotient);
FinMat quotient_map(const TorusMat& a, const IdealFG& ideal);

/// Membership in the overline ideal, decided from its definition:
/// off-diagonal coefficients in J, (f_ii - f_11)-parts in J and the
/// f_11-part in (R_+ + [R,R]) ∩ J. Throws std::invalid_argument on a params
/// mismatch or when a is not in L_ρ.
bool ovl_membership(const TorusLie& lie, const TorusMat& a, const QuotientRing& quotient);
bool ovl_membership(const TorusLie& lie, const TorusMat& a, const IdealFG& ideal);

// --- subspaces of a finite-dimensional ring --------------------------------

/// {x : sum x_k images[k] ∈ target}, as a subspace of the coefficient space.
Subspace preimage(std::size_t dim, const std::vector<SparseVec>& images, const Subspace& target);

bool is_two_sided_ideal(const FinAlg& alg, const Subspace& j);
bool is_involutive(const FinAlg& alg, const Subspace& j);
/// R_+ + [R,R]
Subspace trace_space(const FinAlg& alg);
/// J_+ = {a ∈ J | ā = a}; J must be involutive.
Subspace plus_part(const FinAlg& alg, const Subspace& j);
/// [J,R]
Subspace commutator_with(const FinAlg& alg, const Subspace& j);
/// Ĵ = {a | [a,R] ⊂ J}
Subspace hat_ideal(const FinAlg& alg, const Subspace& j);
/// Ĵ₊ = {a | a + ā ∈ J}
Subspace hat_plus(const FinAlg& alg, const Subspace& j);
Subspace center_of(const FinAlg& alg);

// --- the three Lie ideals over a finite-dimensional ring -------------------

enum class Flavor { Overline, Underline, Tilde };
const char* flavor_name(Flavor f);

class LieIdealSpec {
 public:
  /// Throws std::invalid_argument unless J is a two-sided ideal closed
  /// under the involution.
  LieIdealSpec(FinLieAlg ambient, Flavor flavor, Subspace j);

  const FinLieAlg& ambient() const { return ambient_; }
  Flavor flavor() const { return flavor_; }
  const Subspace& j() const { return j_; }
  /// Spanning elements, diagonal part first.
  const std::vector<FinMat>& elems() const { return elems_; }
  /// The ideal as a subspace of flattened matrices.
  const Subspace& span() const { return span_; }
  std::size_t dim() const { return span_.dim(); }

 private:
  FinLieAlg ambient_;
  Flavor flavor_;
  Subspace j_;
  std::vector<FinMat> elems_;
  Subspace span_;
};

bool flavored_membership(const FinMat& a, const LieIdealSpec& spec);
/// Over the torus only the overline flavor is computable; the others throw
/// UnsupportedError.
bool flavored_membership(const TorusLie& lie, const TorusMat& a, const IdealFG& ideal, Flavor flavor);

/// The ideal generated by `seeds` under bracketing with every element of
/// `basis`, as a flattened subspace. Also returns a spanning list.
struct ClosureResult {
  Subspace span;
  std::vector<FinMat> elems;
};
ClosureResult ideal_closure(const LieBasis& basis, const std::vector<FinMat>& seeds);

// --- recovering J from a Lie ideal -----------------------------------------

struct ExtractReport {
  Subspace j;            // the common J_{i,j}
  Subspace i_space;      // I = {a | f_11(a) ∈ ideal}
  Subspace lower_bound;  // J_+ + [J,R]
  Subspace upper_bound;  // (R_+ + [R,R]) ∩ J
  bool bounds_coincide = false;
  CheckList checks;
};

/// Needs n >= 3 (UnsupportedError otherwise) and a span that is a Lie ideal
/// (std::invalid_argument otherwise).
ExtractReport extract_ideal(const FinLieAlg& lie, const std::vector<FinMat>& span);

}  // namespace qtlie

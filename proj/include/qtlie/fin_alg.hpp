#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qtlie/gauss_rational.hpp"
#include "qtlie/linalg.hpp"
#include "qtlie/poly.hpp"

namespace qtlie {

enum class Provenance {
  QuotientOfTorus,
  Matrix,
  TildeMatrix,
  Scalar,
  ScalarPair,
  OpPair,
  KleinGroupAlgebra,
  DirectSum,
};

std::string provenance_name(Provenance p);

class FinAlg;
using FinAlgPtr = std::shared_ptr<const FinAlg>;

/// Finite-dimensional unital associative algebra with involution, given by
/// structure tables on a fixed basis. The constructor checks associativity,
/// the unit, and that the involution is an anti-automorphism of order two.
class FinAlg {
 public:
  /// mult[i * dim + j] is e_i e_j; invol[i] is the image of e_i.
  /// `symbols` names elements for the text syntax (e.g. "t1", "tau").
  FinAlg(std::vector<std::string> labels, std::vector<GaussRat> unit, std::vector<SparseVec> mult,
         std::vector<SparseVec> invol, Provenance provenance,
         std::map<std::string, SparseVec> symbols = {});

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<GaussRat>& unit() const { return unit_; }
  const SparseVec& product(std::size_t i, std::size_t j) const { return mult_[i * dim() + j]; }
  const SparseVec& involution(std::size_t i) const { return invol_[i]; }
  Provenance provenance() const { return provenance_; }
  const std::map<std::string, SparseVec>& symbols() const { return symbols_; }

 private:
  void validate() const;

  std::vector<std::string> labels_;
  std::vector<GaussRat> unit_;
  std::vector<SparseVec> mult_;
  std::vector<SparseVec> invol_;
  Provenance provenance_;
  std::map<std::string, SparseVec> symbols_;
};

/// Coefficient vector over a FinAlg basis.
class FinAlgElem {
 public:
  FinAlgElem(FinAlgPtr alg, std::vector<GaussRat> coeffs);
  static FinAlgElem zero(FinAlgPtr alg);
  static FinAlgElem one(FinAlgPtr alg);
  static FinAlgElem basis(FinAlgPtr alg, std::size_t k);
  static FinAlgElem scalar(FinAlgPtr alg, const GaussRat& c);
  static FinAlgElem from_sparse(FinAlgPtr alg, const SparseVec& v);

  const FinAlgPtr& algebra() const { return alg_; }
  const std::vector<GaussRat>& coeffs() const { return coeffs_; }
  SparseVec to_sparse() const { return SparseVec::from_dense(coeffs_); }
  bool is_zero() const;

  FinAlgElem& operator+=(const FinAlgElem& o);
  FinAlgElem& operator-=(const FinAlgElem& o);
  friend FinAlgElem operator+(FinAlgElem a, const FinAlgElem& b) { return a += b; }
  friend FinAlgElem operator-(FinAlgElem a, const FinAlgElem& b) { return a -= b; }
  FinAlgElem operator-() const;
  friend FinAlgElem operator*(const FinAlgElem& a, const FinAlgElem& b);
  friend FinAlgElem operator*(const GaussRat& c, const FinAlgElem& a);
  friend bool operator==(const FinAlgElem& a, const FinAlgElem& b) {
    return a.alg_ == b.alg_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;
  static FinAlgElem parse(const std::string& text, const FinAlgPtr& alg);

 private:
  FinAlgPtr alg_;
  std::vector<GaussRat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const FinAlgElem& x);

FinAlgElem fin_involution(const FinAlgElem& x);
FinAlgElem fin_commutator(const FinAlgElem& x, const FinAlgElem& y);
/// Two-sided inverse by solving x y = 1 exactly.
std::optional<FinAlgElem> fin_inverse(const FinAlgElem& x);
/// p(x) by Horner's rule.
FinAlgElem fin_eval_poly(const Poly& p, const FinAlgElem& x);

// Named algebras over Q(i).

/// M_m with the transpose involution; basis E_ab in row-major order.
FinAlgPtr matrix_algebra(std::size_t m);
/// M_2 with A -> J A^t J^{-1}, J = [[0,1],[-1,0]].
FinAlgPtr tilde_matrix_algebra();
/// Q(i) itself with the identity involution.
FinAlgPtr scalar_algebra();
/// C ⊕ C^op with the swap involution (a,b) -> (b,a).
FinAlgPtr scalar_pair_algebra();
/// S ⊕ S^op, (a,b)(c,d) = (ac, db), involution (a,b) -> (b,a).
FinAlgPtr op_pair_algebra(const FinAlgPtr& s);
/// Group algebra of the Klein four group, basis (1, τ, γ, τγ), τ̄ = -τ, γ̄ = -γ.
FinAlgPtr klein_algebra();
/// Componentwise product and involution; A's basis first.
FinAlgPtr direct_sum(const FinAlgPtr& a, const FinAlgPtr& b);

/// {dim, basis, unit, mult, invol} with coefficient strings.
std::string fin_alg_to_json(const FinAlg& alg);

// Subspace helpers on a FinAlg (ambient space = coefficient vectors).

/// Span of e_i e_j - e_j e_i.
Subspace commutator_span(const FinAlg& alg);
/// R_+ = {a : ā = a}
Subspace symmetric_part(const FinAlg& alg);
/// R_- = {a : ā = -a}
Subspace antisymmetric_part(const FinAlg& alg);
/// Image of a -> a - rho ā.
Subspace twisted_image(const FinAlg& alg, int rho);
/// Span of the given elements.
Subspace span_in(const FinAlg& alg, const std::vector<FinAlgElem>& elems);
/// Two-sided ideal generated by the given elements.
Subspace ideal_generated(const FinAlg& alg, const std::vector<FinAlgElem>& gens);

}  // namespace qtlie

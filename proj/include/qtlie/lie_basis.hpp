#pragma once

// Explicit bases of g_{2n,ρ}(R) for finite-dimensional R, following the
// decomposition f_11(R_+ + [R,R]) ⊕ Σ(f_ii - f_11)(R) ⊕ Σ f_ij(R) ⊕ Σ g_ij(R) ⊕ Σ h_ij(R).

#include <optional>
#include <string>
#include <vector>

#include "qtlie/lie.hpp"

namespace qtlie {

using FinLieAlg = GradedLie<FinRing>;
using FinMat = LieMat<FinAlgElem>;

/// Entry (r, c) coefficient k sits at ((r * 2n) + c) * dim R + k.
SparseVec flatten(const FinMat& a, std::size_t ring_dim);
FinMat unflatten(const SparseVec& v, int n, const FinAlgPtr& alg);

class LieBasis {
 public:
  LieBasis(FinLieAlg lie, std::vector<FinMat> elems, std::vector<std::string> labels);

  const FinLieAlg& lie() const { return lie_; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<FinMat>& elems() const { return elems_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t ambient_dim() const { return span_.ambient_dim(); }
  const Subspace& span() const { return span_; }

  SparseVec flat(const FinMat& a) const { return flatten(a, lie_.ring().dim()); }
  /// Coordinates of a over the basis, or nullopt when a is outside the span.
  std::optional<SparseVec> coordinates(const FinMat& a) const { return span_.coordinates(flat(a)); }
  FinMat combination(const SparseVec& coords) const;

 private:
  FinLieAlg lie_;
  std::vector<FinMat> elems_;
  std::vector<std::string> labels_;
  Subspace span_;
};

/// Basis of g_{2n,ρ}(R). Throws std::invalid_argument for n < 2 and
/// std::logic_error if the pieces turn out dependent.
LieBasis enumerate_basis(const FinLieAlg& lie);

/// The quantum torus is infinite-dimensional: always throws UnsupportedError.
LieBasis enumerate_basis(const GradedLie<TorusRing>& lie);

/// 2N^2 - ρN
std::size_t graded_dim(std::size_t big_n, int rho);

}  // namespace qtlie

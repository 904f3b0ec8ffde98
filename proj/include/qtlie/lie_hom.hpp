#pragma once

// Lie homomorphisms given on generators, checked by linear extension, and
// the explicit isomorphism tables for the small example algebras.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qtlie/ideals.hpp"
#include "qtlie/report.hpp"

namespace qtlie {

enum class CodomainKind { Graded, SpecialLinear };

struct LieHomTable {
  std::string name;
  FinLieAlg domain;
  /// Matrix context of the codomain. For SpecialLinear only its size and
  /// ring are used.
  FinLieAlg codomain;
  CodomainKind codomain_kind;
  std::size_t codomain_dim;
  std::vector<FinGen> generators;
  std::vector<FinMat> images;  // images[k] is the image of generators[k]
  std::function<FinMat(const FinGen&)> rule;
};

/// f_ij (i != j), g_ij and h_ij (i <= j) over the ring basis.
std::vector<FinGen> domain_generators(const FinLieAlg& lie);

LieHomTable make_hom_table(std::string name, FinLieAlg domain, FinLieAlg codomain, CodomainKind kind,
                           std::size_t codomain_dim, std::function<FinMat(const FinGen&)> rule);

/// dim sl_{2n}(S) = (2n)^2 dim S - dim S/[S,S]
std::size_t sl_dim(int n, const FinAlg& s);

/// The map determined by a table: a basis of the domain made of generators
/// and brackets of generators, with images.
struct HomExtension {
  Report report;
  std::vector<FinMat> basis;
  std::vector<std::string> labels;
  std::vector<FinMat> images;  // indexed like `span` insertions
  Subspace span;
  std::size_t domain_dim = 0;
  std::size_t image_rank = 0;
  std::size_t ring_dim = 0;  // of the domain
  int codomain_n = 0;

  /// Image of a domain element; nullopt outside the span.
  std::optional<FinMat> apply(const FinMat& a) const;
};

/// Linearity in the coefficient slot, consistency of the linear extension,
/// bracket preservation on all basis pairs, and a rank certificate.
HomExtension hom_extend(const LieHomTable& table);
Report hom_verify(const LieHomTable& table);

// --- the example tables ----------------------------------------------------

/// g_{2n,ρ}(M_m) -> g_{2nm,ρ}(k): blocks of matrix units become single indices.
LieHomTable matrix_iso_table(int n, int rho, std::size_t m);
/// g_{2n,ρ}(S ⊕ S^op) -> sl_{2n}(S).
LieHomTable op_pair_iso_table(int n, int rho, const FinAlgPtr& s);
/// g_{2n,ρ}(M_m ⊕ M_m^op) -> sl_{2n}(M_m) -> sl_{2nm}(k).
LieHomTable op_pair_matrix_iso_table(int n, int rho, std::size_t m);
/// g_{2n,ρ}(CK_4) -> sl_{2n}(k) ⊕ sl_{2n}(k), block diagonal in size 4n.
LieHomTable klein_iso_table(int n, int rho);
/// g_{2n,-ρ}(M_2) -> g_{2n,ρ}(M̃_2).
LieHomTable tilde_iso_table(int n, int rho);

std::vector<LieHomTable> builtin_iso_tables(int n, int rho, std::size_t m = 2);

/// Inverse of the S ⊕ S^op map on a generator e_pq(a) of sl_{2n}(S), p != q
/// (1-based), as an element of g_{2n,ρ}(S ⊕ S^op).
FinMat op_pair_inverse(const FinLieAlg& domain, const FinAlgPtr& s, int p, int q, const FinAlgElem& a);

/// Applies the forward map to op_pair_inverse on every e_pq(s_k) and
/// compares with e_pq(s_k).
Report op_pair_inverse_check(int n, int rho, const FinAlgPtr& s);

}  // namespace qtlie

#pragma once

// Structure constants of finite-dimensional Lie algebras, the Killing-form
// semisimplicity test, and the classification of the semisimple quotients
// g_{2n,ρ}(C_q/J(f,g)).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtlie/ideals.hpp"
#include "qtlie/report.hpp"

namespace qtlie {

/// A Lie algebra given by its bracket table on a fixed basis.
class FinLie {
 public:
  /// table[p * dim + q] = [x_p, x_q] in coordinates. Throws
  /// std::invalid_argument unless the table is antisymmetric and satisfies
  /// the Jacobi identity.
  FinLie(std::vector<std::string> labels, std::vector<SparseVec> table);

  /// The structure constants of g_{2n,ρ}(R) on an enumerated basis.
  static FinLie from_basis(const LieBasis& basis);
  static FinLie abelian(std::size_t dim);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVec& bracket(std::size_t p, std::size_t q) const { return table_[p * dim() + q]; }
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

 private:
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
};

/// Basis of a first, then b; the two summands commute.
FinLie direct_sum(const FinLie& a, const FinLie& b);
/// L/I on the complement spanned by the non-pivot coordinates of I. I must
/// be an ideal (std::invalid_argument otherwise).
FinLie quotient(const FinLie& lie, const Subspace& ideal);

/// Span of [x, y] with x in a, y in b.
Subspace bracket_span(const FinLie& lie, const Subspace& a, const Subspace& b);
bool is_lie_ideal(const FinLie& lie, const Subspace& s);

struct KillingRank {
  std::size_t rank = 0;
  bool semisimple = false;
  std::size_t center_dim = 0;
};

/// Rank of κ(x, y) = tr(ad x ad y) and the dimension of the center.
KillingRank killing_rank(const FinLie& lie);

/// Dimension cap for constructed Lie algebras: QTLIE_DIM_CAP if set, else 120.
std::size_t dim_cap();

struct ClassificationReport {
  explicit ClassificationReport(TorusParams p) : params(p) {}

  TorusParams params;
  Poly f;
  Poly g;
  int n = 0;
  int rho = 0;
  int lemma_case = 0;   // 1..5, 0 for the trivial quotient
  std::string family;   // "C-type", "D-type", "A-type" or "trivial"
  std::string factor;   // e.g. "g_{12,-1}", "sl_6"
  std::size_t big_n = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t factor_dim = 0;
  std::size_t expected_dim = 0;

  struct Observed {
    std::size_t dim = 0;
    std::size_t killing_rank = 0;
    std::size_t center_dim = 0;
    std::size_t factor_count = 0;
  };
  bool verified = false;
  std::optional<Observed> observed;
  std::string witness;  // first failed check of classify_verify
  nlohmann::json extra = nlohmann::json::object();

  nlohmann::json to_json() const;
};

/// The predicted semisimple algebra, computed from degrees alone. Throws
/// std::invalid_argument naming the first violated hypothesis.
ClassificationReport classify(const TorusParams& params, const Poly& f, const Poly& g, int n, int rho);

/// Minimal symmetric factors of f with the α of each factor's J(α, β) form.
struct SymmetricFactor {
  Poly factor;
  GaussRat alpha;
};
/// Throws UnsupportedError when a root (or, for q = -1, the square root of
/// a root) is not in Q(i).
std::vector<SymmetricFactor> symmetric_factors(const Poly& f, int theta, int m);

/// Simple-factor count through repeated CRT splitting down to the named
/// quotients C_q/J(α,β). Each leaf contributes the number of simple summands
/// of g_{2n,ρ} over its named model.
struct FactorCount {
  std::size_t count = 0;
  std::size_t leaves = 0;
  CheckList checks;
  nlohmann::json leaf_details = nlohmann::json::array();
};
FactorCount crt_factor_count(const TorusParams& params, const Poly& f, const Poly& g);

/// Builds g_{2n,ρ}(C_q/J(f,g)), checks the dimension, the Killing rank, the
/// center and the CRT factor count against classify. Throws SizeError when
/// the predicted or built dimension exceeds the cap.
ClassificationReport classify_verify(const TorusParams& params, const Poly& f, const Poly& g, int n, int rho,
                                     std::optional<std::size_t> cap = std::nullopt);

struct RadicalReport {
  Report report;
  Poly f0;
  Poly g0;
  std::size_t lie_dim = 0;
  std::size_t radical_dim = 0;
  std::size_t nilpotency_index = 0;  // smallest k with R^k = 0
  std::size_t index_bound = 0;       // k1 + k2 + 1
  std::size_t quotient_dim = 0;
  std::size_t quotient_killing_rank = 0;
  std::size_t expected_quotient_dim = 0;

  nlohmann::json to_json() const;
};

/// The radical of g_{2n,ρ}(C_q/J(f,g)) as the kernel of the map to
/// g_{2n,ρ}(C_q/J(f0,g0)): ideal, nilpotent, semisimple quotient.
RadicalReport radical_verify(const TorusParams& params, const Poly& f, const Poly& g, int n, int rho,
                             std::optional<std::size_t> cap = std::nullopt);

/// Smallest k >= 1 with f | f0^k for the squarefree part f0.
std::size_t squarefree_exponent(const Poly& f);

struct MinimalPolys {
  Poly f;
  Poly g;
  CheckList checks;
};

/// Monic minimal polynomial of x in its algebra.
Poly minimal_polynomial(const FinAlgElem& x);
/// Minimal polynomials of the images of t1^m and t2^m, with their
/// postconditions checked.
MinimalPolys minimal_polys(const QuotientRing& a);

/// Every shape g_{2n,ρ}(C_q)/Ann(V) reachable with deg f, deg g <= bound,
/// the trivial quotient first, then by increasing k. Needs n >= 3.
std::vector<ClassificationReport> irrep_quotient_catalog(const TorusParams& params, int n, int rho,
                                                         std::size_t degree_bound);

}  // namespace qtlie

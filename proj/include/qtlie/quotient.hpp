#pragma once

// Involutive ideals J(f,g) of the quantum torus, the finite quotients
// C_q/J(f,g), their CRT splittings and the named models of C_q/J(α,β).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtlie/fin_alg.hpp"
#include "qtlie/poly.hpp"
#include "qtlie/torus.hpp"

namespace qtlie {

/// The ideal of C_q generated by f(t1^m) and g(t2^m).
class IdealFG {
 public:
  /// Throws std::invalid_argument when deg f or deg g is 0, f(0)g(0) = 0,
  /// or the ideal would not be closed under the involution.
  IdealFG(TorusParams params, Poly f, Poly g);

  const TorusParams& params() const { return params_; }
  const Poly& f() const { return f_; }
  const Poly& g() const { return g_; }
  /// f(T^m) and g(T^m): the actual relations on t1 and t2.
  Poly f_lifted() const { return f_.substitute_power(params_.m()); }
  Poly g_lifted() const { return g_.substitute_power(params_.m()); }

 private:
  TorusParams params_;
  Poly f_;
  Poly g_;
};

/// J(α,β) in the f/g form: (t1-α)(t1+α) becomes f = T - α² when m = 2, etc.
IdealFG ideal_alpha_beta(const TorusParams& params, const GaussRat& alpha, const GaussRat& beta);

/// C_q/J(f,g) with basis t1^i t2^j, 0 <= i < deg f(T^m), 0 <= j < deg g(T^m),
/// at index i * deg g(T^m) + j.
class QuotientRing {
 public:
  explicit QuotientRing(IdealFG ideal);

  const IdealFG& ideal() const { return ideal_; }
  const FinAlgPtr& algebra() const { return alg_; }
  std::size_t dim() const { return alg_->dim(); }
  std::size_t index(std::size_t i, std::size_t j) const { return i * deg2_ + j; }

  /// Normal form of x modulo J(f,g).
  FinAlgElem project(const QTorusElem& x) const;
  /// Image of t1^a t2^b for any integers a, b.
  FinAlgElem monomial(std::int64_t a, std::int64_t b) const;
  FinAlgElem t1() const { return monomial(1, 0); }
  FinAlgElem t2() const { return monomial(0, 1); }
  FinAlgElem t1_m() const { return monomial(ideal_.params().m(), 0); }
  FinAlgElem t2_m() const { return monomial(0, ideal_.params().m()); }
  /// Exponent pair of each basis element.
  const std::vector<Exponent>& basis_exponents() const { return exps_; }

 private:
  std::vector<GaussRat> residue(const Poly& modulus, const Poly& inverse_t, std::int64_t e) const;

  IdealFG ideal_;
  std::size_t deg1_;
  std::size_t deg2_;
  Poly t_inv1_;  // T^{-1} mod f(T^m)
  Poly t_inv2_;
  std::vector<Exponent> exps_;
  FinAlgPtr alg_;
};

QuotientRing quotient_ring(const IdealFG& ideal);

/// Result of a structure check: name of each property and whether it held.
struct CheckList {
  std::vector<std::pair<std::string, bool>> items;
  void add(std::string name, bool ok) { items.emplace_back(std::move(name), ok); }
  bool all() const;
  /// Name of the first failed item, or "".
  std::string first_failure() const;
};

enum class SplitVariable { First, Second };

struct CrtSplit {
  QuotientRing whole;
  QuotientRing part1;
  QuotientRing part2;
  FinAlgElem a1;  // maps to (1, 0)
  FinAlgElem a2;  // maps to (0, 1)
  FinAlgPtr sum;  // direct sum of the two parts
  /// Image in `sum` of each basis element of `whole`.
  std::vector<FinAlgElem> basis_images;
  CheckList checks;
};

/// Splits C_q/J(f1 f2, g) (or C_q/J(f, g1 g2) for SplitVariable::Second)
/// along coprime factors. Throws NonCoprimeError when gcd(p1, p2) != 1.
CrtSplit crt_split(const TorusParams& params, const Poly& p1, const Poly& p2, const Poly& other,
                   SplitVariable which = SplitVariable::First);

struct NamedIso {
  int case_number;  // 1..5, by parameter triple
  QuotientRing source;
  FinAlgPtr target;
  FinAlgElem t1_image;
  FinAlgElem t2_image;
  std::vector<FinAlgElem> basis_images;
  CheckList checks;

  /// Image of a quotient element.
  FinAlgElem apply(const FinAlgElem& x) const;
  /// Image of a torus element under t1 -> t1_image, t2 -> t2_image.
  FinAlgElem apply_direct(const QTorusElem& x) const;
};

/// The explicit model of C_q/J(α,β) for each parameter triple. Throws
/// std::invalid_argument when α or β is zero.
NamedIso named_quotient_iso(const TorusParams& params, const GaussRat& alpha, const GaussRat& beta);

}  // namespace qtlie

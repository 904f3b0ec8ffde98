#pragma once

// Ring handles for the Lie algebra layer. A handle wraps a coefficient
// ring with its involution and the membership test for [R,R] that the
// trace criterion needs.

#include <concepts>
#include <memory>
#include <string>

#include "qtlie/fin_alg.hpp"
#include "qtlie/linalg.hpp"
#include "qtlie/torus.hpp"

namespace qtlie {

template <class R>
concept InvolutiveRing = requires(const R& ring, const typename R::Elem& a, const GaussRat& c) {
  { ring.zero() } -> std::same_as<typename R::Elem>;
  { ring.one() } -> std::same_as<typename R::Elem>;
  { ring.scalar(c) } -> std::same_as<typename R::Elem>;
  { ring.bar(a) } -> std::same_as<typename R::Elem>;
  { ring.in_commutator(a) } -> std::convertible_to<bool>;
  { ring.name() } -> std::convertible_to<std::string>;
  { a * a } -> std::same_as<typename R::Elem>;
  { a + a } -> std::same_as<typename R::Elem>;
  { a - a } -> std::same_as<typename R::Elem>;
  { c * a } -> std::same_as<typename R::Elem>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

/// C_q with its graded involution. [C_q, C_q] is the span of the
/// non-central monomials.
class TorusRing {
 public:
  using Elem = QTorusElem;

  explicit TorusRing(TorusParams params) : params_(params) {}

  const TorusParams& params() const { return params_; }
  Elem zero() const { return Elem(params_); }
  Elem one() const { return Elem::scalar(params_, GaussRat(1)); }
  Elem scalar(const GaussRat& c) const { return Elem::scalar(params_, c); }
  Elem bar(const Elem& a) const { return qt_involution(a); }
  bool in_commutator(const Elem& a) const { return qt_commutator_membership(a); }
  Elem parse(const std::string& text) const { return Elem::parse(text, params_); }
  std::string name() const { return "C_q" + params_.to_string(); }
  friend bool operator==(const TorusRing& a, const TorusRing& b) { return a.params_ == b.params_; }

 private:
  TorusParams params_;
};

/// A finite-dimensional algebra; [R,R] is computed once as a span.
class FinRing {
 public:
  using Elem = FinAlgElem;

  explicit FinRing(FinAlgPtr alg);

  const FinAlgPtr& algebra() const { return alg_; }
  std::size_t dim() const { return alg_->dim(); }
  Elem zero() const { return Elem::zero(alg_); }
  Elem one() const { return Elem::one(alg_); }
  Elem scalar(const GaussRat& c) const { return Elem::scalar(alg_, c); }
  Elem basis(std::size_t k) const { return Elem::basis(alg_, k); }
  Elem bar(const Elem& a) const { return fin_involution(a); }
  bool in_commutator(const Elem& a) const { return commutators_->contains(a.to_sparse()); }
  const Subspace& commutator_subspace() const { return *commutators_; }
  Elem parse(const std::string& text) const { return Elem::parse(text, alg_); }
  std::string name() const { return provenance_name(alg_->provenance()); }
  friend bool operator==(const FinRing& a, const FinRing& b) { return a.alg_ == b.alg_; }

 private:
  FinAlgPtr alg_;
  std::shared_ptr<const Subspace> commutators_;
};

static_assert(InvolutiveRing<TorusRing>);
static_assert(InvolutiveRing<FinRing>);

}  // namespace qtlie

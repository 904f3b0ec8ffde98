#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtlie/gauss_rational.hpp"

namespace qtlie {

/// (q, θ₁, θ₂) for an elementary quantum torus with graded involution
/// t̄₁ = θ₁t₁, t̄₂ = θ₂t₂. Only the six triples of the admissible set are
/// constructible; m is the multiplicative order of q.
class TorusParams {
 public:
  /// Throws std::invalid_argument outside the admissible set.
  TorusParams(int q, int theta1, int theta2);

  /// The six admissible triples, in a fixed order.
  static const std::vector<TorusParams>& all();
  /// Parses "q,θ1,θ2", e.g. "-1,1,1".
  static TorusParams parse(const std::string& text);

  int q() const { return q_; }
  int theta1() const { return theta1_; }
  int theta2() const { return theta2_; }
  int m() const { return q_ == 1 ? 1 : 2; }

  std::string to_string() const;
  friend bool operator==(const TorusParams&, const TorusParams&) = default;

 private:
  int q_;
  int theta1_;
  int theta2_;
};

/// (-1)^k as an int, valid for negative k.
inline int sign_power(int s, std::int64_t k) { return (s == -1 && (k % 2 != 0)) ? -1 : 1; }

using Exponent = std::pair<std::int64_t, std::int64_t>;

/// Element of C_q: finite sum of c * t1^a t2^b over Z^2, zero terms never stored.
class QTorusElem {
 public:
  explicit QTorusElem(TorusParams params) : params_(params) {}

  static QTorusElem monomial(TorusParams params, std::int64_t a, std::int64_t b,
                             const GaussRat& c = GaussRat(1));
  static QTorusElem scalar(TorusParams params, const GaussRat& c) { return monomial(params, 0, 0, c); }

  const TorusParams& params() const { return params_; }
  const std::map<Exponent, GaussRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussRat coeff(std::int64_t a, std::int64_t b) const;
  void add_term(std::int64_t a, std::int64_t b, const GaussRat& c);

  QTorusElem& operator+=(const QTorusElem& o);
  QTorusElem& operator-=(const QTorusElem& o);
  friend QTorusElem operator+(QTorusElem x, const QTorusElem& y) { return x += y; }
  friend QTorusElem operator-(QTorusElem x, const QTorusElem& y) { return x -= y; }
  QTorusElem operator-() const;
  friend QTorusElem operator*(const QTorusElem& x, const QTorusElem& y);
  friend QTorusElem operator*(const GaussRat& c, const QTorusElem& x);
  friend bool operator==(const QTorusElem& x, const QTorusElem& y) {
    return x.params_ == y.params_ && x.terms_ == y.terms_;
  }

  /// Sum of "c*t1^a*t2^b" terms.
  std::string to_string() const;
  static QTorusElem parse(const std::string& text, TorusParams params);

 private:
  TorusParams params_;
  std::map<Exponent, GaussRat> terms_;
};

std::ostream& operator<<(std::ostream& os, const QTorusElem& x);

/// Bilinear product with (t1^a t2^b)(t1^c t2^d) = q^{bc} t1^{a+c} t2^{b+d}.
/// Throws std::invalid_argument on mismatched params.
QTorusElem qt_mul(const QTorusElem& x, const QTorusElem& y);

/// The graded anti-automorphism t1 -> θ1 t1, t2 -> θ2 t2.
QTorusElem qt_involution(const QTorusElem& x);

/// Inverse of a single nonzero term; nullopt for anything else.
std::optional<QTorusElem> qt_monomial_inverse(const QTorusElem& x);

struct TorusSplit {
  QTorusElem center;
  QTorusElem commutator;
};

/// Splits x along C_q = Z(C_q) ⊕ [C_q, C_q]: monomials with m|a and m|b are central.
TorusSplit qt_decompose(const QTorusElem& x);
bool qt_is_central_monomial(const TorusParams& p, std::int64_t a, std::int64_t b);
bool qt_center_membership(const QTorusElem& x);
bool qt_commutator_membership(const QTorusElem& x);

/// xy - yx
QTorusElem qt_commutator(const QTorusElem& x, const QTorusElem& y);

}  // namespace qtlie

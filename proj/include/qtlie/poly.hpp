#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtlie/gauss_rational.hpp"

namespace qtlie {

/// Dense univariate polynomial over Q(i), coefficients indexed by degree.
/// The leading coefficient is nonzero; the zero polynomial has no degree.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<GaussRat> coeffs);
  Poly(std::initializer_list<GaussRat> coeffs) : Poly(std::vector<GaussRat>(coeffs)) {}

  static Poly constant(const GaussRat& c) { return Poly(std::vector<GaussRat>{c}); }
  /// c * T^k
  static Poly monomial(std::size_t k, const GaussRat& c = GaussRat(1));
  /// T - root
  static Poly linear(const GaussRat& root) { return Poly({-root, GaussRat(1)}); }
  static Poly from_roots(const std::vector<GaussRat>& roots);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  /// Degree of a polynomial known to be nonzero; throws on zero.
  std::size_t deg() const;
  const std::vector<GaussRat>& coeffs() const { return coeffs_; }
  GaussRat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : GaussRat(); }
  GaussRat leading() const { return is_zero() ? GaussRat() : coeffs_.back(); }

  Poly monic() const;
  Poly derivative() const;
  GaussRat eval(const GaussRat& x) const;
  /// p(c*T)
  Poly scale_variable(const GaussRat& c) const;
  /// p(T^m)
  Poly substitute_power(std::size_t m) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const GaussRat& c, const Poly& p);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// "T^2 - 3*T + 1"; non-real coefficients are parenthesized.
  std::string to_string() const;
  static Poly parse(const std::string& text);

 private:
  void trim();
  std::vector<GaussRat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Quotient and remainder; throws std::invalid_argument on a zero divisor.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
bool poly_divides(const Poly& d, const Poly& a);

/// Monic gcd; gcd(0, 0) is 0.
Poly poly_gcd(const Poly& a, const Poly& b);

struct Bezout {
  Poly u;
  Poly v;
  Poly d;  // monic gcd, u*f + v*g == d
};

/// Extended Euclid. Throws std::invalid_argument when both inputs are zero.
Bezout poly_bezout(const Poly& f, const Poly& g);

/// Monic f / gcd(f, f'). Throws std::invalid_argument on zero input.
Poly poly_squarefree_part(const Poly& f);

bool poly_is_squarefree(const Poly& f);

/// f(eta^m T) == f(T) with eta = ±1.
bool poly_symmetry_check(const Poly& f, int eta, int m);

/// Inverse of x modulo `modulus`, if gcd(x, modulus) == 1.
std::optional<Poly> poly_inverse_mod(const Poly& x, const Poly& modulus);

/// Roots of f lying in Q(i), each repeated by multiplicity. Roots outside
/// Q(i) are simply absent, so the result may have fewer than deg f entries.
std::vector<GaussRat> poly_gaussian_roots(const Poly& f);

}  // namespace qtlie

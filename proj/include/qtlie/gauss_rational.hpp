#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace qtlie {

/// Exact element of Q(i): re + im*i with both parts reduced fractions.
///
/// gmpxx keeps every mpq_class canonical after arithmetic, so structural
/// equality of the two parts is equality in the field.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(std::int64_t re) : re_(static_cast<long>(re)) {}  // NOLINT(implicit)
  GaussRat(mpq_class re, mpq_class im = 0);

  /// re_num/re_den + (im_num/im_den) i.
  static GaussRat frac(std::int64_t re_num, std::int64_t re_den,
                       std::int64_t im_num = 0, std::int64_t im_den = 1);
  static GaussRat i() { return GaussRat(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// Complex conjugate. Not the ring involution of any algebra here.
  GaussRat conj() const { return GaussRat(re_, -im_); }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  /// Throws std::domain_error on zero.
  GaussRat inverse() const;

  /// Exact square root in Q(i) when one exists.
  std::optional<GaussRat> sqrt() const;

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  /// Text form "a/b", "c/d*i" or "a/b+c/d*i" (denominators omitted when 1).
  std::string to_string() const;
  /// Parses the same syntax; whitespace-insensitive.
  static GaussRat parse(const std::string& text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRat& x);

/// Sign parameter q, θ₁, θ₂, ρ: always ±1.
inline GaussRat sign_scalar(int s) { return GaussRat(s); }

}  // namespace qtlie

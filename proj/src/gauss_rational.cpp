#include "qtlie/gauss_rational.hpp"

#include <ostream>
#include <stdexcept>

#include "qtlie/expr_parser.hpp"

namespace qtlie {

namespace {

std::string rat_string(const mpq_class& q) { return q.get_str(); }

// Exact rational square root, if q is the square of a rational.
std::optional<mpq_class> rat_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

GaussRat::GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRat GaussRat::frac(std::int64_t re_num, std::int64_t re_den, std::int64_t im_num,
                        std::int64_t im_den) {
  if (re_den == 0 || im_den == 0) throw std::invalid_argument("zero denominator");
  mpq_class re(static_cast<long>(re_num), static_cast<long>(re_den));
  mpq_class im(static_cast<long>(im_num), static_cast<long>(im_den));
  return GaussRat(re, im);
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  mpq_class n = norm();
  return GaussRat(re_ / n, -im_ / n);
}

std::optional<GaussRat> GaussRat::sqrt() const {
  if (is_zero()) return GaussRat();
  // (x + yi)^2 = re + im i  =>  x^2 = (re + |z|)/2, y^2 = (|z| - re)/2.
  auto modulus = rat_sqrt(norm());
  if (!modulus) return std::nullopt;
  auto x = rat_sqrt((re_ + *modulus) / 2);
  auto y = rat_sqrt((*modulus - re_) / 2);
  if (!x || !y) return std::nullopt;
  mpq_class yy = *y;
  if (sgn(im_) < 0) yy = -yy;
  GaussRat root(*x, yy);
  if (root * root != *this) return std::nullopt;
  return root;
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussRat::to_string() const {
  if (sgn(im_) == 0) return rat_string(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = rat_string(im_) + "*i";
  }
  if (sgn(re_) == 0) return imag;
  if (imag.front() == '-') return rat_string(re_) + imag;
  return rat_string(re_) + "+" + imag;
}

GaussRat GaussRat::parse(const std::string& text) { return parse_scalar(text); }

std::ostream& operator<<(std::ostream& os, const GaussRat& x) { return os << x.to_string(); }

}  // namespace qtlie

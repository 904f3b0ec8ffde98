#include "qtlie/poly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "qtlie/expr_parser.hpp"

namespace qtlie {

Poly::Poly(std::vector<GaussRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::monomial(std::size_t k, const GaussRat& c) {
  std::vector<GaussRat> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<GaussRat>& roots) {
  Poly p = Poly::constant(GaussRat(1));
  for (const auto& r : roots) p = p * Poly::linear(r);
  return p;
}

std::optional<std::size_t> Poly::degree() const {
  if (is_zero()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::size_t Poly::deg() const {
  if (is_zero()) throw std::invalid_argument("degree of the zero polynomial");
  return coeffs_.size() - 1;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  GaussRat inv = leading().inverse();
  return inv * *this;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<GaussRat> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = coeffs_[k] * GaussRat(static_cast<std::int64_t>(k));
  }
  return Poly(std::move(d));
}

GaussRat Poly::eval(const GaussRat& x) const {
  GaussRat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::scale_variable(const GaussRat& c) const {
  std::vector<GaussRat> v(coeffs_);
  GaussRat power(1);
  for (auto& a : v) {
    a *= power;
    power *= c;
  }
  return Poly(std::move(v));
}

Poly Poly::substitute_power(std::size_t m) const {
  if (m == 0) throw std::invalid_argument("substitute_power: m must be positive");
  if (is_zero()) return *this;
  std::vector<GaussRat> v((coeffs_.size() - 1) * m + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k * m] = coeffs_[k];
  return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<GaussRat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const GaussRat& c, const Poly& p) {
  std::vector<GaussRat> v(p.coeffs_);
  for (auto& a : v) a *= c;
  return Poly(std::move(v));
}

Poly Poly::operator-() const { return GaussRat(-1) * *this; }

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const GaussRat& c = coeffs_[idx];
    if (c.is_zero()) continue;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    GaussRat mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string cs = mag.is_real() ? mag.to_string() : "(" + mag.to_string() + ")";
    if (idx == 0) {
      out += cs;
      continue;
    }
    if (!mag.is_one()) out += cs + "*";
    out += "T";
    if (idx > 1) out += "^" + std::to_string(idx);
  }
  return out;
}

Poly Poly::parse(const std::string& text) {
  ExprContext<Poly> ctx;
  ctx.scalar = [](const GaussRat& c) { return Poly::constant(c); };
  ctx.symbol = [](const std::string& name) -> std::optional<Poly> {
    if (name == "T") return Poly::monomial(1);
    return std::nullopt;
  };
  ctx.invert = [](const Poly& p) -> std::optional<Poly> {
    if (p.degree() != std::optional<std::size_t>(0)) return std::nullopt;
    return Poly::constant(p.leading().inverse());
  };
  return parse_expression(text, ctx);
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<GaussRat> rem(a.coeffs());
  std::size_t db = b.deg();
  if (rem.size() < db + 1) return {Poly(), a};
  std::vector<GaussRat> quot(rem.size() - db);
  GaussRat lead_inv = b.leading().inverse();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    GaussRat factor = rem[k] * lead_inv;
    quot[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= factor * b.coeffs()[j];
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

bool poly_divides(const Poly& d, const Poly& a) { return poly_mod(a, d).is_zero(); }

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = poly_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Bezout poly_bezout(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("poly_bezout: both inputs are zero");
  // Invariant: r0 = s0*f + t0*g, r1 = s1*f + t1*g.
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::constant(GaussRat(1)), s1;
  Poly t0, t1 = Poly::constant(GaussRat(1));
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  GaussRat scale = r0.leading().inverse();
  return Bezout{scale * s0, scale * t0, scale * r0};
}

Poly poly_squarefree_part(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("poly_squarefree_part: zero polynomial");
  return poly_divmod(f, poly_gcd(f, f.derivative())).first.monic();
}

bool poly_is_squarefree(const Poly& f) {
  if (f.is_zero()) return false;
  return poly_gcd(f, f.derivative()).deg() == 0;
}

bool poly_symmetry_check(const Poly& f, int eta, int m) {
  if (eta != 1 && eta != -1) throw std::invalid_argument("poly_symmetry_check: eta must be ±1");
  if (m <= 0) throw std::invalid_argument("poly_symmetry_check: m must be positive");
  int factor = (eta == -1 && m % 2 == 1) ? -1 : 1;
  return f.scale_variable(GaussRat(factor)) == f;
}

std::optional<Poly> poly_inverse_mod(const Poly& x, const Poly& modulus) {
  Bezout b = poly_bezout(x, modulus);
  if (b.d.deg() != 0) return std::nullopt;
  return poly_mod(b.u, modulus);
}

namespace {

// Gaussian-integer view of a Gaussian rational with denominator 1.
struct GInt {
  mpz_class re, im;
};

mpz_class lcm_den(const std::vector<GaussRat>& v) {
  mpz_class l = 1;
  for (const auto& c : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
  }
  return l;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<GaussRat> poly_gaussian_roots(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("poly_gaussian_roots: zero polynomial");
  std::vector<GaussRat> roots;
  Poly p = f.monic();
  while (p.deg() > 0 && p.coeff(0).is_zero()) {
    roots.emplace_back();
    p = poly_divmod(p, Poly::monomial(1)).first;
  }
  if (p.deg() == 0) return roots;

  // Clear denominators, then substitute T = X / D so the polynomial in X is
  // monic over Z[i]; its roots are Gaussian integers dividing the constant term.
  std::size_t d = p.deg();
  GaussRat den(mpq_class(lcm_den(p.coeffs())));
  Poly monic_int = p.scale_variable(den.inverse());
  GaussRat lift(1);
  for (std::size_t k = 0; k < d; ++k) lift *= den;
  monic_int = lift * monic_int;
  const GaussRat& c0 = monic_int.coeff(0);
  mpz_class norm0 = mpq_class(c0.norm()).get_num();
  if (norm0 > mpz_class("1000000000000")) {
    throw std::invalid_argument("poly_gaussian_roots: constant term too large for root search");
  }

  std::vector<GaussRat> candidates;
  for (const auto& dv : divisors(norm0)) {
    // all x + yi with x^2 + y^2 == dv
    for (mpz_class x = 0; x * x <= dv; ++x) {
      mpz_class rest = dv - x * x;
      if (!mpz_perfect_square_p(rest.get_mpz_t())) continue;
      mpz_class y;
      mpz_sqrt(y.get_mpz_t(), rest.get_mpz_t());
      for (int sx : {1, -1}) {
        for (int sy : {1, -1}) {
          if ((x == 0 && sx < 0) || (y == 0 && sy < 0)) continue;
          candidates.emplace_back(mpq_class(sx * x), mpq_class(sy * y));
        }
      }
    }
  }

  Poly rem = monic_int;
  for (const auto& cand : candidates) {
    while (rem.deg() > 0 && rem.eval(cand).is_zero()) {
      roots.push_back(cand / den);
      rem = poly_divmod(rem, Poly::linear(cand)).first;
    }
  }
  return roots;
}

}  // namespace qtlie

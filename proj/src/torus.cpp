#include "qtlie/torus.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qtlie/expr_parser.hpp"

namespace qtlie {

TorusParams::TorusParams(int q, int theta1, int theta2) : q_(q), theta1_(theta1), theta2_(theta2) {
  auto is_sign = [](int s) { return s == 1 || s == -1; };
  if (!is_sign(q) || !is_sign(theta1) || !is_sign(theta2)) {
    throw std::invalid_argument("torus parameters must be ±1");
  }
  // (q,-1,1) is the mirror image of (q,1,-1) under t1 <-> t2 and is excluded.
  if (theta1 == -1 && theta2 == 1) {
    throw std::invalid_argument("torus parameters " + to_string() + " are not in the admissible set");
  }
}

const std::vector<TorusParams>& TorusParams::all() {
  static const std::vector<TorusParams> six{
      TorusParams(-1, 1, 1), TorusParams(-1, 1, -1), TorusParams(-1, -1, -1),
      TorusParams(1, 1, 1),  TorusParams(1, 1, -1),  TorusParams(1, -1, -1)};
  return six;
}

TorusParams TorusParams::parse(const std::string& text) {
  std::stringstream ss(text);
  std::string part;
  std::vector<int> v;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(part, &used));
      while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used]))) ++used;
      if (used != part.size()) throw ParseError("bad torus parameter '" + part + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad torus parameter '" + part + "'");
    }
  }
  if (v.size() != 3) throw ParseError("torus parameters need three values q,theta1,theta2");
  return TorusParams(v[0], v[1], v[2]);
}

std::string TorusParams::to_string() const {
  return "(" + std::to_string(q_) + "," + std::to_string(theta1_) + "," + std::to_string(theta2_) + ")";
}

QTorusElem QTorusElem::monomial(TorusParams params, std::int64_t a, std::int64_t b, const GaussRat& c) {
  QTorusElem x(params);
  x.add_term(a, b, c);
  return x;
}

GaussRat QTorusElem::coeff(std::int64_t a, std::int64_t b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? GaussRat() : it->second;
}

void QTorusElem::add_term(std::int64_t a, std::int64_t b, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QTorusElem& QTorusElem::operator+=(const QTorusElem& o) {
  if (!(params_ == o.params_)) throw std::invalid_argument("torus elements with different params");
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

QTorusElem& QTorusElem::operator-=(const QTorusElem& o) {
  if (!(params_ == o.params_)) throw std::invalid_argument("torus elements with different params");
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

QTorusElem QTorusElem::operator-() const { return GaussRat(-1) * *this; }

QTorusElem operator*(const QTorusElem& x, const QTorusElem& y) { return qt_mul(x, y); }

QTorusElem operator*(const GaussRat& c, const QTorusElem& x) {
  QTorusElem r(x.params_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : x.terms_) r.terms_.emplace(e, v * c);
  return r;
}

namespace {

std::string monomial_string(std::int64_t a, std::int64_t b) {
  std::string s;
  auto piece = [&](const char* var, std::int64_t e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += var;
    if (e != 1) s += "^" + std::to_string(e);
  };
  piece("t1", a);
  piece("t2", b);
  return s;
}

}  // namespace

std::string QTorusElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    bool negative = c.is_real() && sgn(c.re()) < 0;
    GaussRat mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = monomial_string(e.first, e.second);
    std::string cs = mag.is_real() ? mag.to_string() : "(" + mag.to_string() + ")";
    if (mono.empty()) {
      out += cs;
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

QTorusElem QTorusElem::parse(const std::string& text, TorusParams params) {
  ExprContext<QTorusElem> ctx;
  ctx.scalar = [params](const GaussRat& c) { return QTorusElem::scalar(params, c); };
  ctx.symbol = [params](const std::string& name) -> std::optional<QTorusElem> {
    if (name == "t1") return QTorusElem::monomial(params, 1, 0);
    if (name == "t2") return QTorusElem::monomial(params, 0, 1);
    return std::nullopt;
  };
  ctx.invert = [](const QTorusElem& x) { return qt_monomial_inverse(x); };
  return parse_expression(text, ctx);
}

std::ostream& operator<<(std::ostream& os, const QTorusElem& x) { return os << x.to_string(); }

QTorusElem qt_mul(const QTorusElem& x, const QTorusElem& y) {
  if (!(x.params() == y.params())) throw std::invalid_argument("qt_mul: params mismatch");
  const int q = x.params().q();
  QTorusElem r(x.params());
  for (const auto& [ex, cx] : x.terms()) {
    for (const auto& [ey, cy] : y.terms()) {
      // t2^b t1^c = q^{bc} t1^c t2^b
      int sign = sign_power(q, ex.second * ey.first);
      GaussRat c = cx * cy;
      if (sign < 0) c = -c;
      r.add_term(ex.first + ey.first, ex.second + ey.second, c);
    }
  }
  return r;
}

QTorusElem qt_involution(const QTorusElem& x) {
  const auto& p = x.params();
  QTorusElem r(p);
  for (const auto& [e, c] : x.terms()) {
    auto [a, b] = e;
    int sign = sign_power(p.theta1(), a) * sign_power(p.theta2(), b) * sign_power(p.q(), a * b);
    r.add_term(a, b, sign < 0 ? -c : c);
  }
  return r;
}

std::optional<QTorusElem> qt_monomial_inverse(const QTorusElem& x) {
  if (x.terms().size() != 1) return std::nullopt;
  const auto& [e, c] = *x.terms().begin();
  // (c t1^a t2^b)^{-1} = c^{-1} t2^{-b} t1^{-a} = c^{-1} q^{ab} t1^{-a} t2^{-b}
  GaussRat inv = c.inverse();
  if (sign_power(x.params().q(), e.first * e.second) < 0) inv = -inv;
  return QTorusElem::monomial(x.params(), -e.first, -e.second, inv);
}

bool qt_is_central_monomial(const TorusParams& p, std::int64_t a, std::int64_t b) {
  return a % p.m() == 0 && b % p.m() == 0;
}

TorusSplit qt_decompose(const QTorusElem& x) {
  TorusSplit s{QTorusElem(x.params()), QTorusElem(x.params())};
  for (const auto& [e, c] : x.terms()) {
    if (qt_is_central_monomial(x.params(), e.first, e.second)) {
      s.center.add_term(e.first, e.second, c);
    } else {
      s.commutator.add_term(e.first, e.second, c);
    }
  }
  return s;
}

bool qt_center_membership(const QTorusElem& x) { return qt_decompose(x).commutator.is_zero(); }

bool qt_commutator_membership(const QTorusElem& x) { return qt_decompose(x).center.is_zero(); }

QTorusElem qt_commutator(const QTorusElem& x, const QTorusElem& y) { return x * y - y * x; }

}  // namespace qtlie

#pragma once

// Recursive-descent parser shared by every text syntax in the library:
// scalars ("2+1/2*i"), polynomials ("T^2 - 3*T + 1"), torus elements
// ("-1/2*t1^2*t2^-1") and finite-algebra elements ("E12 + tau*gamma").
//
//   expr    := [+|-] term { (+|-) term }
//   term    := power { * power | / power }      (divisor must be a scalar)
//   power   := primary [ ^ int ]                (int may be signed or parenthesized)
//   primary := integer | "i" | identifier | ( expr )
//
// Products are evaluated left to right, so noncommutative rings read the
// way they are written.

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "qtlie/errors.hpp"
#include "qtlie/gauss_rational.hpp"

namespace qtlie {

template <class E>
struct ExprContext {
  std::function<E(const GaussRat&)> scalar;
  std::function<std::optional<E>(const std::string&)> symbol;
  /// Two-sided inverse, used for negative exponents and division.
  std::function<std::optional<E>(const E&)> invert;
};

template <class E>
class ExprParser {
 public:
  ExprParser(std::string text, const ExprContext<E>& ctx) : text_(std::move(text)), ctx_(ctx) {}

  E parse() {
    E value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  E expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    E value = term();
    if (negate) value = -value;
    for (;;) {
      if (accept('+')) {
        value = value + term();
      } else if (accept('-')) {
        value = value - term();
      } else {
        return value;
      }
    }
  }

  E term() {
    E value = power();
    for (;;) {
      if (accept('*')) {
        value = value * power();
      } else if (accept('/')) {
        E divisor = power();
        auto inv = ctx_.invert ? ctx_.invert(divisor) : std::nullopt;
        if (!inv) fail("divisor is not invertible");
        value = value * *inv;
      } else {
        return value;
      }
    }
  }

  long long signed_int() {
    bool paren = accept('(');
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long long v = std::stoll(text_.substr(start, pos_ - start));
    if (paren && !accept(')')) fail("expected ')'");
    return negative ? -v : v;
  }

  E power() {
    E base = primary();
    if (!accept('^')) return base;
    long long e = signed_int();
    if (e < 0) {
      auto inv = ctx_.invert ? ctx_.invert(base) : std::nullopt;
      if (!inv) fail("negative power of a non-invertible element");
      base = *inv;
      e = -e;
    }
    E result = ctx_.scalar(GaussRat(1));
    for (long long k = 0; k < e; ++k) result = result * base;
    return result;
  }

  E primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      E value = expr();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpq_class q(mpz_class(text_.substr(start, pos_ - start)));
      return ctx_.scalar(GaussRat(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name = text_.substr(start, pos_ - start);
      if (name == "i") return ctx_.scalar(GaussRat::i());
      auto value = ctx_.symbol ? ctx_.symbol(name) : std::nullopt;
      if (!value) fail("unknown symbol '" + name + "'");
      return *value;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string text_;
  const ExprContext<E>& ctx_;
  std::size_t pos_ = 0;
};

template <class E>
E parse_expression(const std::string& text, const ExprContext<E>& ctx) {
  return ExprParser<E>(text, ctx).parse();
}

inline GaussRat parse_scalar(const std::string& text) {
  ExprContext<GaussRat> ctx;
  ctx.scalar = [](const GaussRat& c) { return c; };
  ctx.invert = [](const GaussRat& c) -> std::optional<GaussRat> {
    if (c.is_zero()) return std::nullopt;
    return c.inverse();
  };
  return parse_expression(text, ctx);
}

}  // namespace qtlie

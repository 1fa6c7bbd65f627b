#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "lexgb/polynomial.hpp"

namespace lexgb {

namespace detail {

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*      ('/' only by nonzero constants)
//   factor := atom ['^' digits]
//   atom   := digits | 'x' | 'y' | 'z' | '(' expr ')'
template <class Field>
class PolynomialParser {
 public:
  using K = typename Field::Element;
  using Poly = Polynomial<K>;

  PolynomialParser(std::string_view text, const Field& field) : text_(text), field_(field) {}

  Poly run() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in '" + std::string(text_) + "'", pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Poly d = factor();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division by a non-constant or zero");
        }
        acc = acc * d.lc().inverse();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = atom();
    if (accept('^')) {
      skip_space();
      std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      base = base.pow(static_cast<std::uint32_t>(std::stoul(digits)), field_.one());
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Poly::constant(field_.parse(read_digits()));
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      Monomial m{c == 'x' ? 1u : 0u, c == 'y' ? 1u : 0u, c == 'z' ? 1u : 0u};
      return Poly::term(field_.one(), m);
    }
    if (accept('(')) {
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const Field& field_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses text such as "x^2*y*z^2 - 3*x + 1" into canonical form.
template <class Field>
Polynomial<typename Field::Element> parse_polynomial(std::string_view text, const Field& field) {
  return detail::PolynomialParser<Field>(text, field).run();
}

}  // namespace lexgb

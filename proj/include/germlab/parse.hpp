#pragma once

// Recursive-descent parser for polynomial expressions.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | variable ('^' uint)? | '(' expr ')'
//   rational := uint ('/' uint)?
//
// No implicit multiplication: "2x" is an error, "2*x" is not. Variable names
// must belong to the ring. Errors carry 1-based line and column.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/polynomial.hpp"

namespace germlab {
namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    Polynomial p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  Polynomial expr() {
    bool negate = false;
    if (peek() == '-') {
      advance();
      skip_ws();
      negate = true;
    }
    Polynomial p = term();
    if (negate) p = -p;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      advance();
      skip_ws();
      Polynomial t = term();
      if (c == '+')
        p += t;
      else
        p -= t;
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      advance();
      skip_ws();
      p *= factor();
    }
    return p;
  }

  Polynomial factor() {
    char c = peek();
    if (c == '(') {
      advance();
      skip_ws();
      Polynomial p = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      advance();
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_factor();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable_factor();
    fail(pos_ >= text_.size() ? "unexpected end of input" : "unexpected character");
  }

  Polynomial rational_factor() {
    Integer num = unsigned_integer();
    skip_ws();
    if (peek() == '/') {
      advance();
      skip_ws();
      std::size_t dline = line_, dcol = col_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected denominator", dline, dcol);
      Integer den = unsigned_integer();
      if (den == 0) throw ParseError("zero denominator", dline, dcol);
      Rational r(num, den);
      r.canonicalize();
      return Polynomial(ring_, r);
    }
    return Polynomial(ring_, Rational(num));
  }

  Polynomial variable_factor() {
    std::size_t vline = line_, vcol = col_;
    std::string name;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') break;
      name.push_back(c);
      advance();
    }
    auto idx = ring_.index_of(name);
    if (!idx) throw UnknownVariableError(name, vline, vcol);
    Polynomial v = Polynomial::variable(ring_, *idx);
    skip_ws();
    if (peek() != '^') return v;
    advance();
    skip_ws();
    std::size_t eline = line_, ecol = col_;
    if (peek() == '-') throw NegativeExponentError(eline, ecol);
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected exponent", eline, ecol);
    Integer e = unsigned_integer();
    if (!e.fits_uint_p()) throw ParseError("exponent too large", eline, ecol);
    return Polynomial::term(ring_, Monomial::variable(ring_.dimension(), *idx, e.get_ui()),
                            Rational(1));
  }

  Integer unsigned_integer() {
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits.push_back(text_[pos_]);
      advance();
    }
    return Integer(digits, 10);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void advance() {
    if (pos_ >= text_.size()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, col_);
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  return detail::PolyParser(text, ring).parse();
}

// Components separated by ';', each parsed in the given ring.
inline std::vector<Polynomial> parse_components(std::string_view text, const Ring& ring) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (true) {
    std::size_t semi = text.find(';', start);
    std::string_view piece =
        semi == std::string_view::npos ? text.substr(start) : text.substr(start, semi - start);
    out.push_back(parse_polynomial(piece, ring));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace germlab

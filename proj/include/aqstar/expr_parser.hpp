#pragma once

// Small recursive-descent parser for ring expressions such as
// "3*x^2-1/2*x+4" or "x^2*(y/(y+1))". The ring is supplied through an Ops
// object:
//
//   T constant(const Rational&) const;
//   T variable(std::string_view name) const;   // throws ParseError if unknown
//   T add(const T&, const T&) const;
//   T sub(const T&, const T&) const;
//   T mul(const T&, const T&) const;
//   T neg(const T&) const;
//   T divide(const T&, const T&) const;        // throws when not allowed
//
// Grammar: expr := term (('+'|'-') term)*, term := unary (('*'|'/') unary)*,
// unary := ('+'|'-') unary | power, power := primary ('^' digits)?,
// primary := integer | identifier | '(' expr ')'.

#include <cctype>
#include <string>
#include <string_view>

#include "aqstar/errors.hpp"
#include "aqstar/linalg.hpp"

namespace aqstar {

template <class Ops>
class ExpressionParser {
 public:
  using Value = decltype(std::declval<const Ops&>().constant(Rational{}));

  ExpressionParser(std::string_view text, const Ops& ops) : text_(text), ops_(ops) {}

  Value parse() {
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
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

  Value expr() {
    Value v = term();
    while (true) {
      if (accept('+'))
        v = ops_.add(v, term());
      else if (accept('-'))
        v = ops_.sub(v, term());
      else
        return v;
    }
  }

  Value term() {
    Value v = unary();
    while (true) {
      if (accept('*'))
        v = ops_.mul(v, unary());
      else if (accept('/'))
        v = ops_.divide(v, unary());
      else
        return v;
    }
  }

  Value unary() {
    if (accept('-')) return ops_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    if (pos_ - start > 4) fail("exponent too large");
    const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    Value result = ops_.constant(Rational(1));
    for (unsigned long i = 0; i < e; ++i) result = ops_.mul(result, base);
    return result;
  }

  Value primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ops_.constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ops_.variable(text_.substr(start, pos_ - start));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const Ops& ops_;
  std::size_t pos_ = 0;
};

template <class Ops>
auto parse_expression(std::string_view text, const Ops& ops) {
  return ExpressionParser<Ops>(text, ops).parse();
}

}  // namespace aqstar

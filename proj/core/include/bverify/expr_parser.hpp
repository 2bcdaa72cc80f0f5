#pragma once

#include "bverify/errors.hpp"

#include <gmpxx.h>

#include <cctype>
#include <concepts>
#include <string>
#include <string_view>

namespace bverify {

// Arithmetic the parser needs from a target ring.
template <class R>
concept ExprRing = requires(const R &ring, typename R::value_type v, const mpz_class &n,
                            std::string_view name, long k) {
  { ring.integer(n) } -> std::same_as<typename R::value_type>;
  { ring.symbol(name) } -> std::same_as<typename R::value_type>;
  { ring.add(v, v) } -> std::same_as<typename R::value_type>;
  { ring.sub(v, v) } -> std::same_as<typename R::value_type>;
  { ring.mul(v, v) } -> std::same_as<typename R::value_type>;
  { ring.div(v, v) } -> std::same_as<typename R::value_type>;
  { ring.neg(v) } -> std::same_as<typename R::value_type>;
  { ring.pow(v, k) } -> std::same_as<typename R::value_type>;
};

/// Recursive-descent parser for
///   expr  := term (('+'|'-') term)*
///   term  := unary (('*'|'/') unary)*
///   unary := '-' unary | '+' unary | power
///   power := atom ('^' exponent)?
///   atom  := integer | identifier | '(' expr ')'
/// where exponent is a signed integer, optionally parenthesized.
template <ExprRing Ring> class ExprParser {
public:
  using Value = typename Ring::value_type;

  ExprParser(const Ring &ring, std::string_view text) : ring_(ring), text_(text) {}

  Value parse() {
    Value v = expr();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

private:
  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+'))
        v = ring_.add(v, term());
      else if (accept('-'))
        v = ring_.sub(v, term());
      else
        return v;
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*'))
        v = ring_.mul(v, unary());
      else if (accept('/'))
        v = ring_.div(v, unary());
      else
        return v;
    }
  }

  Value unary() {
    if (accept('-'))
      return ring_.neg(unary());
    if (accept('+'))
      return unary();
    return power();
  }

  Value power() {
    Value base = atom();
    if (!accept('^'))
      return base;
    bool paren = accept('(');
    bool negative = accept('-');
    if (!negative)
      accept('+');
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected integer exponent");
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 9)
      fail("exponent too large");
    long k = std::stol(digits);
    if (paren && !accept(')'))
      fail("expected ')'");
    return ring_.pow(base, negative ? -k : k);
  }

  Value atom() {
    skip_space();
    if (pos_ >= text_.size())
      fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')'))
        fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      return ring_.integer(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return ring_.symbol(text_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in \"" +
                     std::string(text_) + "\"");
  }

  const Ring &ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace bverify

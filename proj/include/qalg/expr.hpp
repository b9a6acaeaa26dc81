#pragma once

// Expression syntax shared by every ring:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' '-'? INT)?
//   atom  := IDENT | INT | '(' expr ')'
// `*` is mandatory between factors; products keep operand order.

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "qalg/errors.hpp"

namespace qalg {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Sym, Int, Add, Sub, Mul, Div, Neg, Pow };

  Kind kind;
  std::string name;  // Sym
  mpz_class value;   // Int
  ExprPtr lhs;       // Add Sub Mul Div Neg Pow
  ExprPtr rhs;       // Add Sub Mul Div
  int exponent = 0;  // Pow
  std::size_t offset = 0;

  static ExprPtr sym(std::string n, std::size_t at) {
    return std::make_shared<const Expr>(Expr{Kind::Sym, std::move(n), 0, nullptr, nullptr, 0, at});
  }
  static ExprPtr integer(mpz_class v, std::size_t at) {
    return std::make_shared<const Expr>(Expr{Kind::Int, {}, std::move(v), nullptr, nullptr, 0, at});
  }
  static ExprPtr binary(Kind k, ExprPtr a, ExprPtr b, std::size_t at) {
    return std::make_shared<const Expr>(Expr{k, {}, 0, std::move(a), std::move(b), 0, at});
  }
  static ExprPtr neg(ExprPtr a, std::size_t at) {
    return std::make_shared<const Expr>(Expr{Kind::Neg, {}, 0, std::move(a), nullptr, 0, at});
  }
  static ExprPtr pow(ExprPtr a, int e, std::size_t at) {
    return std::make_shared<const Expr>(Expr{Kind::Pow, {}, 0, std::move(a), nullptr, e, at});
  }
};

/// Structural form, e.g. Sub(Mul(E,F),Mul(F,E)).
inline std::string to_string(const Expr& e) {
  auto bin = [&](const char* n) { return std::string(n) + "(" + to_string(*e.lhs) + "," + to_string(*e.rhs) + ")"; };
  switch (e.kind) {
    case Expr::Kind::Sym: return e.name;
    case Expr::Kind::Int: return e.value.get_str();
    case Expr::Kind::Add: return bin("Add");
    case Expr::Kind::Sub: return bin("Sub");
    case Expr::Kind::Mul: return bin("Mul");
    case Expr::Kind::Div: return bin("Div");
    case Expr::Kind::Neg: return "Neg(" + to_string(*e.lhs) + ")";
    case Expr::Kind::Pow: return "Pow(" + to_string(*e.lhs) + "," + std::to_string(e.exponent) + ")";
  }
  return {};
}

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+'))
        e = Expr::binary(Expr::Kind::Add, e, term(), at);
      else if (accept('-'))
        e = Expr::binary(Expr::Kind::Sub, e, term(), at);
      else
        return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*'))
        e = Expr::binary(Expr::Kind::Mul, e, unary(), at);
      else if (accept('/'))
        e = Expr::binary(Expr::Kind::Div, e, unary(), at);
      else
        return e;
    }
  }

  ExprPtr unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) return Expr::neg(unary(), at);
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    skip_space();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    const bool negative = accept('-');
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    const std::string digits(src_.substr(start, pos_ - start));
    if (digits.size() > 9) {
      pos_ = start;
      fail("exponent out of range");
    }
    const int e = std::stoi(digits);
    return Expr::pow(base, negative ? -e : e, at);
  }

  ExprPtr atom() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return Expr::integer(mpz_class(std::string(src_.substr(at, pos_ - at))), at);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      return Expr::sym(std::string(src_.substr(at, pos_ - at)), at);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace detail

/// Parses `src`; throws SyntaxError carrying the byte offset of the problem.
inline ExprPtr parse_expr(std::string_view src) { return detail::Parser(src).parse(); }

}  // namespace qalg

#include "polyharm/expr_parser.hpp"

#include <cctype>
#include <string>

namespace polyharm {
namespace {

class Parser {
 public:
  Parser(std::string_view text, bool univariate) : text_(text), univariate_(univariate) {}

  Poly2 parse() {
    Poly2 p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
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

  Poly2 expr() {
    Poly2 acc = term();
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

  Poly2 term() {
    Poly2 acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        Poly2 d = unary();
        if (d.degree() > 0) fail("division by a non-constant");
        if (d.is_zero()) fail("division by zero");
        Rational inv = 1 / d.coeff(0, 0);
        acc *= inv;
      } else {
        return acc;
      }
    }
  }

  Poly2 unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly2 power() {
    Poly2 base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer");
      const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 1000) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly2 primary() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly2 inner = expr();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly2(Rational(BigInt(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (univariate_) {
        if (name == "t" || name == "x") return Poly2::x();
      } else {
        if (name == "i" || name == "x") return Poly2::x();
        if (name == "j" || name == "y") return Poly2::y();
      }
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  bool univariate_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly2 parse_poly2(std::string_view text) { return Parser(text, false).parse(); }

Poly1 parse_poly1(std::string_view text) {
  Poly2 p = Parser(text, true).parse();
  std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree_x(), 0)) + 1);
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e.a)] = v;
  return Poly1(std::move(c));
}

}  // namespace polyharm

#include <cctype>

#include "bcalc/errors.hpp"
#include "bcalc/poly/polynomial.hpp"

namespace bcalc {

namespace {

// Recursive descent over: expr := term (('+'|'-') term)*
//   term := unary ('*' unary)* ; unary := ('+'|'-') unary | power
//   power := atom ('^' integer)? ; atom := number ('/' number)? | name | '(' expr ')'
class Parser {
 public:
  Parser(const RingPtr& ring, const std::string& text) : ring_(ring), s_(text) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) {
    fail(ErrorCode::parse, "column " + std::to_string(pos_ + 1) + ": " + msg + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (eat('*')) acc *= unary();
    return acc;
  }

  Polynomial unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      mpz_class e = integer();
      if (e > 4096) error("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) error("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (eat('/')) {
        den = integer();
        if (den == 0) error("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        error("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  return Parser(ring, text).run();
}

}  // namespace bcalc

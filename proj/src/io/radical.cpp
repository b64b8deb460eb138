#include "reptile/io/radical.hpp"

#include <cctype>
#include <string>

#include "reptile/algebra/certified.hpp"
#include "reptile/io/json.hpp"

namespace reptile {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  AlgebraicReal parse() {
    AlgebraicReal value = expression();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw InputError(message + " in \"" + std::string(text_) + "\"", 1, static_cast<int>(pos_) + 1);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  AlgebraicReal expression() {
    AlgebraicReal value = term();
    for (;;) {
      if (accept('+')) value = value + term();
      else if (accept('-')) value = value - term();
      else return value;
    }
  }

  AlgebraicReal term() {
    AlgebraicReal value = unary();
    for (;;) {
      if (accept('*')) {
        value = value * unary();
      } else if (accept('/')) {
        const AlgebraicReal divisor = unary();
        if (divisor.is_zero()) fail("division by zero");
        value = value / divisor;
      } else {
        return value;
      }
    }
  }

  AlgebraicReal unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  AlgebraicReal power() {
    AlgebraicReal base = primary();
    if (!accept('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    AlgebraicReal out(1);
    for (int i = 0; i < e; ++i) out = out * base;
    return out;
  }

  AlgebraicReal primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      AlgebraicReal v = expression();
      expect(')');
      return v;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "phi") return AlgebraicReal::from_minpoly(IntPolynomial{-1, -1, 1}, {Rational(1), Rational(2)});
      if (name == "sqrt") {
        expect('(');
        AlgebraicReal arg = expression();
        expect(')');
        if (arg.sign() < 0) throw DomainError("sqrt of a negative value");
        if (auto r = arg.rational()) return AlgebraicReal::sqrt(*r);
        return sqrt(arg);
      }
      pos_ = start;
      fail("unknown name '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  AlgebraicReal number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' || text_[pos_] == 'e' ||
            text_[pos_] == 'E' ||
            ((text_[pos_] == '-' || text_[pos_] == '+') && pos_ > start &&
             (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E'))))
      ++pos_;
    try {
      return AlgebraicReal(parse_tolerance(text_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      pos_ = start;
      fail("malformed number");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraicReal parse_radical(std::string_view text) { return Parser(text).parse(); }

}  // namespace reptile

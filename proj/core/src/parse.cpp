#include <cctype>
#include <string>

#include "flagchow/polynomial.hpp"

namespace flagchow {

namespace {

// Recursive-descent parser for the expression grammar.  ^ binds tightest,
// then *, then + and -; whitespace is insignificant.
class Parser {
 public:
  Parser(const std::string& text, int variable_count)
      : text_(text), vars_(variable_count) {}

  Polynomial run() {
    Polynomial p = parse_sum();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return p;
  }

 private:
  Polynomial parse_sum() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = take() == '-';
    }
    Polynomial result = parse_product();
    if (negate) result = -result;
    while (true) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      take();
      Polynomial rhs = parse_product();
      result = c == '+' ? result + rhs : result - rhs;
    }
    return result;
  }

  Polynomial parse_product() {
    Polynomial result = parse_power();
    while (true) {
      skip_space();
      if (peek() != '*') break;
      take();
      result = result * parse_power();
    }
    return result;
  }

  Polynomial parse_power() {
    Polynomial base = parse_atom();
    skip_space();
    if (peek() == '^') {
      take();
      skip_space();
      std::size_t at = pos_;
      long exponent = parse_unsigned();
      if (exponent > 64) throw ParseError("exponent too large", at);
      return pow(base, static_cast<int>(exponent));
    }
    return base;
  }

  Polynomial parse_atom() {
    skip_space();
    std::size_t at = pos_;
    char c = peek();
    if (c == '(') {
      take();
      Polynomial inner = parse_sum();
      skip_space();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      take();
      return inner;
    }
    if (c == 'T') {
      take();
      return Polynomial::t(vars_);
    }
    if (c == 'X') {
      take();
      if (!std::isdigit(peek())) throw ParseError("expected variable index", pos_);
      long index = parse_unsigned();
      if (index < 1 || index > vars_) {
        throw ParseError("variable X" + std::to_string(index) +
                             " exceeds m=" + std::to_string(vars_),
                         at);
      }
      return Polynomial::x(static_cast<int>(index), vars_);
    }
    if (std::isdigit(c)) {
      Integer numerator_value(parse_digits());
      skip_space();
      if (peek() == '/') {
        take();
        skip_space();
        if (!std::isdigit(peek())) throw ParseError("expected denominator", pos_);
        Integer denominator_value(parse_digits());
        if (denominator_value == 0) throw ParseError("zero denominator", at);
        return Polynomial::constant(Rational(numerator_value, denominator_value),
                                    vars_);
      }
      return Polynomial::constant(Rational(numerator_value), vars_);
    }
    throw ParseError("unexpected character", pos_);
  }

  std::string parse_digits() {
    std::string digits;
    while (std::isdigit(peek())) digits += take();
    return digits;
  }

  long parse_unsigned() {
    if (!std::isdigit(peek())) throw ParseError("expected integer", pos_);
    std::string digits = parse_digits();
    if (digits.size() > 9) throw ParseError("integer too large", pos_);
    return std::stol(digits);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  const std::string& text_;
  int vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int variable_count) {
  return Parser(text, variable_count).run();
}

}  // namespace flagchow

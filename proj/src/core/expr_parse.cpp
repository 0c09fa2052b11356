#include "core/expr_parse.hpp"

#include <cctype>

namespace qba {

namespace {

class Parser {
 public:
  Parser(const std::string& text, int n, const ParamSpec& params,
         const std::optional<Shape>& shape)
      : text_(text), n_(n), rules_(n, params, shape), shape_(shape) {}

  AlgebraElement run() {
    AlgebraElement value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::ParseError,
                message + " at position " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      ++digits;
    }
    if (digits == 0) fail("expected an integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  Scalar rational() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    std::string literal = text_.substr(start, pos_ - start);
    if (eat('/')) {
      skip_space();
      const std::size_t den_start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (pos_ == den_start) fail("expected a denominator");
      literal += "/" + text_.substr(den_start, pos_ - den_start);
    }
    return scalar_from_string(literal);
  }

  AlgebraElement generator() {
    ++pos_;  // past 'c'
    if (!eat('[')) fail("expected '[' after 'c'");
    const long i = integer();
    if (!eat(',')) fail("expected ',' in generator");
    const long j = integer();
    if (!eat(']')) fail("expected ']' in generator");
    if (i < 1 || i > n_ || j < 1 || j > n_) {
      throw Error(ErrorCode::IndexViolation,
                  "generator c[" + std::to_string(i) + "," + std::to_string(j) +
                      "] out of range for n=" + std::to_string(n_));
    }
    const Word word{static_cast<std::int16_t>(
        gen_code(n_, static_cast<int>(i), static_cast<int>(j)))};
    return rules_.reduce({{Scalar(1), word}});
  }

  AlgebraElement atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      AlgebraElement value = expr();
      if (!eat(')')) fail("expected ')'");
      return value;
    }
    if (c == '-') {
      ++pos_;
      return factor().scaled(-1);
    }
    if (c == 'c') return generator();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return AlgebraElement::monomial(n_, Exponent(n_), rational(), shape_);
    }
    fail("expected a number, generator, or '('");
  }

  AlgebraElement factor() {
    AlgebraElement base = atom();
    if (eat('^')) {
      const long exponent = integer();
      if (exponent < 0) fail("negative powers are not defined here");
      AlgebraElement value =
          AlgebraElement::monomial(n_, Exponent(n_), 1, shape_);
      for (long k = 0; k < exponent; ++k) value = rules_.multiply(value, base);
      return value;
    }
    return base;
  }

  AlgebraElement term() {
    AlgebraElement value = factor();
    while (true) {
      skip_space();
      if (peek() == '*') {
        eat('*');
        value = rules_.multiply(value, factor());
      } else {
        return value;
      }
    }
  }

  AlgebraElement expr() {
    AlgebraElement value = term();
    while (true) {
      if (peek() == '+') {
        eat('+');
        value = value + term();
      } else if (peek() == '-') {
        eat('-');
        value = value - term();
      } else {
        return value;
      }
    }
  }

  const std::string& text_;
  int n_;
  RuleSet rules_;
  std::optional<Shape> shape_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse_expression(const std::string& text, int n,
                                const ParamSpec& params,
                                const std::optional<Shape>& shape) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  return Parser(text, n, params, shape).run();
}

}  // namespace qba

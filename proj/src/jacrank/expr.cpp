#include "jacrank/expr.hpp"

#include <cctype>

#include "jacrank/errors.hpp"

namespace jacrank {

namespace {

constexpr unsigned kMaxExponent = 10'000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  IntPoly run() {
    IntPoly result = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected trailing input");
    return result;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void error(const std::string& what) const {
    fail(errc::parse_error, "syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Returns the next operator character with the Unicode minus (U+2212,
  // bytes e2 88 92) folded to '-'; 0 at end of input.
  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) return 0;
    unsigned char c = static_cast<unsigned char>(text_[pos_]);
    if (c == 0xe2 && pos_ + 2 < text_.size() &&
        static_cast<unsigned char>(text_[pos_ + 1]) == 0x88 &&
        static_cast<unsigned char>(text_[pos_ + 2]) == 0x92)
      return '-';
    return static_cast<char>(c);
  }

  void consume() {
    if (peek() == '-' && static_cast<unsigned char>(text_[pos_]) == 0xe2)
      pos_ += 3;
    else
      ++pos_;
  }

  IntPoly parse_expr() {
    IntPoly acc;
    char lead = peek();
    bool negate = false;
    if (lead == '+' || lead == '-') {
      consume();
      negate = lead == '-';
    }
    acc = parse_term();
    if (negate) acc = poly_neg(acc);
    while (true) {
      char op = peek();
      if (op != '+' && op != '-') break;
      consume();
      IntPoly rhs = parse_term();
      acc = op == '+' ? poly_add(acc, rhs) : poly_sub(acc, rhs);
    }
    return acc;
  }

  IntPoly parse_term() {
    IntPoly acc = parse_factor();
    while (peek() == '*') {
      consume();
      acc = poly_mul(acc, parse_factor());
    }
    return acc;
  }

  IntPoly parse_factor() {
    IntPoly base = parse_base();
    if (peek() != '^') return base;
    consume();
    unsigned long exponent = parse_exponent();
    IntPoly result{1};
    while (exponent != 0) {
      if (exponent & 1) result = poly_mul(result, base);
      exponent >>= 1;
      if (exponent != 0) base = poly_mul(base, base);
    }
    return result;
  }

  IntPoly parse_base() {
    char c = peek();
    if (c == 'x') {
      consume();
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
        error("unknown identifier");
      return IntPoly{0, 1};
    }
    if (c == '(') {
      consume();
      IntPoly inner = parse_expr();
      if (peek() != ')') error("expected ')'");
      consume();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return IntPoly{parse_integer()};
    if (std::isalpha(static_cast<unsigned char>(c))) error("unknown identifier");
    if (c == 0) error("unexpected end of input");
    error(std::string("unexpected character '") + c + "'");
  }

  mpz_class parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) error("expected an integer");
    if (pos_ < text_.size()) {
      char next = text_[pos_];
      if (next == '.') error("non-integer literal");
      if (std::isalpha(static_cast<unsigned char>(next)) && next != 'x') error("unknown identifier");
    }
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  unsigned long parse_exponent() {
    skip_ws();
    std::size_t at = pos_;
    mpz_class value = parse_integer();
    if (value > kMaxExponent) {
      pos_ = at;
      error("exponent too large");
    }
    return mpz_get_ui(value.get_mpz_t());
  }
};

}  // namespace

IntPoly parse_polynomial(std::string_view text) {
  Parser parser(text);
  IntPoly result = parser.run();
  trim(result);
  return result;
}

std::string render_polynomial(const IntPoly& f) {
  int d = degree(f);
  if (d < 0) return "0";
  std::string out;
  for (int k = d; k >= 0; --k) {
    const mpz_class& c = f[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    if (a != 1 || k == 0) out += a.get_str();
    if (k > 0) {
      if (a != 1) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace jacrank

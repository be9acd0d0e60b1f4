#include "exactalg/parse.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "core/error.hpp"

namespace rzlab {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Parses an optionally signed run of digits starting at `pos`.
BigInteger parse_integer(std::string_view s, std::size_t& pos, std::size_t offset) {
  std::string digits;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') digits += '-';
    ++pos;
  }
  const std::size_t start = pos;
  while (pos < s.size() && is_digit(s[pos])) digits += s[pos++];
  if (pos == start) throw ParseError("expected digits", offset + pos);
  return BigInteger(digits, 10);
}

void skip_spaces(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && is_space(s[pos])) ++pos;
}

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::size_t offset) : s_(text), offset_(offset) {}

  ExactRatFun parse() {
    ExactRatFun f = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset_ + pos_); }

  void skip() { skip_spaces(s_, pos_); }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExactRatFun sum() {
    ExactRatFun acc = product();
    while (true) {
      if (accept('+')) acc = acc + product();
      else if (accept('-')) acc = acc - product();
      else return acc;
    }
  }

  ExactRatFun product() {
    ExactRatFun acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        ExactRatFun d = unary();
        if (d.is_zero()) throw ParseError("division by zero", offset_ + at);
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  ExactRatFun unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  ExactRatFun power() {
    ExactRatFun base = atom();
    if (!accept('^')) return base;
    skip();
    const std::size_t at = pos_;
    const bool parenthesized = accept('(');
    skip();
    BigInteger e = parse_integer(s_, pos_, offset_);
    if (parenthesized && !accept(')')) fail("expected ')'");
    return raise(base, e, at);
  }

  ExactRatFun raise(const ExactRatFun& base, const BigInteger& e, std::size_t at) {
    if (abs(e) > 4096) throw ParseError("exponent too large", offset_ + at);
    const int k = static_cast<int>(e.get_si());
    if (k < 0 && base.is_zero()) throw ParseError("negative power of zero", offset_ + at);
    return base.pow(k);
  }

  ExactRatFun atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExactRatFun inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'z' || c == 't') {
      ++pos_;
      return ExactRatFun::identity();
    }
    if (is_digit(c)) {
      BigInteger v = parse_integer(s_, pos_, offset_);
      return ExactRatFun::constant(BigRational(v));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

BigRational parse_rational(std::string_view text, std::size_t offset) {
  std::size_t pos = 0;
  skip_spaces(text, pos);
  BigInteger num = parse_integer(text, pos, offset);
  BigInteger den = 1;
  skip_spaces(text, pos);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    skip_spaces(text, pos);
    const std::size_t at = pos;
    den = parse_integer(text, pos, offset);
    if (sgn(den) == 0) throw ParseError("zero denominator", offset + at);
  }
  skip_spaces(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters in rational", offset + pos);
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

ExactPoly parse_coefficients(std::string_view text, std::size_t offset) {
  std::vector<BigRational> coeffs;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    coeffs.push_back(parse_rational(field, offset + start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ExactPoly(std::move(coeffs));
}

ExactRatFun parse_ratfun_coefficients(std::string_view text, std::size_t offset) {
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos) return ExactRatFun(parse_coefficients(text, offset));
  if (text.find(';', semi + 1) != std::string_view::npos)
    throw ParseError("more than one ';'", offset + text.find(';', semi + 1));
  ExactPoly num = parse_coefficients(text.substr(0, semi), offset);
  ExactPoly den = parse_coefficients(text.substr(semi + 1), offset + semi + 1);
  if (den.is_zero()) throw ParseError("zero denominator", offset + semi + 1);
  return ExactRatFun::normalize(std::move(num), std::move(den));
}

ExactRatFun parse_expression(std::string_view text, std::size_t offset) {
  return ExpressionParser(text, offset).parse();
}

ExactRatFun parse_function(std::string_view text) {
  if (text.find_first_of(",;") != std::string_view::npos) return parse_ratfun_coefficients(text);
  return parse_expression(text);
}

}  // namespace rzlab

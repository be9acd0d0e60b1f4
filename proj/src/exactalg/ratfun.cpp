#include "exactalg/ratfun.hpp"

#include <algorithm>
#include <utility>

#include "core/error.hpp"

namespace rzlab {

ExactRatFun::ExactRatFun() : num_(), den_(ExactPoly::constant(1)) {}

ExactRatFun::ExactRatFun(ExactPoly poly)
    : num_(std::move(poly)), den_(ExactPoly::constant(1)) {}

ExactRatFun ExactRatFun::normalize(ExactPoly num, ExactPoly den) {
  if (den.is_zero()) throw DomainError("zero denominator");
  if (num.is_zero()) return ExactRatFun();
  if (!den.is_constant()) {
    ExactPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
  }
  const BigRational lead_inv = 1 / den.leading();
  num *= lead_inv;
  den *= lead_inv;
  return ExactRatFun(std::move(num), std::move(den), true);
}

ExactRatFun ExactRatFun::constant(const BigRational& c) {
  return ExactRatFun(ExactPoly::constant(c));
}

ExactRatFun ExactRatFun::identity() { return ExactRatFun(ExactPoly::identity()); }

int ExactRatFun::degree() const {
  if (num_.is_zero()) return 0;
  return std::max(num_.deg(), den_.deg());
}

BigRational ExactRatFun::constant_value() const {
  if (!is_constant()) throw DomainError("function is not constant");
  return num_.coeff(0);
}

ExactRatFun ExactRatFun::derivative() const {
  if (den_.is_constant()) return ExactRatFun(num_.derivative(), den_, true);
  return normalize(num_.derivative() * den_ - num_ * den_.derivative(),
                   den_ * den_);
}

ExactRatFun ExactRatFun::pow(int k) const {
  if (k < 0) return reciprocal().pow(-k);
  const auto uk = static_cast<unsigned>(k);
  // Powers of coprime polynomials stay coprime; only the leading
  // coefficient of den^k needs fixing, and den is monic.
  return ExactRatFun(num_.pow(uk), den_.pow(uk), true);
}

ExactRatFun ExactRatFun::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of the zero function");
  return normalize(den_, num_);
}

ExactRatFun ExactRatFun::compose_linear(const BigRational& alpha,
                                        const BigRational& beta) const {
  if (sgn(alpha) == 0) throw DomainError("linear substitution with alpha = 0");
  return normalize(num_.compose_linear(alpha, beta),
                   den_.compose_linear(alpha, beta));
}

ExactRatFun ExactRatFun::compose_reciprocal() const {
  if (is_zero()) return {};
  const int n = std::max(num_.deg(), den_.deg());
  // num(1/z)/den(1/z) = (z^n num(1/z)) / (z^n den(1/z)).
  return normalize(num_.reversed(n), den_.reversed(n));
}

BigRational ExactRatFun::operator()(const BigRational& x) const {
  BigRational d = den_(x);
  if (sgn(d) == 0) throw DomainError("evaluation at a pole");
  return num_(x) / d;
}

ExactRatFun ExactRatFun::operator-() const { return ExactRatFun(-num_, den_, true); }

ExactRatFun operator+(const ExactRatFun& a, const ExactRatFun& b) {
  if (a.den_ == b.den_) return ExactRatFun::normalize(a.num_ + b.num_, a.den_);
  return ExactRatFun::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ExactRatFun operator-(const ExactRatFun& a, const ExactRatFun& b) { return a + (-b); }

ExactRatFun operator*(const ExactRatFun& a, const ExactRatFun& b) {
  return ExactRatFun::normalize(a.num_ * b.num_, a.den_ * b.den_);
}

ExactRatFun operator/(const ExactRatFun& a, const ExactRatFun& b) {
  if (b.is_zero()) throw DomainError("division by the zero function");
  return ExactRatFun::normalize(a.num_ * b.den_, a.den_ * b.num_);
}

namespace {
// Single terms need no parentheses, except a denominator with a coefficient
// ("1/3*z" would read as z/3).
std::string operand(const ExactPoly& p, const std::string& var, bool denominator) {
  int terms = 0;
  for (const auto& c : p.coefficients()) terms += sgn(c) != 0;
  const std::string text = to_expression(p, var);
  const bool bare = terms == 1 && !(denominator && text.find('*') != std::string::npos);
  return bare ? text : "(" + text + ")";
}
}  // namespace

std::string to_expression(const ExactRatFun& f, const std::string& var) {
  if (f.den().is_constant()) return to_expression(f.num(), var);
  return operand(f.num(), var, false) + "/" + operand(f.den(), var, true);
}

std::string to_coefficient_list(const ExactRatFun& f) {
  if (f.den().is_constant()) return to_coefficient_list(f.num());
  return to_coefficient_list(f.num()) + " ; " + to_coefficient_list(f.den());
}

}  // namespace rzlab

#pragma once

#include <string>

#include "exactalg/poly.hpp"

namespace rzlab {

// Reduced rational function num/den over Q: gcd(num, den) = 1 and den is
// monic. Every constructor and operation re-normalizes, so two equal
// functions always have identical representations.
class ExactRatFun {
 public:
  // The zero function 0/1.
  ExactRatFun();
  // A polynomial p/1.
  explicit ExactRatFun(ExactPoly poly);

  // Cancels the exact gcd and makes the denominator monic. Throws
  // DomainError("zero denominator") when den is the zero polynomial.
  static ExactRatFun normalize(ExactPoly num, ExactPoly den);
  static ExactRatFun constant(const BigRational& c);
  static ExactRatFun identity();

  const ExactPoly& num() const { return num_; }
  const ExactPoly& den() const { return den_; }

  // max(deg num, deg den); the zero function has degree 0.
  int degree() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Value of a constant function; throws DomainError otherwise.
  BigRational constant_value() const;

  ExactRatFun derivative() const;
  // Integer power; negative exponents require a nonzero function.
  ExactRatFun pow(int k) const;
  ExactRatFun reciprocal() const;
  // f(alpha*z + beta) with alpha != 0.
  ExactRatFun compose_linear(const BigRational& alpha,
                             const BigRational& beta) const;
  // f(1/z).
  ExactRatFun compose_reciprocal() const;
  // Exact value at x; throws DomainError at a pole.
  BigRational operator()(const BigRational& x) const;

  ExactRatFun operator-() const;
  friend ExactRatFun operator+(const ExactRatFun& a, const ExactRatFun& b);
  friend ExactRatFun operator-(const ExactRatFun& a, const ExactRatFun& b);
  friend ExactRatFun operator*(const ExactRatFun& a, const ExactRatFun& b);
  friend ExactRatFun operator/(const ExactRatFun& a, const ExactRatFun& b);
  friend bool operator==(const ExactRatFun& a, const ExactRatFun& b) = default;

 private:
  ExactRatFun(ExactPoly num, ExactPoly den, bool /*normalized*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  ExactPoly num_;
  ExactPoly den_;
};

inline ExactRatFun operator+(const ExactRatFun& a, const BigRational& c) {
  return a + ExactRatFun::constant(c);
}
inline ExactRatFun operator*(const BigRational& c, const ExactRatFun& a) {
  return ExactRatFun::constant(c) * a;
}

std::string to_expression(const ExactRatFun& f, const std::string& var = "z");
// "num ; den" coefficient form, or just "num" when den = 1.
std::string to_coefficient_list(const ExactRatFun& f);

}  // namespace rzlab

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rzlab {

using BigInteger = mpz_class;
// mpq_class keeps numerator and denominator coprime with a positive
// denominator after every arithmetic operation; 0 is stored as 0/1.
using BigRational = mpq_class;

// Degree of a polynomial. The zero polynomial has degree minus infinity,
// which compares below every finite degree.
class Degree {
 public:
  static Degree minus_infinity() { return Degree(); }
  explicit Degree(int value) : value_(value), finite_(true) {}

  bool is_finite() const { return finite_; }
  int value() const;

  friend bool operator==(const Degree& a, const Degree& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }

 private:
  Degree() = default;
  int value_ = 0;
  bool finite_ = false;
};

// Dense univariate polynomial with exact rational coefficients, stored in
// ascending degree order without trailing zeros.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<BigRational> coefficients);

  static ExactPoly constant(const BigRational& c);
  static ExactPoly monomial(const BigRational& c, std::size_t power);
  // The indeterminate z.
  static ExactPoly identity();

  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  // Coefficient of z^k, zero beyond the degree.
  BigRational coeff(std::size_t k) const;

  Degree degree() const;
  // Degree as an integer; throws DomainError for the zero polynomial.
  int deg() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const BigRational& leading() const;
  // Index of the lowest nonzero coefficient (order of vanishing at 0).
  std::size_t valuation() const;

  ExactPoly derivative() const;
  ExactPoly pow(unsigned k) const;
  ExactPoly monic() const;
  // p(alpha*z + beta).
  ExactPoly compose_linear(const BigRational& alpha,
                           const BigRational& beta) const;
  // z^n p(1/z); requires n >= deg p.
  ExactPoly reversed(int n) const;

  BigRational operator()(const BigRational& x) const;
  int sign_at(const BigRational& x) const;

  ExactPoly operator-() const;
  ExactPoly& operator+=(const ExactPoly& rhs);
  ExactPoly& operator-=(const ExactPoly& rhs);
  ExactPoly& operator*=(const ExactPoly& rhs);
  ExactPoly& operator*=(const BigRational& rhs);

  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator*(ExactPoly a, const ExactPoly& b) { return a *= b; }
  friend ExactPoly operator*(ExactPoly a, const BigRational& b) { return a *= b; }
  friend ExactPoly operator*(const BigRational& a, ExactPoly b) { return b *= a; }
  friend bool operator==(const ExactPoly& a, const ExactPoly& b) = default;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

struct PolyDivision {
  ExactPoly quotient;
  ExactPoly remainder;
};

// Euclidean division over Q. Throws DomainError when the divisor is zero.
PolyDivision divmod(const ExactPoly& dividend, const ExactPoly& divisor);
// Division that must be exact; throws DomainError on a nonzero remainder.
ExactPoly exact_quotient(const ExactPoly& dividend, const ExactPoly& divisor);
// Monic greatest common divisor; gcd(0, 0) = 0.
ExactPoly gcd(const ExactPoly& a, const ExactPoly& b);

struct SquarefreeFactor {
  ExactPoly factor;  // monic, square-free, degree >= 1
  int multiplicity;
};

// Yun's algorithm. Factors are pairwise coprime and returned in increasing
// multiplicity; the product of factor^multiplicity equals p / leading(p).
std::vector<SquarefreeFactor> squarefree_decompose(const ExactPoly& p);
// Monic product of the distinct irreducible factors of p.
ExactPoly squarefree_part(const ExactPoly& p);

// Human-readable form such as "-16*z^2 + 8*z + 2".
std::string to_expression(const ExactPoly& p, const std::string& var = "z");
// Comma-separated ascending coefficients, e.g. "2,8,-16".
std::string to_coefficient_list(const ExactPoly& p);

}  // namespace rzlab

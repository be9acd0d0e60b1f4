#pragma once

#include <complex>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "exactalg/poly.hpp"

namespace rzlab {

using MpReal = boost::multiprecision::mpfr_float;

// Sets the working precision of newly created MpReal values for the
// lifetime of the scope and restores the previous one afterwards. The
// underlying default is process-wide, so scopes with different precisions
// must not overlap across threads.
class PrecisionScope {
 public:
  explicit PrecisionScope(int bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned previous_digits10_;
};

int digits10_for_bits(int bits);

MpReal to_mp(const BigRational& q);
// Exact conversion of a finite MpReal.
BigRational to_rational(const MpReal& x);

// Finite complex number with MpReal parts.
struct MpComplex {
  MpReal re = 0;
  MpReal im = 0;

  MpComplex() = default;
  MpComplex(MpReal r, MpReal i = 0) : re(std::move(r)), im(std::move(i)) {}

  MpComplex conj() const { return {re, -im}; }
  MpReal norm() const { return re * re + im * im; }
  MpReal abs() const { return sqrt(norm()); }
  MpReal arg() const { return atan2(im, re); }
  std::complex<double> to_double() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
  }

  MpComplex& operator+=(const MpComplex& o) { re += o.re; im += o.im; return *this; }
  MpComplex& operator-=(const MpComplex& o) { re -= o.re; im -= o.im; return *this; }
  MpComplex& operator*=(const MpComplex& o) {
    MpReal r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  MpComplex& operator/=(const MpComplex& o) {
    MpReal d = o.norm();
    MpReal r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
  friend MpComplex operator+(MpComplex a, const MpComplex& b) { return a += b; }
  friend MpComplex operator-(MpComplex a, const MpComplex& b) { return a -= b; }
  friend MpComplex operator*(MpComplex a, const MpComplex& b) { return a *= b; }
  friend MpComplex operator/(MpComplex a, const MpComplex& b) { return a /= b; }
  friend MpComplex operator-(const MpComplex& a) { return {-a.re, -a.im}; }
};

// Decimal scientific rendering with `digits` significant digits.
std::string format_mp(const MpReal& x, int digits = 30);

// Polynomial with MpReal coefficients (ascending), for quantities that are
// not rational such as the irrational constants of the closed-form
// examples.
struct MpPoly {
  std::vector<MpReal> coeffs;

  static MpPoly from_exact(const ExactPoly& p);
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  MpReal operator()(const MpReal& x) const;
  MpComplex operator()(const MpComplex& z) const;
  friend MpPoly operator+(const MpPoly& a, const MpPoly& b);
  friend MpPoly operator*(const MpPoly& a, const MpPoly& b);
};

// Horner evaluation of an exact polynomial at a complex point.
MpComplex evaluate(const std::vector<MpReal>& coeffs, const MpComplex& z);

// Root of p near `guess` by Newton iteration, certified by an exact sign
// change of p on [x - 2^-(bits-8), x + 2^-(bits-8)]. Throws NumericError
// when certification fails.
MpReal certified_real_root(const ExactPoly& p, const MpReal& guess, int bits);

}  // namespace rzlab

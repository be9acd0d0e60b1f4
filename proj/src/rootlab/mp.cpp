#include "rootlab/mp.hpp"

#include <cmath>
#include <ios>

#include "core/error.hpp"

namespace rzlab {

int digits10_for_bits(int bits) {
  return static_cast<int>(std::ceil(bits * 0.30102999566398120));
}

PrecisionScope::PrecisionScope(int bits)
    : previous_digits10_(MpReal::default_precision()) {
  MpReal::default_precision(static_cast<unsigned>(digits10_for_bits(bits)));
}

PrecisionScope::~PrecisionScope() { MpReal::default_precision(previous_digits10_); }

MpReal to_mp(const BigRational& q) {
  MpReal x;
  mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return x;
}

BigRational to_rational(const MpReal& x) {
  BigRational q;
  mpfr_get_q(q.get_mpq_t(), x.backend().data());
  return q;
}

std::string format_mp(const MpReal& x, int digits) {
  if (x == 0) return "0";
  return x.str(digits, std::ios_base::scientific);
}

MpPoly MpPoly::from_exact(const ExactPoly& p) {
  MpPoly out;
  for (const auto& c : p.coefficients()) out.coeffs.push_back(to_mp(c));
  return out;
}

MpReal MpPoly::operator()(const MpReal& x) const {
  MpReal acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

MpComplex MpPoly::operator()(const MpComplex& z) const { return evaluate(coeffs, z); }

MpPoly operator+(const MpPoly& a, const MpPoly& b) {
  MpPoly r;
  r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), MpReal(0));
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) r.coeffs[k] += a.coeffs[k];
  for (std::size_t k = 0; k < b.coeffs.size(); ++k) r.coeffs[k] += b.coeffs[k];
  return r;
}

MpPoly operator*(const MpPoly& a, const MpPoly& b) {
  MpPoly r;
  if (a.coeffs.empty() || b.coeffs.empty()) return r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, MpReal(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return r;
}

MpComplex evaluate(const std::vector<MpReal>& coeffs, const MpComplex& z) {
  MpReal re = 0, im = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    MpReal nre = re * z.re - im * z.im + *it;
    im = re * z.im + im * z.re;
    re = std::move(nre);
  }
  return {re, im};
}

MpReal certified_real_root(const ExactPoly& p, const MpReal& guess, int bits) {
  PrecisionScope scope(bits + 32);
  const MpPoly mp = MpPoly::from_exact(p);
  const MpPoly dmp = MpPoly::from_exact(p.derivative());
  MpReal x = guess;
  for (int i = 0; i < 200; ++i) {
    MpReal step = mp(x) / dmp(x);
    x -= step;
    if (abs(step) <= abs(x) * pow(MpReal(2), -(bits + 16))) break;
  }
  const BigRational center = to_rational(x);
  BigRational radius = 1;
  mpq_div_2exp(radius.get_mpq_t(), radius.get_mpq_t(), static_cast<unsigned long>(bits - 8));
  const int lo = p.sign_at(center - radius);
  const int hi = p.sign_at(center + radius);
  if (p.sign_at(center) != 0 && lo * hi >= 0)
    throw NumericError("root certification failed: no sign change", 0.0);
  return x;
}

}  // namespace rzlab

#include "exactalg/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "core/error.hpp"

namespace rzlab {

int Degree::value() const {
  if (!finite_) throw DomainError("degree of the zero polynomial is -inf");
  return value_;
}

ExactPoly::ExactPoly(std::vector<BigRational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

ExactPoly ExactPoly::constant(const BigRational& c) {
  return ExactPoly(std::vector<BigRational>{c});
}

ExactPoly ExactPoly::monomial(const BigRational& c, std::size_t power) {
  std::vector<BigRational> v(power + 1);
  v[power] = c;
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::identity() { return monomial(1, 1); }

void ExactPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigRational ExactPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigRational(0);
}

Degree ExactPoly::degree() const {
  if (coeffs_.empty()) return Degree::minus_infinity();
  return Degree(static_cast<int>(coeffs_.size()) - 1);
}

int ExactPoly::deg() const { return degree().value(); }

const BigRational& ExactPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

std::size_t ExactPoly::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return k;
  throw DomainError("valuation of the zero polynomial");
}

ExactPoly ExactPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return ExactPoly(std::move(d));
}

ExactPoly ExactPoly::pow(unsigned k) const {
  ExactPoly result = constant(1);
  ExactPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

ExactPoly ExactPoly::monic() const {
  if (is_zero()) return {};
  BigRational inv = 1 / leading();
  return *this * inv;
}

ExactPoly ExactPoly::compose_linear(const BigRational& alpha,
                                    const BigRational& beta) const {
  // Horner in the polynomial ring.
  ExactPoly inner(std::vector<BigRational>{beta, alpha});
  ExactPoly result;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result *= inner;
    result += constant(*it);
  }
  return result;
}

ExactPoly ExactPoly::reversed(int n) const {
  if (is_zero()) return {};
  if (n < deg()) throw DomainError("reversal length below degree");
  std::vector<BigRational> r(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r[static_cast<std::size_t>(n) - k] = coeffs_[k];
  return ExactPoly(std::move(r));
}

BigRational ExactPoly::operator()(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int ExactPoly::sign_at(const BigRational& x) const { return sgn((*this)(x)); }

ExactPoly ExactPoly::operator-() const {
  ExactPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator*=(const ExactPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator*=(const BigRational& rhs) {
  if (sgn(rhs) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

PolyDivision divmod(const ExactPoly& dividend, const ExactPoly& divisor) {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<BigRational> rem = dividend.coefficients();
  const auto& d = divisor.coefficients();
  const std::size_t dn = d.size();
  if (rem.size() < dn) return {ExactPoly(), dividend};
  std::vector<BigRational> quot(rem.size() - dn + 1);
  const BigRational lead_inv = 1 / d.back();
  for (std::size_t k = rem.size(); k-- >= dn;) {
    if (sgn(rem[k]) == 0) continue;
    BigRational q = rem[k] * lead_inv;
    quot[k - dn + 1] = q;
    for (std::size_t j = 0; j < dn; ++j) rem[k - dn + 1 + j] -= q * d[j];
  }
  rem.resize(dn - 1);
  return {ExactPoly(std::move(quot)), ExactPoly(std::move(rem))};
}

ExactPoly exact_quotient(const ExactPoly& dividend, const ExactPoly& divisor) {
  auto [q, r] = divmod(dividend, divisor);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

ExactPoly gcd(const ExactPoly& a, const ExactPoly& b) {
  ExactPoly x = a.monic();
  ExactPoly y = b.monic();
  while (!y.is_zero()) {
    ExactPoly r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::vector<SquarefreeFactor> squarefree_decompose(const ExactPoly& p) {
  if (p.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.is_constant()) return out;
  const ExactPoly f = p.monic();
  const ExactPoly df = f.derivative();
  ExactPoly a = gcd(f, df);
  ExactPoly b = exact_quotient(f, a);
  ExactPoly c = exact_quotient(df, a) - b.derivative();
  int k = 1;
  while (!b.is_constant()) {
    ExactPoly d = gcd(b, c);
    if (!d.is_constant()) out.push_back({d, k});
    b = exact_quotient(b, d);
    c = exact_quotient(c, d) - b.derivative();
    ++k;
  }
  return out;
}

ExactPoly squarefree_part(const ExactPoly& p) {
  if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
  if (p.is_constant()) return ExactPoly::constant(1);
  return exact_quotient(p.monic(), gcd(p, p.derivative()));
}

std::string to_expression(const ExactPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    BigRational mag = abs(c[k]);
    if (first) {
      if (sgn(c[k]) < 0) os << '-';
    } else {
      os << (sgn(c[k]) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (k == 0 || !unit) os << mag.get_str();
    if (k > 0) {
      if (!unit) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::string to_coefficient_list(const ExactPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    if (k) s += ',';
    s += p.coefficients()[k].get_str();
  }
  return s;
}

}  // namespace rzlab

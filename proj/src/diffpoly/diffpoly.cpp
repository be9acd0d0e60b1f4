#include "diffpoly/diffpoly.hpp"

#include "core/error.hpp"

namespace rzlab {

ExactRatFun hayman_expr(const ExactRatFun& f, int m, const BigRational& c) {
  if (m < 1) throw DomainError("hayman_expr requires m >= 1");
  return f.derivative() + f.pow(m) + c;
}

ExactRatFun product_expr(const ExactRatFun& g, int n, const BigRational& c) {
  if (n < 1) throw DomainError("product_expr requires n >= 1");
  return g.pow(n) * g.derivative() + BigRational(-c);
}

IdentityCheck sheilsmall_sides(const ExactRatFun& f, int m) {
  if (m < 2) throw DomainError("the transform requires m >= 2");
  const BigRational scale(1, m - 1);
  const ExactRatFun fw = f.compose_linear(scale, 0);
  const ExactRatFun g = fw.pow(m - 1);
  const ExactRatFun lhs = g.derivative() + g.pow(2);
  const ExactRatFun dfw = f.derivative().compose_linear(scale, 0);
  const ExactRatFun rhs = fw.pow(m - 2) * (dfw + fw.pow(m));
  return {lhs, rhs};
}

bool verify_sheilsmall_transform(const ExactRatFun& f, int m) {
  return sheilsmall_sides(f, m).holds();
}

IdentityCheck inversion_sides(const ExactRatFun& g, int m, const BigRational& c) {
  if (m < 2) throw DomainError("the inversion identity requires m >= 2");
  if (sgn(c) == 0) throw DomainError("the inversion identity requires c != 0");
  if (g.is_zero()) throw DomainError("g must not vanish identically");
  const ExactRatFun f = g.compose_linear(1 / c, 0).reciprocal();
  const ExactRatFun lhs = f.derivative().compose_linear(c, 0) + f.compose_linear(c, 0).pow(m);
  const ExactRatFun inner = ExactRatFun::constant(c) - g.pow(m - 2) * g.derivative();
  const ExactRatFun rhs = ExactRatFun::constant(1 / c) * g.pow(-m) * inner;
  return {lhs, rhs};
}

bool verify_inversion_identity(const ExactRatFun& g, int m, const BigRational& c) {
  return inversion_sides(g, m, c).holds();
}

Tc0Result tc0_construct(const ExactRatFun& f, int m, const BigRational& c, bool relaxed) {
  if (sgn(c) == 0) throw DomainError("tc0 requires c != 0");
  if (m < (relaxed ? 1 : 3)) throw DomainError(relaxed ? "tc0 requires m >= 1" : "tc0 requires m >= 3");
  if (f.is_constant()) throw DomainError("tc0 requires a non-constant f");
  const ExactRatFun df = f.derivative();
  const ExactRatFun df_c = df + c;
  if (df_c.is_zero()) throw DomainError("tc0 requires f' != -c");

  const ExactRatFun fm = f.pow(m);
  const ExactRatFun g = df_c / fm;
  if (g.is_constant()) throw DomainError("degenerate: g constant");
  const ExactRatFun one = ExactRatFun::constant(1);
  const ExactRatFun g1 = g + one;
  const ExactRatFun dg = g.derivative();
  const ExactRatFun H = dg / g1;
  const ExactRatFun G = df_c + fm;

  Tc0Result out{g, H, G, false};
  // G = f^m (g + 1), and g + 1 is not identically zero because g is not
  // constant, so G can be divided by.
  const bool first = df_c / G == g / g1;
  const ExactRatFun chain0 = f.derivative().derivative() - (G.derivative() / G) * df_c;
  const ExactRatFun chain1 = dg * G / g1.pow(2);
  const ExactRatFun chain2 = fm * dg / g1;
  const ExactRatFun chain3 = fm * H;
  out.checks = first && chain0 == chain1 && chain1 == chain2 && chain2 == chain3;
  return out;
}

}  // namespace rzlab

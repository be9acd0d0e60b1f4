#pragma once

#include "exactalg/ratfun.hpp"

namespace rzlab {

// f' + f^m + c, normalized. Requires m >= 1.
ExactRatFun hayman_expr(const ExactRatFun& f, int m, const BigRational& c);

// g^n g' - c, whose zeros solve g^n g' = c. Requires n >= 1.
ExactRatFun product_expr(const ExactRatFun& g, int n, const BigRational& c);

// Both sides of an identity, already normalized.
struct IdentityCheck {
  ExactRatFun lhs;
  ExactRatFun rhs;

  bool holds() const { return lhs == rhs; }
};

// With w = z/(m-1) and g(z) = f(w)^(m-1):
//   lhs = g' + g^2,  rhs = f(w)^(m-2) (f'(w) + f(w)^m).
// Requires m >= 2.
IdentityCheck sheilsmall_sides(const ExactRatFun& f, int m);
bool verify_sheilsmall_transform(const ExactRatFun& f, int m);

// With f(w) = 1/g(w/c), so that g(z) = 1/f(cz):
//   lhs = f'(cz) + f(cz)^m,  rhs = c^-1 g^-m (c - g^(m-2) g').
// Requires m >= 2, c != 0 and g not identically zero.
IdentityCheck inversion_sides(const ExactRatFun& g, int m, const BigRational& c);
bool verify_inversion_identity(const ExactRatFun& g, int m, const BigRational& c);

struct Tc0Result {
  ExactRatFun g;  // (f' + c) / f^m
  ExactRatFun H;  // g' / (g + 1)
  ExactRatFun G;  // f' + f^m + c
  bool checks = false;
};

// Builds g and H from f and checks, as exact identities,
//   (f' + c)/G = g/(g + 1)
//   f'' - (G'/G)(f' + c) = g'G/(g + 1)^2 = f^m g'/(g + 1) = f^m H.
// Requires c != 0, m >= 3 (m >= 1 when `relaxed`), f non-constant and
// f' != -c. Throws DomainError("degenerate: g constant") when g is
// constant, which includes g = -1.
Tc0Result tc0_construct(const ExactRatFun& f, int m, const BigRational& c, bool relaxed = false);

}  // namespace rzlab

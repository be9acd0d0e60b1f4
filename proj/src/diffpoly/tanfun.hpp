#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "exactalg/ratfun.hpp"

namespace rzlab {

// f(z) = R(tan(b z)) with R rational over Q and b != 0 rational.
struct TanFun {
  ExactRatFun outer;
  BigRational frequency;
};

// "R = <ratfun> ; b = <rational>", where <ratfun> is an expression in t
// (or z) or coefficient form "num ; den".
TanFun parse_tanfun(std::string_view text);

struct HaymanMode {
  int m = 2;
  BigRational c = 0;
};
struct ProductMode {
  int n = 1;
  BigRational c = 0;
};
using TanMode = std::variant<HaymanMode, ProductMode>;

// Differential polynomial of a TanFun rewritten in t = tan(bz), using
// f' = b R'(t) (1 + t^2). Zeros in z correspond to roots of `poly`: a real
// t gives real z, a non-real t other than +-i gives non-real z, and t = +-i
// is never attained by tan.
struct ReducedTanPoly {
  ExactPoly poly;          // numerator of `expression`
  ExactRatFun expression;  // the full reduced rational function of t
};

// Throws DomainError("expression vanishes identically") for a zero result.
ReducedTanPoly tan_reduce(const TanFun& f, const TanMode& mode);

struct TanZeroCount {
  // poly with every factor t^2 + 1 divided out.
  ExactPoly attainable;
  int excluded_pm_i_multiplicity = 0;
  // Distinct real / non-real roots of `attainable` (exact, via Sturm).
  int real_distinct = 0;
  int nonreal_distinct = 0;
  bool no_zeros = false;  // poly is a nonzero constant
};

TanZeroCount count_tan_zeros(const ReducedTanPoly& reduced);

// Secondary numeric cross-check: at each real sample x, evaluates the
// differential polynomial directly from f(x) = R(tan(bx)) with f' from a
// multiprecision central difference, and compares with the reduced
// expression at t = tan(bx). Returns the largest relative deviation.
double tan_reduction_max_deviation(const TanFun& f, const TanMode& mode,
                                   const std::vector<double>& samples);

}  // namespace rzlab

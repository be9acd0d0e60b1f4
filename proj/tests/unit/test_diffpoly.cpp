#include <doctest.h>

#include "core/error.hpp"
#include "diffpoly/diffpoly.hpp"
#include "diffpoly/tanfun.hpp"
#include "exactalg/parse.hpp"

using namespace rzlab;

namespace {
ExactPoly P(std::vector<BigRational> c) { return ExactPoly(std::move(c)); }
}  // namespace

TEST_SUITE("diffpoly") {
  TEST_CASE("hayman expression of a quadratic") {
    const ExactRatFun e = hayman_expr(ExactRatFun(P({2, 8, -16})), 2, -12);
    CHECK(e == ExactRatFun(P({0, 0, 0, -256, 256})));
  }

  TEST_CASE("hayman expression of 1/z") {
    const ExactRatFun e = hayman_expr(ExactRatFun::identity().reciprocal(), 4, 0);
    CHECK(e == ExactRatFun::normalize(P({1, 0, -1}), P({0, 0, 0, 0, 1})));
  }

  TEST_CASE("product expression") {
    CHECK(product_expr(ExactRatFun::identity(), 2, 1) == ExactRatFun(P({-1, 0, 1})));
    CHECK(product_expr(ExactRatFun(P({1, 1})), 1, 0) == ExactRatFun(P({1, 1})));
  }

  TEST_CASE("transform identities hold exactly") {
    const ExactRatFun f = parse_function("(z^2 + 1)/(z - 3)");
    for (int m : {2, 3, 5}) CHECK(verify_sheilsmall_transform(f, m));
    const ExactRatFun g = parse_function("2*z^3 - z + 4");
    CHECK(verify_inversion_identity(g, 3, BigRational(-2)));
    CHECK(verify_inversion_identity(g, 4, BigRational(1, 3)));
    CHECK_THROWS_AS((void)verify_inversion_identity(g, 3, BigRational(0)), DomainError);
  }

  TEST_CASE("tc0 construction") {
    const Tc0Result r = tc0_construct(ExactRatFun::identity().pow(2), 3, 1);
    CHECK(r.checks);
    CHECK_THROWS_AS((void)tc0_construct(ExactRatFun::identity(), 1, 1), DomainError);
    CHECK(tc0_construct(ExactRatFun::identity().pow(2), 1, 1, true).checks);
  }

  TEST_CASE("tan reduction of -tan z with m = 6 and c = 1") {
    const TanFun f{ExactRatFun(P({0, -1})), 1};
    const ReducedTanPoly red = tan_reduce(f, HaymanMode{6, 1});
    const ExactPoly expected = P({0, 0, 1}) * P({-1, 1}) * P({1, 1}) * P({1, 0, 1});
    CHECK(red.poly.monic() == expected);
    const TanZeroCount count = count_tan_zeros(red);
    CHECK(count.excluded_pm_i_multiplicity == 1);
    CHECK(count.real_distinct == 3);
    CHECK(count.nonreal_distinct == 0);
  }

  TEST_CASE("tan reduction agrees with direct evaluation") {
    const TanFun f = parse_tanfun("R = (t + 2)/(t - 1) ; b = 1/2");
    const double dev = tan_reduction_max_deviation(f, ProductMode{2, 3}, {0.1, 0.37, -0.8, 1.2});
    CHECK(dev < 1e-8);
  }

  TEST_CASE("identically vanishing reduction is a domain error") {
    // f = tan z solves f' = 1 + f^2, so f' - f^2 - 1 is zero; use product
    // mode with g = constant to force an identically zero expression.
    const TanFun f{ExactRatFun::constant(0), 1};
    CHECK_THROWS_AS((void)tan_reduce(f, ProductMode{1, 0}), DomainError);
  }
}

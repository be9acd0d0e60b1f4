#include <doctest.h>

#include "core/error.hpp"
#include "exactalg/parse.hpp"
#include "exactalg/poly.hpp"
#include "exactalg/ratfun.hpp"
#include "exactalg/sturm.hpp"
#include "theorems/generators.hpp"

using namespace rzlab;

namespace {
ExactPoly P(std::vector<BigRational> c) { return ExactPoly(std::move(c)); }
}  // namespace

TEST_SUITE("exactalg") {
  TEST_CASE("zero polynomial has degree minus infinity") {
    CHECK(ExactPoly().is_zero());
    CHECK(ExactPoly().degree() < Degree(0));
    CHECK(P({0, 0, 0}).is_zero());
    CHECK(P({1, 2, 0}).deg() == 1);
  }

  TEST_CASE("arithmetic and division") {
    const ExactPoly a = P({-1, 0, 1});
    const ExactPoly b = P({-1, 1});
    const PolyDivision q = divmod(a, b);
    CHECK(q.quotient == P({1, 1}));
    CHECK(q.remainder.is_zero());
    CHECK(exact_quotient(a, b) == P({1, 1}));
    CHECK(gcd(P({-1, 0, 1}), P({1, 2, 1})) == P({1, 1}));
    CHECK(P({1, 1}).pow(3) == P({1, 3, 3, 1}));
    CHECK(P({5, 3, 1}).derivative() == P({3, 2}));
    CHECK(P({1, 2, 3})(BigRational(2)) == 17);
  }

  TEST_CASE("square-free decomposition recovers multiplicities") {
    // (z - 1)^2 (z + 2) z^3
    const ExactPoly p = P({-1, 1}).pow(2) * P({2, 1}) * ExactPoly::monomial(1, 3);
    int total = 0;
    for (const auto& [factor, mult] : squarefree_decompose(p)) total += mult * factor.deg();
    CHECK(total == 6);
    bool saw_cube = false, saw_square = false;
    for (const auto& [factor, mult] : squarefree_decompose(p)) {
      if (mult == 3) saw_cube = factor == ExactPoly::identity();
      if (mult == 2) saw_square = factor == P({-1, 1});
    }
    CHECK(saw_cube);
    CHECK(saw_square);
    CHECK(squarefree_part(p).deg() == 3);
  }

  TEST_CASE("rational functions normalize") {
    const ExactRatFun f = ExactRatFun::normalize(P({-1, 0, 1}), P({-1, 1}));
    CHECK(f == ExactRatFun(P({1, 1})));
    const ExactRatFun inv = ExactRatFun::identity().reciprocal();
    CHECK(inv.derivative() == ExactRatFun::normalize(P({-1}), P({0, 0, 1})));
    CHECK(inv.degree() == 1);
    CHECK((inv * ExactRatFun::identity()) == ExactRatFun::constant(1));
    CHECK(ExactRatFun(P({0, 0, 1})).compose_reciprocal() == ExactRatFun::normalize(P({1}), P({0, 0, 1})));
  }

  TEST_CASE("expression and coefficient parsing agree") {
    CHECK(parse_function("z - z^3/3") == ExactRatFun(P({0, 1, 0, BigRational(-1, 3)})));
    CHECK(parse_function("2,8,-16") == ExactRatFun(P({2, 8, -16})));
    CHECK(parse_function("1 ; 0,1") == ExactRatFun::identity().reciprocal());
    CHECK(parse_function("(z+1)/(z-1)") == ExactRatFun::normalize(P({1, 1}), P({-1, 1})));
    CHECK(parse_rational("-7/21") == BigRational(-1, 3));
    CHECK(to_expression(parse_function("3*z^2 - 1")) == "3*z^2 - 1");
  }

  TEST_CASE("printing round-trips through the parser") {
    CHECK(to_expression(parse_function("2/z^3")) == "2/z^3");
    CHECK(to_expression(parse_function("-6/(z^4 + 2*z)")) == "-6/(z^4 + 2*z)");
    CHECK(parse_function(to_expression(parse_function("1/(3*z^2)"))) == parse_function("1/(3*z^2)"));
    InstanceRng rng(derive_seed(3, 5));
    for (int i = 0; i < 200; ++i) {
      ExactRatFun f = random_ratfun(rng, 4, 30);
      if (i % 3 == 0) f = ExactRatFun::constant(BigRational(1, 7)) / f;
      CHECK(parse_function(to_expression(f)) == f);
      CHECK(parse_function(to_coefficient_list(f)) == f);
    }
  }

  TEST_CASE("malformed input reports a position") {
    try {
      (void)parse_function("z + * 2");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() <= 4);
    }
    CHECK_THROWS_AS((void)parse_function("1/0"), Error);
    CHECK_THROWS_AS((void)parse_function(""), ParseError);
  }

  TEST_CASE("Sturm counts distinct real roots exactly") {
    const ExactPoly p = P({-2, 0, 1}) * P({1, 0, 1});
    CHECK(sturm_distinct_real_roots(p) == 2);
    CHECK(SturmChain(p).count_in(0, 2) == 1);
    CHECK(sturm_distinct_real_roots(P({-1, 1}).pow(4)) == 1);
    ExactPoly w = P({1});
    for (int k = 1; k <= 8; ++k) w *= P({-k, 1});
    CHECK(sturm_distinct_real_roots(w) == 8);
    CHECK(isolate_real_roots(w).size() == 8);
  }
}

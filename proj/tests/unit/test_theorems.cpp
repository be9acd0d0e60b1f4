#include <doctest.h>

#include "core/error.hpp"
#include "exactalg/parse.hpp"
#include "theorems/bounds.hpp"
#include "theorems/census.hpp"
#include "theorems/fuzz.hpp"
#include "theorems/generators.hpp"

using namespace rzlab;

namespace {
ExactPoly P(std::vector<BigRational> c) { return ExactPoly(std::move(c)); }
}  // namespace

TEST_SUITE("theorems") {
  TEST_CASE("zero census of a mixed polynomial") {
    // (z - 1)^2 (z + 1) z (z^2 + 1)
    const ExactPoly g = P({-1, 1}).pow(2) * P({1, 1}) * P({0, 1}) * P({1, 0, 1});
    const ZeroCensus c = zero_census(g);
    CHECK(c.K == 1);
    CHECK(c.L == 1);
    CHECK(c.M == 0);
    CHECK(c.N == 1);
    CHECK(c.P == 2);
    CHECK(c.inequality_L());
    CHECK(c.inequality_d(6));
    CHECK(census_nonreal_bound(c, 6, 2) == 6 - 1 + 0 + 1 + 2);
  }

  TEST_CASE("odd multiple real zero counts in M") {
    const ZeroCensus c = zero_census(P({-2, 1}).pow(3) * P({5, 1}));
    CHECK(c.M == 1);
    CHECK(c.N == 1);
  }

  TEST_CASE("Rolle interlacing") {
    CHECK(rolle_interlace_check(ExactRatFun(P({0, -1, 0, 1})), 0));
    CHECK(rolle_interlace_check(parse_function("1/(z^2 - 1)"), BigRational(-2)));
  }

  TEST_CASE("rational f with m = 5") {
    const BoundReport r = check_bound(TheoremId::ThmRat, ExactRatFun::identity().reciprocal(), 5, 0);
    CHECK(r.required_nonreal_min == 2);
    CHECK(r.observed_nonreal == 2);
    CHECK(r.pass);
  }

  TEST_CASE("degree 28 instance for m = 7") {
    const BoundReport r = check_bound(TheoremId::ThmRat, ExactRatFun(P({3, -7, 12, 5, -11})), 7, 0);
    CHECK(r.required_nonreal_min == 16);
    CHECK(r.observed_nonreal == 26);
    CHECK(r.observed_real == 2);
    CHECK(r.pass);
  }

  TEST_CASE("polynomial g with n = 2") {
    const BoundReport r = check_bound(TheoremId::Thm4Pol, ExactRatFun::identity(), 2, 1);
    CHECK(r.observed_nonreal == 0);
    CHECK(r.observed_real == 2);
    CHECK(r.pass);
    CHECK(r.census_nonreal_min.has_value());
  }

  TEST_CASE("hypotheses are enforced") {
    CHECK_THROWS_AS((void)check_bound(TheoremId::ThmRat, ExactRatFun::identity(), 4, 0), DomainError);
    CHECK_THROWS_AS((void)check_bound(TheoremId::Thm4Pol, ExactRatFun::identity(), 2, 0), DomainError);
    CHECK_THROWS_AS((void)check_bound(TheoremId::Cor1, parse_function("1/z"), 3, 0), DomainError);
  }

  TEST_CASE("negative controls fail the stated bound") {
    BoundOptions o;
    o.enforce_hypotheses = false;
    const ExactRatFun g = ExactRatFun::normalize(P({3, 8, 2}), P({3, 5}));
    const BoundReport a = check_bound(TheoremId::Thm4Pol, g, 2, 1, o);
    CHECK_FALSE(a.hypotheses_met);
    CHECK(a.observed_nonreal == 0);
    CHECK_FALSE(a.pass);
    const BoundReport b = check_bound(TheoremId::Thm9Rat, ExactRatFun(P({2, 8, -16})), 2, -12, o);
    CHECK(b.observed_nonreal == 0);
    CHECK_FALSE(b.pass);
  }

  TEST_CASE("theorem names round-trip") {
    for (auto id : {TheoremId::Cor1, TheoremId::ThmRat, TheoremId::CorCRat, TheoremId::Thm4Pol, TheoremId::Thm9Rat})
      CHECK(theorem_from_name(theorem_name(id)) == id);
    CHECK_FALSE(theorem_from_name("nope").has_value());
  }

  TEST_CASE("generators are deterministic") {
    InstanceRng a(derive_seed(7, 1)), b(derive_seed(7, 1));
    CHECK(random_poly(a, 5, 20) == random_poly(b, 5, 20));
    CHECK(random_ratfun(a, 3, 10) == random_ratfun(b, 3, 10));
    CHECK(derive_seed(7, 1) != derive_seed(7, 2));
    InstanceRng c(1);
    const ExactRatFun r = random_ratfun(c, 3, 10);
    CHECK_FALSE(r.den().is_constant());
  }

  TEST_CASE("small campaigns") {
    FuzzConfig cfg;
    cfg.trials = 20;
    for (const char* suite : {"census", "oracle", "cor1", "negative_controls"}) {
      const FuzzResult r = run_fuzz(suite, cfg);
      CHECK(r.instances > 0);
      CHECK(r.violations == 0);
    }
    CHECK_THROWS_AS((void)run_fuzz("unknown", cfg), DomainError);
  }

  TEST_CASE("campaigns are reproducible for a seed") {
    FuzzConfig cfg;
    cfg.trials = 10;
    const FuzzResult a = run_fuzz("thm4pol", cfg);
    const FuzzResult b = run_fuzz("thm4pol", cfg);
    CHECK(a.report == b.report);
    cfg.seed = 8;
    CHECK_FALSE(run_fuzz("thm4pol", cfg).report == a.report);
  }
}

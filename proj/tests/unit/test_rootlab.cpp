#include <doctest.h>

#include <cmath>

#include "rootlab/roots.hpp"
#include "exactalg/sturm.hpp"

using namespace rzlab;

namespace {
ExactPoly P(std::vector<BigRational> c) { return ExactPoly(std::move(c)); }
}  // namespace

TEST_SUITE("rootlab") {
  TEST_CASE("conjugate pair is classified and linked") {
    const RootSet r = find_roots(P({1, 0, 1}));
    REQUIRE(r.entries.size() == 2);
    CHECK(r.entries[0].cls == RootClass::ConjugatePair);
    CHECK(r.entries[0].partner == std::optional<std::size_t>(1));
    CHECK(std::abs(std::abs(r.entries[0].value.to_double().imag()) - 1.0) < 1e-15);
    const RootCounts c = classify_and_count(r);
    CHECK(c.real_distinct == 0);
    CHECK(c.nonreal_distinct == 2);
  }

  TEST_CASE("multiplicities come from the exact decomposition") {
    const ExactPoly p = P({-1, 1}).pow(3) * P({1, 0, 1});
    const RootSet r = find_roots(p);
    int real_mult = 0;
    for (const auto& e : r.entries)
      if (e.cls == RootClass::Real) real_mult = e.multiplicity;
    CHECK(real_mult == 3);
    CHECK(classify_and_count(r).real_distinct == 1);
  }

  TEST_CASE("clustered real roots stay real") {
    ExactPoly w = P({1});
    for (int k = 1; k <= 12; ++k) w *= P({-k, 1});
    const RootSet r = find_roots(w);
    CHECK(classify_and_count(r).real_distinct == 12);
    CHECK(r.worst_relative_residual < 1e-30);
  }

  TEST_CASE("ill-conditioned degree 28 numerator resolves at 128 bits") {
    // Numerator of f' + f^7 for f = 3 - 7z + 12z^2 + 5z^3 - 11z^4.
    ExactPoly f = P({3, -7, 12, 5, -11});
    const ExactPoly e = f.derivative() + f.pow(7);
    const RootSet r = find_roots(e);
    const RootCounts c = classify_and_count(r);
    CHECK(c.real_distinct == sturm_distinct_real_roots(e));
    CHECK(c.real_distinct + c.nonreal_distinct == 28);
  }

  TEST_CASE("escalation doubles precision up to the cap") {
    RootSolveOptions o;
    o.precision_bits = 64;
    const RootSet r = find_roots_escalating(P({-2, 0, 1}), o, 512);
    CHECK(r.precision_bits >= 64);
    CHECK(classify_and_count(r).real_distinct == 2);
  }

  TEST_CASE("zeros of f are removed") {
    const ExactPoly target = P({0, 1}).pow(2) * P({-3, 1});
    CHECK(exclude_zeros_of(target, P({0, 1})) == P({-3, 1}));
    CHECK(exclude_zeros_of(target, P({5})) == target);
  }

  TEST_CASE("Fujiwara bound encloses every root") {
    const ExactPoly p = P({-6, 11, -6, 1});
    CHECK(fujiwara_bound(p) >= 3.0);
  }
}

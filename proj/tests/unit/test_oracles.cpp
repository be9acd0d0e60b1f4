// Hand-derived input/output pairs, one CHECK per pair.
#include <doctest.h>

#include <numbers>

#include "core/error.hpp"
#include "diffpoly/diffpoly.hpp"
#include "diffpoly/tanfun.hpp"
#include "exactalg/parse.hpp"
#include "exactalg/sturm.hpp"
#include "petals/petals.hpp"
#include "rootlab/roots.hpp"
#include "theorems/bounds.hpp"
#include "theorems/census.hpp"
#include "theorems/generators.hpp"

using namespace rzlab;

namespace {
ExactRatFun F(const char* text) { return parse_function(text); }
ExactPoly N(const char* text) { return parse_function(text).num(); }
constexpr double pi = std::numbers::pi;

RootCounts counts(const char* text) { return classify_and_count(find_roots(N(text))); }

bool angles_are(const std::vector<double>& got, std::vector<double> want) {
  if (got.size() != want.size()) return false;
  for (double w : want) {
    bool hit = false;
    for (double g : got) hit = hit || angle_distance(g, w) < 1e-12;
    if (!hit) return false;
  }
  return true;
}
}  // namespace

TEST_SUITE("oracles") {
  TEST_CASE("normalization") {
    CHECK(ExactRatFun::normalize(N("z^2 - 1"), N("z - 1")) == F("z + 1"));
    CHECK(ExactRatFun::normalize(N("2*z"), N("4")) == F("z/2"));
    CHECK(ExactRatFun::normalize(N("z^3 + 2*z"), N("z")) == F("z^2 + 2"));
    CHECK(ExactRatFun::normalize(N("z^3 + 2*z"), N("z")).den() == ExactPoly({1}));
    CHECK_THROWS_AS((void)ExactRatFun::normalize(N("z"), ExactPoly()), DomainError);
  }

  TEST_CASE("calculus and composition") {
    CHECK(F("1/z").derivative() == F("-1/z^2"));
    CHECK(F("z").compose_linear(BigRational(1, 2), 0) == F("z/2"));
    CHECK(F("1/z").pow(4) == F("1/z^4"));
  }

  TEST_CASE("Sturm counts") {
    CHECK(sturm_distinct_real_roots(N("z^3 - 1")) == 1);
    CHECK(sturm_distinct_real_roots(N("256*z^4 - 256*z^3")) == 2);
    CHECK(sturm_distinct_real_roots(N("(12 + z)^4 - 20736*(1 + z^2)")) == 4);
  }

  TEST_CASE("square-free decomposition") {
    auto sf = [](const char* t) {
      std::vector<std::pair<ExactPoly, int>> out;
      for (const auto& [f, m] : squarefree_decompose(N(t))) out.emplace_back(f, m);
      return out;
    };
    const auto a = sf("z^3*(z - 1)");
    REQUIRE(a.size() == 2);
    CHECK(((a[0] == std::pair{N("z - 1"), 1} && a[1] == std::pair{N("z"), 3}) ||
           (a[1] == std::pair{N("z - 1"), 1} && a[0] == std::pair{N("z"), 3})));
    const auto b = sf("z^2 - 1");
    REQUIRE(b.size() == 1);
    CHECK(b[0] == std::pair{N("z^2 - 1"), 1});
    const auto c = sf("(z^2 + 1)^2*z");
    REQUIRE(c.size() == 2);
    for (const auto& [f, m] : c) CHECK(f == (m == 1 ? N("z") : N("z^2 + 1")));
  }

  TEST_CASE("differential polynomials") {
    CHECK(hayman_expr(F("1/z"), 4, 0) == F("(1 - z^2)/z^4"));
    CHECK(hayman_expr(F("-16*z^2 + 8*z + 2"), 2, -12) == F("256*z^4 - 256*z^3"));
    CHECK(hayman_expr(F("z"), 5, 0) == F("z^5 + 1"));
    CHECK(product_expr(F("z"), 3, 1) == F("z^3 - 1"));
    CHECK(product_expr(F("z"), 2, 1) == F("z^2 - 1"));
    int mult0 = 0;
    for (const auto& [f, m] : squarefree_decompose(product_expr(F("(2*z^2 + 8*z + 3)/(5*z + 3)"), 2, 1).num()))
      if (f == N("z")) mult0 = m;
    CHECK(mult0 == 3);
  }

  TEST_CASE("transform identities") {
    CHECK(verify_sheilsmall_transform(F("z"), 2));
    CHECK(verify_sheilsmall_transform(F("1/z"), 3));
    CHECK(verify_sheilsmall_transform(F("(z + 1)/(z - 1)"), 4));
    CHECK(verify_inversion_identity(F("z"), 3, 1));
    CHECK(verify_inversion_identity(F("z^2 + 1"), 5, 2));
    CHECK(verify_inversion_identity(F("(z + 2)/z"), 4, -1));
    CHECK_THROWS_AS((void)verify_inversion_identity(F("z"), 3, 0), DomainError);
  }

  TEST_CASE("tc0 construction") {
    const Tc0Result a = tc0_construct(F("z"), 3, 1);
    CHECK(a.g == F("2/z^3"));
    CHECK(a.H == F("-6/(z^4 + 2*z)"));
    CHECK(a.checks);
    CHECK(tc0_construct(F("z^2"), 3, 1).checks);
    CHECK_THROWS_AS((void)tc0_construct(F("-16*z^2 + 8*z + 2"), 2, -12), DomainError);
    const Tc0Result r = tc0_construct(F("-16*z^2 + 8*z + 2"), 2, -12, true);
    CHECK(r.g == (F("-32*z + 8") + ExactRatFun::constant(-12)) / F("-16*z^2 + 8*z + 2").pow(2));
    CHECK(r.checks);
    // f' = -c makes g vanish identically.
    CHECK_THROWS_AS((void)tc0_construct(F("-z"), 3, 1), DomainError);
  }

  TEST_CASE("tc0 holds on random admissible instances") {
    InstanceRng rng(derive_seed(7, 171));
    int checked = 0;
    for (int t = 0; checked < 50 && t < 500; ++t) {
      const ExactRatFun f = rng.coin() ? ExactRatFun(random_poly(rng, static_cast<int>(rng.uniform(1, 4)), 9))
                                       : random_ratfun(rng, 3, 9);
      const int m = static_cast<int>(rng.uniform(3, 6));
      const BigRational c = rng.coin() ? BigRational(rng.uniform(1, 5)) : BigRational(-rng.uniform(1, 5));
      try {
        CHECK(tc0_construct(f, m, c).checks);
        ++checked;
      } catch (const DomainError&) {
        // inadmissible draw (g constant); skip it
      }
    }
    CHECK(checked == 50);
  }

  TEST_CASE("tan reductions") {
    const ReducedTanPoly two = tan_reduce({F("-z"), 1}, HaymanMode{2, 0});
    CHECK(two.expression == ExactRatFun::constant(-1));
    CHECK(count_tan_zeros(two).no_zeros);
    const ReducedTanPoly six = tan_reduce({F("-z"), 1}, HaymanMode{6, 1});
    CHECK(six.poly.monic() == N("z^2*(z - 1)*(z + 1)*(z^2 + 1)"));
    // t = -tan(a^4 z) is tan(b z) with b = -a^4.
    const ReducedTanPoly four = tan_reduce({F("12 + z"), -20736}, HaymanMode{4, 0});
    CHECK(four.expression(BigRational(1)) == -12911);
    CHECK_THROWS_AS((void)tan_reduce({F("0"), 1}, HaymanMode{2, 0}), DomainError);
  }

  TEST_CASE("root classification") {
    const RootSet a = find_roots(N("z^2 - 1"));
    REQUIRE(a.entries.size() == 2);
    for (const auto& e : a.entries) {
      CHECK(e.cls == RootClass::Real);
      CHECK(e.multiplicity == 1);
    }
    const RootSet b = find_roots(N("z^3 - 1"));
    int real = 0, pair = 0;
    for (const auto& e : b.entries) {
      if (e.cls == RootClass::Real) {
        ++real;
        CHECK(std::abs(e.value.to_double() - std::complex<double>(1, 0)) < 1e-15);
      } else {
        ++pair;
        CHECK(std::abs(e.value.to_double().real() + 0.5) < 1e-15);
        CHECK(std::abs(std::abs(e.value.to_double().imag()) - std::sqrt(3.0) / 2) < 1e-15);
      }
    }
    CHECK(real == 1);
    CHECK(pair == 2);
    const RootSet c = find_roots(product_expr(F("(2*z^2 + 8*z + 3)/(5*z + 3)"), 2, 1).num());
    int zero_mult = 0, others_real = 0, nonreal = 0;
    for (const auto& e : c.entries) {
      if (e.cls != RootClass::Real) ++nonreal;
      else if (e.value.re == 0) zero_mult = e.multiplicity;
      else others_real += e.multiplicity;
    }
    CHECK(zero_mult == 3);
    CHECK(others_real == 3);
    CHECK(nonreal == 0);
  }

  TEST_CASE("distinct counts") {
    CHECK(counts("z^5 + 1").real_distinct == 1);
    CHECK(counts("z^5 + 1").nonreal_distinct == 4);
    CHECK(counts("256*z^4 - 256*z^3").real_distinct == 2);
    CHECK(counts("256*z^4 - 256*z^3").nonreal_distinct == 0);
    CHECK(counts("z^3 - 1").real_distinct == 1);
    CHECK(counts("z^3 - 1").nonreal_distinct == 2);
  }

  TEST_CASE("excluding zeros of f") {
    CHECK(exclude_zeros_of(N("z^3*(z - 1)"), N("z")).monic() == N("z - 1"));
    CHECK(exclude_zeros_of(N("z^2 - 1"), N("z - 1")) == N("z + 1"));
    // z^5 + z^2 = z^2 (z + 1)(z^2 - z + 1) shares 0 and -1 with z^2 + z.
    CHECK(exclude_zeros_of(N("z^5 + z^2"), N("z^2 + z")).monic() == N("z^2 - z + 1"));
  }

  TEST_CASE("bound checks") {
    const BoundReport a = check_bound(TheoremId::ThmRat, F("1/z"), 5, 0);
    CHECK(a.required_nonreal_min == 2);
    CHECK(a.observed_nonreal == 2);
    CHECK(a.pass);
    const BoundReport b = check_bound(TheoremId::Thm4Pol, F("z"), 2, 1);
    CHECK(b.required_nonreal_min == 0);
    CHECK(b.required_real_max == std::optional<int>(2));
    CHECK(b.observed_nonreal == 0);
    CHECK(b.observed_real == 2);
    CHECK(b.pass);
    const BoundReport c = check_bound(TheoremId::Cor1, F("z"), 5, 0);
    CHECK(c.required_nonreal_min == 3);
    CHECK(c.observed_nonreal == 4);
    CHECK(c.pass);
  }

  TEST_CASE("zero census") {
    const ZeroCensus a = zero_census(N("z^3 - z"));
    CHECK(a.K == 2);
    CHECK(a.L == 1);
    CHECK(a.M == 0);
    CHECK(a.N == 0);
    CHECK(a.P == 0);
    CHECK(a.inequality_L());
    CHECK(a.inequality_d(3));
    const ZeroCensus b = zero_census(N("z^2"));
    CHECK((b.K == 0 && b.L == 0 && b.M == 0 && b.N == 1 && b.P == 0));
    const ZeroCensus c = zero_census(N("z^2 + 1"));
    CHECK((c.K == 0 && c.L == 0 && c.M == 0 && c.N == 0 && c.P == 2));
  }

  TEST_CASE("Rolle interlacing") {
    CHECK(rolle_interlace_check(F("z^2 - 2"), 1));
    CHECK(rolle_interlace_check(F("z^3 - 3*z"), 1));
    CHECK(rolle_interlace_check(F("1/z"), 1));
  }

  TEST_CASE("auxiliary maps") {
    CHECK(build_F(F("z"), 2).map == F("z - 1/z"));
    const AuxMap deg = build_F(F("1/z"), 2);
    CHECK(deg.map == F("0"));
    CHECK(deg.degenerate);
    CHECK(build_F(F("z"), 3).map == F("z - 4/z^2"));
    CHECK(build_G(F("z"), 2) == F("z - z^3/3"));
    CHECK(build_G(F("-z"), 2) == F("z + z^3/3"));
    CHECK(build_G(F("z^2"), 2) == F("z - z^6/3"));
  }

  TEST_CASE("multiple fixed points") {
    const auto a = parabolic_points(F("z - z^3/3"));
    REQUIRE(a.size() == 1);
    CHECK(a[0].location.to_double() == std::complex<double>(0, 0));
    CHECK(a[0].multiplicity == 3);
    CHECK(a[0].petal_count() == 2);
    const auto b = parabolic_points(build_F(F("z"), 2).map);
    REQUIRE(b.size() == 1);
    CHECK(b[0].at_infinity);
    CHECK(b[0].multiplicity == 3);
    const auto c = parabolic_points(build_G(F("z*(z - 1)"), 2));
    REQUIRE(c.size() == 2);
    for (const auto& p : c) CHECK(p.multiplicity == 3);
  }

  TEST_CASE("predicted angles") {
    CHECK(angles_are(parabolic_points(F("z - z^3/3"))[0].predicted_angles, {0.0, pi}));
    CHECK(angles_are(parabolic_points(F("z + z^3/3"))[0].predicted_angles, {pi / 2, 3 * pi / 2}));
    const auto inf = parabolic_points(build_F(F("z"), 5).map);
    REQUIRE(inf.size() == 1);
    CHECK(inf[0].petal_count() == 5);
    CHECK(real_direction_count(inf[0].predicted_angles) <= 1);
  }

  TEST_CASE("critical points") {
    const RootCounts a = classify_and_count(critical_points(F("z - z^3/3")));
    CHECK((a.real_distinct == 2 && a.nonreal_distinct == 0));
    const RootCounts b = classify_and_count(critical_points(F("z + z^3/3")));
    CHECK((b.real_distinct == 0 && b.nonreal_distinct == 2));
    const RootSet c = critical_points(build_F(F("z"), 3).map);
    for (const auto& e : c.entries) CHECK(std::abs(std::pow(e.value.to_double(), 3) + 8.0) < 1e-12);
    CHECK(c.entries.size() == 3);
    CHECK(critical_points(F("z + 1")).entries.empty());
    CHECK_THROWS_AS((void)critical_points(F("3")), DomainError);
  }

  TEST_CASE("orbit assignments") {
    const ExactRatFun minus = F("z - z^3/3");
    const auto pm = parabolic_points(minus);
    const PetalAssignment a = orbit_to_petal(minus, 1.0, pm, OrbitCaps{});
    const PetalAssignment b = orbit_to_petal(minus, -1.0, pm, OrbitCaps{});
    REQUIRE(a.outcome == OrbitOutcome::Petal);
    REQUIRE(b.outcome == OrbitOutcome::Petal);
    CHECK(angle_distance(*a.measured_angle, 0.0) < 0.05);
    CHECK(angle_distance(*b.measured_angle, pi) < 0.05);
    const ExactRatFun plus = F("z + z^3/3");
    const auto pp = parabolic_points(plus);
    const PetalAssignment c = orbit_to_petal(plus, {0, 1}, pp, OrbitCaps{});
    REQUIRE(c.outcome == OrbitOutcome::Petal);
    CHECK(angle_distance(*c.measured_angle, pi / 2) < 0.05);
    // z + 1/z^2 has a pole at 0, so an orbit started there stops at once.
    const ExactRatFun pole = F("z + 1/z^2");
    const PetalAssignment d = orbit_to_petal(pole, 0.0, parabolic_points(pole), OrbitCaps{});
    CHECK(d.outcome == OrbitOutcome::Undetermined);
    CHECK(d.reason == "pole hit");
  }

  TEST_CASE("petal summaries") {
    const ExactRatFun minus = F("z - z^3/3");
    const auto pm = parabolic_points(minus);
    const PetalSummary s = petal_report(
        pm, {orbit_to_petal(minus, 1.0, pm, OrbitCaps{}), orbit_to_petal(minus, -1.0, pm, OrbitCaps{})});
    CHECK(s.points[0].real_direction_petals == 2);
    CHECK(s.points[0].populated_petals == 2);
    const ExactRatFun plus = F("z + z^3/3");
    const auto pp = parabolic_points(plus);
    const PetalSummary t = petal_report(
        pp, {orbit_to_petal(plus, {0, 1}, pp, OrbitCaps{}), orbit_to_petal(plus, {0, -1}, pp, OrbitCaps{})});
    CHECK(t.points[0].real_direction_petals == 0);
    CHECK(t.points[0].populated_petals == 2);
  }
}

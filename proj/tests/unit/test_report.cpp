#include <doctest.h>

#include "report/examples.hpp"
#include "report/json_report.hpp"
#include "theorems/bounds.hpp"

using namespace rzlab;

TEST_SUITE("report") {
  TEST_CASE("closed-form examples") {
    for (const ExampleResult& r : run_examples()) {
      CAPTURE(r.id);
      CHECK(!r.sub_checks.empty());
      for (const auto& s : r.sub_checks) {
        CAPTURE(s.name);
        CAPTURE(s.observed);
        CHECK(s.pass);
      }
    }
  }

  TEST_CASE("constants") {
    PrecisionScope scope(128);
    CHECK(abs(sqrt2_constant() * sqrt2_constant() - 2) < MpReal(1e-35));
    const MpReal a = example6_a_constant();
    CHECK(abs(5 * pow(a, 4) - 10 * a * a + 1) < MpReal(1e-35));
  }

  TEST_CASE("bound report layout") {
    const BoundReport r = check_bound(TheoremId::ThmRat, ExactRatFun::identity().reciprocal(), 5, 0);
    const Json j = bound_report_json(r, false);
    CHECK(j["theorem"] == "thm_rat");
    CHECK(j["required"]["nonreal_min"] == 2);
    CHECK(j["observed"]["nonreal"] == 2);
    CHECK(j["pass"] == true);
    CHECK_FALSE(j.contains("roots"));
    CHECK(bound_report_json(r, true).contains("roots"));
  }

  TEST_CASE("error objects and schema") {
    const Json e = error_json("parse", "unexpected token", 3);
    CHECK(e["schema"] == 1);
    CHECK(e["error"]["kind"] == "parse");
    CHECK(e["error"]["position"] == 3);
    CHECK(with_schema(Json{{"a", 1}})["schema"] == 1);
    const std::string text = dump(Json{{"a", 1}});
    CHECK(text.back() == '\n');
  }

  TEST_CASE("stable doubles") {
    CHECK(stable_double(0.1 + 0.2) == 0.3);
    CHECK(stable_double(-1e-15) == 0.0);
  }
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "exactalg/parse.hpp"
#include "petals/basin.hpp"
#include "petals/petals.hpp"

using namespace rzlab;

namespace {
constexpr double pi = std::numbers::pi;

bool same_angles(std::vector<double> got, std::vector<double> want) {
  if (got.size() != want.size()) return false;
  for (double w : want) {
    bool hit = false;
    for (double g : got) hit = hit || angle_distance(g, w) < 1e-9;
    if (!hit) return false;
  }
  return true;
}
}  // namespace

TEST_SUITE("petals") {
  TEST_CASE("angle distance wraps") {
    CHECK(angle_distance(0.1, 2 * pi - 0.1) == doctest::Approx(0.2));
    CHECK(angle_distance(pi, -pi) == doctest::Approx(0.0));
  }

  TEST_CASE("G for g = z and n = 2") {
    const ExactRatFun G = build_G(ExactRatFun::identity(), 2);
    CHECK(G == parse_function("z - z^3/3"));
    const auto pts = parabolic_points(G);
    // Infinity is superattracting for a polynomial, so only 0 is parabolic.
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].multiplicity == 3);
    CHECK(same_angles(pts[0].predicted_angles, {0.0, pi}));
    CHECK(real_direction_count(pts[0].predicted_angles) == 2);
  }

  TEST_CASE("orbits of z - z^3/3 and z + z^3/3") {
    for (const auto& [text, starts, want] :
         std::vector<std::tuple<std::string, std::vector<std::complex<double>>, std::vector<double>>>{
             {"z - z^3/3", {1.0, -1.0}, {0.0, pi}},
             {"z + z^3/3", {{0, 1}, {0, -1}}, {pi / 2, 3 * pi / 2}}}) {
      const ExactRatFun map = parse_function(text);
      std::vector<ParabolicPoint> pts = parabolic_points(map);
      pts.erase(std::remove_if(pts.begin(), pts.end(), [](const ParabolicPoint& p) { return p.at_infinity; }),
                pts.end());
      REQUIRE(pts.size() == 1);
      CHECK(same_angles(pts[0].predicted_angles, want));
      const PetalAssignment a = orbit_to_petal(map, starts[0], pts, OrbitCaps{});
      const PetalAssignment b = orbit_to_petal(map, starts[1], pts, OrbitCaps{});
      REQUIRE(a.outcome == OrbitOutcome::Petal);
      REQUIRE(b.outcome == OrbitOutcome::Petal);
      CHECK(a.petal_index != b.petal_index);
      CHECK(angle_distance(*a.measured_angle, pts[0].predicted_angles[a.petal_index - 1]) < 0.05);
      const PetalSummary s = petal_report(pts, {a, b});
      CHECK(s.points[0].populated_petals == 2);
      CHECK(s.points[0].empty_petals.empty());
    }
  }

  TEST_CASE("F at infinity for polynomial f") {
    const ExactRatFun f = parse_function("z^2 - 3");
    for (int m : {2, 3, 5}) {
      const AuxMap F = build_F(f, m);
      CHECK_FALSE(F.degenerate);
      CHECK(fixed_point_multiplicity_at_infinity(F.map) == 2 * (m - 1) + 2);
    }
  }

  TEST_CASE("F for f = z with m = 3 has its petals populated") {
    const ExactRatFun map = build_F(ExactRatFun::identity(), 3).map;
    const auto pts = parabolic_points(map);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].at_infinity);
    CHECK(pts[0].multiplicity == 4);
    std::vector<PetalAssignment> as;
    for (const auto& e : critical_points(map).entries)
      as.push_back(orbit_to_petal(map, e.value.to_double(), pts, OrbitCaps{}));
    const PetalSummary s = petal_report(pts, as);
    CHECK(s.points[0].populated_petals == 3);
    CHECK(s.points[0].real_direction_ok);
  }

  TEST_CASE("non-parabolic map has no multiple fixed points") {
    CHECK(parabolic_points(parse_function("z^2 + 1/4 + z/2")).size() == 0);
  }

  TEST_CASE("basin raster") {
    const ExactRatFun map = parse_function("z - z^3/3");
    const auto pts = parabolic_points(map);
    const BasinRaster r = render_basin(map, pts, BasinGrid{0.0, 2.0, 2.0, 48}, basin_caps());
    CHECK(r.width_px == 48);
    CHECK(r.rgb.size() == static_cast<std::size_t>(3 * r.width_px * r.height_px));
    long petal = 0;
    for (long v : r.petal_pixels) petal += v;
    CHECK(petal > 0);
    CHECK(r.real_axis_samples == 48);
    const auto ppm = to_ppm(r);
    CHECK(ppm[0] == 'P');
    CHECK(ppm[1] == '6');
    CHECK(petal_colour(0) != petal_colour(1));
  }
}

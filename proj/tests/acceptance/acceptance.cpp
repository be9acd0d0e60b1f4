// Acceptance run: one line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "diffpoly/diffpoly.hpp"
#include "diffpoly/tanfun.hpp"
#include "exactalg/parse.hpp"
#include "exactalg/sturm.hpp"
#include "petals/petals.hpp"
#include "report/examples.hpp"
#include "rootlab/roots.hpp"
#include "theorems/fuzz.hpp"
#include "theorems/generators.hpp"

using namespace rzlab;

namespace {

using Clock = std::chrono::steady_clock;

ExactPoly P(std::vector<BigRational> c) { return ExactPoly(std::move(c)); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Runs a criterion, adds the elapsed time to the detail and enforces the limit.
bool run(int id, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = seconds_since(t0);
  const bool in_time = limit_s <= 0 || dt < limit_s;
  const bool pass = o.pass && in_time;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " (" << dt << " s";
  if (limit_s > 0) line << " of " << limit_s << " s";
  line << ") " << o.detail;
  if (!in_time) line << "; time limit exceeded";
  std::puts(line.str().c_str());
  std::fflush(stdout);
  return pass;
}

Outcome criterion_1() {
  std::string detail;
  bool ok = true;
  auto timed = [&](const char* name, const std::function<bool()>& f) {
    const auto t0 = Clock::now();
    const bool r = f();
    const double dt = seconds_since(t0);
    ok = ok && r && dt < 1.0;
    std::ostringstream s;
    s.precision(3);
    s << name << "=" << (r ? "exact" : "mismatch") << "/" << dt << "s ";
    detail += s.str();
  };
  timed("hayman(-16z^2+8z+2,2,-12)", [] {
    return hayman_expr(ExactRatFun(P({2, 8, -16})), 2, -12) == ExactRatFun(P({0, 0, 0, -256, 256}));
  });
  timed("hayman(1/z,4,0)", [] {
    return hayman_expr(ExactRatFun::identity().reciprocal(), 4, 0) ==
           ExactRatFun::normalize(P({1, 0, -1}), P({0, 0, 0, 0, 1}));
  });
  timed("tan_reduce(-tan z,6,1)", [] {
    const ReducedTanPoly red = tan_reduce({ExactRatFun(P({0, -1})), 1}, HaymanMode{6, 1});
    return red.poly.monic() == P({0, 0, 1}) * P({-1, 1}) * P({1, 1}) * P({1, 0, 1});
  });
  return {ok, detail};
}

Outcome criterion_2() {
  // f = 12 - tan(12^4 z) = 12 + tan(b z) with b = -12^4.
  const BigRational a = 12;
  const TanFun f{ExactRatFun(P({a, 1})), -(a * a * a * a)};
  const ReducedTanPoly w = tan_reduce(f, HaymanMode{4, 0});
  const BigRational at1 = w.expression(BigRational(1));
  const int real = sturm_distinct_real_roots(w.poly);
  return {at1 == -12911 && real == 4 && w.poly.deg() == 4,
          "w(1)=" + at1.get_str() + " sturm_real=" + std::to_string(real)};
}

Outcome criterion_3() {
  const ExampleResult ex = example_6();
  bool coeffs = false, disc = false;
  std::string detail;
  for (const auto& s : ex.sub_checks) {
    if (s.name == "quintic coefficients") {
      coeffs = s.pass;
      detail += "max_deviation=" + s.observed + " ";
    }
    if (s.name.rfind("25a^2", 0) == 0) {
      disc = s.pass;
      detail += "discriminant=" + s.observed + " ";
    }
    if (s.name == "a") detail += "a=" + s.observed + " ";
  }
  return {coeffs && disc, detail};
}

Outcome criterion_4() {
  const ExactRatFun g = ExactRatFun::normalize(P({3, 8, 2}), P({3, 5}));
  const ExactPoly num = product_expr(g, 2, 1).num();
  int mult0 = 0;
  for (const auto& [factor, s] : squarefree_decompose(num))
    if (factor == ExactPoly::identity()) mult0 = s;
  const ExactPoly sf = squarefree_part(num);
  const int sturm = sturm_distinct_real_roots(sf);
  const int nonreal = sf.deg() - sturm;
  return {mult0 == 3 && sturm == sf.deg() && nonreal == 0,
          "mult(0)=" + std::to_string(mult0) + " distinct=" + std::to_string(sf.deg()) +
              " sturm_real=" + std::to_string(sturm) + " nonreal=" + std::to_string(nonreal)};
}

std::string summary(const FuzzResult& r) {
  return r.suite + ":" + std::to_string(r.instances) + "/" + std::to_string(r.violations) + "v/" +
         std::to_string(r.unresolved) + "u ";
}

Outcome criterion_5() {
  FuzzConfig cfg;
  cfg.solve.precision_bits = 128;
  bool ok = true;
  std::string detail;
  for (const char* suite : {"thm_rat", "thm4pol", "thm9_rat"}) {
    const FuzzResult r = run_fuzz(suite, cfg);
    ok = ok && r.violations == 0 && r.unresolved == 0 && r.instances > 0;
    detail += summary(r);
  }
  return {ok, detail + "(instances/violations/unresolved)"};
}

Outcome criterion_6() {
  FuzzConfig cfg;
  const FuzzResult r = run_fuzz("oracle", cfg);
  return {r.instances == 500 && r.violations == 0 && r.unresolved == 0, summary(r)};
}

Outcome criterion_7() {
  constexpr double pi = std::numbers::pi;
  std::string detail;
  bool ok = true;
  struct Case {
    const char* map;
    std::complex<double> a, b;
    std::vector<double> angles;
  };
  for (const Case& c : {Case{"z - z^3/3", 1.0, -1.0, {0.0, pi}},
                        Case{"z + z^3/3", {0, 1}, {0, -1}, {pi / 2, 3 * pi / 2}}}) {
    const ExactRatFun map = parse_function(c.map);
    std::vector<ParabolicPoint> pts;
    for (const auto& p : parabolic_points(map))
      if (!p.at_infinity) pts.push_back(p);
    bool point_ok = pts.size() == 1 && pts[0].predicted_angles.size() == 2;
    if (point_ok)
      for (double w : c.angles) {
        bool hit = false;
        for (double g : pts[0].predicted_angles) hit = hit || angle_distance(g, w) < 1e-12;
        point_ok = point_ok && hit;
      }
    double worst = 0;
    if (point_ok) {
      const PetalAssignment x = orbit_to_petal(map, c.a, pts, OrbitCaps{});
      const PetalAssignment y = orbit_to_petal(map, c.b, pts, OrbitCaps{});
      point_ok = x.outcome == OrbitOutcome::Petal && y.outcome == OrbitOutcome::Petal &&
                 x.petal_index != y.petal_index;
      if (point_ok) {
        for (const auto* a : {&x, &y})
          worst = std::max(worst, angle_distance(*a->measured_angle, pts[0].predicted_angles[a->petal_index - 1]));
        point_ok = worst <= 0.05;
      }
    }
    ok = ok && point_ok;
    std::ostringstream s;
    s.precision(3);
    s << "[" << c.map << ": " << (point_ok ? "ok" : "bad") << ", angle error " << worst << "] ";
    detail += s.str();
  }
  // Multiplicity at infinity of F for polynomial f of degree d.
  InstanceRng rng(derive_seed(7, 77));
  int checked = 0, matched = 0;
  for (int d = 1; d <= 3; ++d) {
    const ExactRatFun f(random_poly(rng, d, 10));
    for (int m : {2, 3, 5}) {
      ++checked;
      if (fixed_point_multiplicity_at_infinity(build_F(f, m).map) == d * (m - 1) + 2) ++matched;
    }
  }
  ok = ok && matched == checked;
  detail += "[F at infinity: " + std::to_string(matched) + "/" + std::to_string(checked) + " match d(m-1)+2]";
  return {ok, detail};
}

Outcome criterion_8() {
  FuzzConfig cfg;
  const FuzzResult r = run_fuzz("petals", cfg);
  int points = 0;
  for (const auto& rec : r.report["records"])
    if (rec.contains("points")) points += static_cast<int>(rec["points"].size());
  return {r.violations == 0 && r.unresolved == 0 && points > 0,
          summary(r) + "parabolic points examined=" + std::to_string(points)};
}

Outcome criterion_9() {
  FuzzConfig cfg;
  const FuzzResult r = run_fuzz("negative_controls", cfg);
  std::string detail = summary(r);
  bool ok = r.violations == 0 && r.instances == 2;
  for (const auto& rec : r.report["records"]) {
    detail += "[" + rec["control"].get<std::string>() + ": nonreal=" +
              std::to_string(rec["report"]["observed"]["nonreal"].get<int>()) + "] ";
    ok = ok && rec["report"]["observed"]["nonreal"] == 0;
  }
  return {ok, detail};
}

}  // namespace

int main() {
  bool all = true;
  all &= run(1, 3.0, criterion_1);
  all &= run(2, 1.0, criterion_2);
  all &= run(3, 1.0, criterion_3);
  all &= run(4, 1.0, criterion_4);
  all &= run(5, 60.0, criterion_5);
  all &= run(6, 30.0, criterion_6);
  all &= run(7, 120.0, criterion_7);
  all &= run(8, 0, criterion_8);
  all &= run(9, 0, criterion_9);
  std::puts(all ? "acceptance: all criteria passed" : "acceptance: FAILED");
  return all ? 0 : 1;
}

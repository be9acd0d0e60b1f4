#include "theorems/fuzz.hpp"

#include <cmath>
#include <functional>

#include "core/error.hpp"
#include "diffpoly/diffpoly.hpp"
#include "exactalg/sturm.hpp"
#include "theorems/bounds.hpp"
#include "theorems/census.hpp"
#include "theorems/generators.hpp"

namespace rzlab {

namespace {

// Accumulates instance records for one suite.
class Campaign {
 public:
  Campaign(std::string suite, const FuzzConfig& config) : config_(config) {
    result_.suite = std::move(suite);
  }

  const FuzzConfig& config() const { return config_; }

  void record(Json instance, bool violation) {
    instance["violation"] = violation;
    ++result_.instances;
    if (violation) ++result_.violations;
    instances_.push_back(std::move(instance));
  }

  void record_unresolved(Json instance, const NumericError& e) {
    instance["unresolved"] = e.what();
    ++result_.instances;
    ++result_.unresolved;
    instances_.push_back(std::move(instance));
  }

  void diagnostic(Json d) { diagnostics_.push_back(std::move(d)); }

  FuzzResult finish(int trials) {
    Json j;
    j["suite"] = result_.suite;
    j["seed"] = config_.seed;
    j["trials"] = trials;
    j["instances"] = result_.instances;
    j["violations"] = result_.violations;
    j["unresolved"] = result_.unresolved;
    j["records"] = std::move(instances_);
    if (!diagnostics_.empty()) j["diagnostics"] = std::move(diagnostics_);
    result_.report = std::move(j);
    return std::move(result_);
  }

 private:
  const FuzzConfig& config_;
  FuzzResult result_;
  Json instances_ = Json::array();
  Json diagnostics_ = Json::array();
};

BoundOptions bound_options(const FuzzConfig& config) {
  BoundOptions o;
  o.solve = config.solve;
  o.max_bits = config.max_bits;
  return o;
}

// Runs one bound check and records it; returns the report when resolved.
std::optional<BoundReport> bound_instance(Campaign& camp, int trial, TheoremId id, const ExactRatFun& fn,
                                          int k, const BigRational& c,
                                          const std::function<bool(const BoundReport&)>& extra_ok = {}) {
  Json base{{"trial", trial}, {"input", to_expression(fn)}};
  try {
    BoundReport r = check_bound(id, fn, k, c, bound_options(camp.config()));
    bool ok = r.pass && (!extra_ok || extra_ok(r));
    base["report"] = bound_report_json(r, camp.config().include_roots);
    camp.record(std::move(base), !ok);
    return r;
  } catch (const NumericError& e) {
    base["theorem"] = theorem_name(id);
    base["k"] = k;
    base["c"] = c.get_str();
    camp.record_unresolved(std::move(base), e);
    return std::nullopt;
  }
}

int trials_for(const std::string& suite, const FuzzConfig& config) {
  return config.trials > 0 ? config.trials : default_trials(suite);
}

InstanceRng suite_rng(const FuzzConfig& config, std::uint64_t label) {
  return InstanceRng(derive_seed(config.seed, label));
}

FuzzResult suite_thm_rat(const FuzzConfig& config) {
  Campaign camp("thm_rat", config);
  InstanceRng rng = suite_rng(config, 1);
  const int trials = trials_for("thm_rat", config);
  for (int t = 0; t < trials; ++t) {
    const ExactRatFun f(random_poly(rng, static_cast<int>(rng.uniform(1, 4)), 20));
    for (int m : {5, 6, 7}) bound_instance(camp, t, TheoremId::ThmRat, f, m, 0);
  }
  return camp.finish(trials);
}

FuzzResult suite_thm4pol(const FuzzConfig& config) {
  Campaign camp("thm4pol", config);
  InstanceRng rng = suite_rng(config, 2);
  const int trials = trials_for("thm4pol", config);
  // The census-refined bound applies to even n; the inequalities always.
  auto census_ok = [](const BoundReport& r) {
    if (!r.census) return false;
    if (!r.census->inequality_L() || !r.census->inequality_d(r.d)) return false;
    return !r.census_nonreal_min || r.observed_nonreal >= *r.census_nonreal_min;
  };
  for (int t = 0; t < trials; ++t) {
    const ExactRatFun g(random_poly(rng, static_cast<int>(rng.uniform(1, 5)), 20));
    for (int n : {2, 3, 4})
      for (int c : {1, -2}) bound_instance(camp, t, TheoremId::Thm4Pol, g, n, c, census_ok);
  }
  return camp.finish(trials);
}

FuzzResult suite_thm9_rat(const FuzzConfig& config) {
  Campaign camp("thm9_rat", config);
  InstanceRng rng = suite_rng(config, 3);
  const int trials = trials_for("thm9_rat", config);
  for (int t = 0; t < trials; ++t) {
    const ExactRatFun f = random_ratfun(rng, 3, 10);
    for (int m : {6, 7})
      for (int c : {1, -1}) bound_instance(camp, t, TheoremId::Thm9Rat, f, m, c);
  }
  return camp.finish(trials);
}

FuzzResult suite_cor_crat(const FuzzConfig& config) {
  Campaign camp("cor_crat", config);
  InstanceRng rng = suite_rng(config, 4);
  const int trials = trials_for("cor_crat", config);
  for (int t = 0; t < trials; ++t) {
    const ExactRatFun g = random_ratfun(rng, 3, 10);
    for (int n : {3, 4})
      for (int c : {1, -2}) bound_instance(camp, t, TheoremId::CorCRat, g, n, c);
  }
  return camp.finish(trials);
}

FuzzResult suite_cor1(const FuzzConfig& config) {
  Campaign camp("cor1", config);
  InstanceRng rng = suite_rng(config, 5);
  const int trials = trials_for("cor1", config);
  for (int t = 0; t < trials; ++t) {
    const ExactRatFun f(random_poly(rng, static_cast<int>(rng.uniform(1, 4)), 20));
    for (int m : {2, 3, 5}) bound_instance(camp, t, TheoremId::Cor1, f, m, 0);
  }
  return camp.finish(trials);
}

FuzzResult suite_oracle(const FuzzConfig& config) {
  Campaign camp("oracle", config);
  InstanceRng rng = suite_rng(config, 6);
  const int trials = trials_for("oracle", config);
  for (int t = 0; t < trials; ++t) {
    const ExactPoly p = t % 4 == 3 ? random_poly_with_repeats(rng, 8, 100)
                                   : random_poly(rng, static_cast<int>(rng.uniform(1, 8)), rng.uniform(1, 100));
    Json rec{{"trial", t}, {"input", to_expression(p)}};
    try {
      const RootSet roots = find_roots_escalating(p, config.solve, config.max_bits);
      const RootCounts counts = classify_and_count(roots);
      const int sturm = sturm_distinct_real_roots(p);
      const int sf_degree = squarefree_part(p).deg();
      int mult_sum = 0;
      for (const auto& e : roots.entries) mult_sum += e.multiplicity;
      rec["numeric_real"] = counts.real_distinct;
      rec["sturm_real"] = sturm;
      rec["nonreal"] = counts.nonreal_distinct;
      rec["squarefree_degree"] = sf_degree;
      const bool ok = counts.real_distinct == sturm && counts.real_distinct + counts.nonreal_distinct == sf_degree &&
                      mult_sum == p.deg() && counts.nonreal_distinct % 2 == 0;
      camp.record(std::move(rec), !ok);
    } catch (const NumericError& e) {
      camp.record_unresolved(std::move(rec), e);
    }
  }
  return camp.finish(trials);
}

FuzzResult suite_census(const FuzzConfig& config) {
  Campaign camp("census", config);
  InstanceRng rng = suite_rng(config, 7);
  const int trials = trials_for("census", config);
  for (int t = 0; t < trials; ++t) {
    const ExactPoly g = t % 2 == 1 ? random_poly_with_repeats(rng, 6, 20)
                                   : random_poly(rng, static_cast<int>(rng.uniform(1, 6)), 20);
    const ZeroCensus c = zero_census(g);
    camp.record(Json{{"trial", t}, {"input", to_expression(g)}, {"census", census_json(c, g.deg())}},
                !c.inequality_L() || !c.inequality_d(g.deg()));
  }
  return camp.finish(trials);
}

bool near(const MpComplex& a, const MpComplex& b) {
  return (a - b).abs() <= MpReal(1e-15) * (1 + b.abs());
}

// Expected finite multiple fixed points (location, multiplicity) against
// those found; every expected point must appear once with its multiplicity
// and nothing else may appear.
bool finite_points_match(const std::vector<ParabolicPoint>& points,
                         const std::vector<std::pair<MpComplex, int>>& expected) {
  std::size_t finite = 0;
  for (const auto& p : points) finite += p.at_infinity ? 0 : 1;
  if (finite != expected.size()) return false;
  for (const auto& [loc, mu] : expected) {
    int hits = 0;
    for (const auto& p : points)
      if (!p.at_infinity && near(p.location, loc) && p.multiplicity == mu) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

Json points_json(const std::vector<ParabolicPoint>& points) {
  Json a = Json::array();
  for (const auto& p : points) a.push_back(parabolic_point_json(p));
  return a;
}

bool real_direction_law(const std::vector<ParabolicPoint>& points) {
  for (const auto& p : points) {
    const int real = real_direction_count(p.predicted_angles);
    if (real > (p.petal_count() % 2 == 1 ? 1 : 2)) return false;
  }
  return true;
}

// Iterates every critical orbit and reports unpopulated petals as a
// diagnostic; conjugate equivariance of the assignments is a property.
bool population_check(Campaign& camp, int trial, const ExactRatFun& map,
                      const std::vector<ParabolicPoint>& points) {
  const RootSet crit = critical_points(map, camp.config().solve);
  const NumericMap numeric(map);
  std::vector<PetalAssignment> assignments;
  Json orbits = Json::array();
  for (const auto& e : crit.entries) {
    assignments.push_back(orbit_to_petal(numeric, e.value.to_double(), points, camp.config().caps));
    orbits.push_back(assignment_json(assignments.back()));
  }
  bool equivariant = true;
  for (std::size_t i = 0; i < crit.entries.size(); ++i) {
    const auto& partner = crit.entries[i].partner;
    if (!partner) continue;
    const auto& a = assignments[i];
    const auto& b = assignments[*partner];
    if (a.outcome != b.outcome) {
      equivariant = false;
      continue;
    }
    if (a.outcome != OrbitOutcome::Petal) continue;
    const auto& pa = points[static_cast<std::size_t>(a.point_index)];
    const auto& pb = points[static_cast<std::size_t>(b.point_index)];
    const bool mirrored_point = pa.at_infinity ? pb.at_infinity : (!pb.at_infinity && near(pb.location, pa.location.conj()));
    if (!mirrored_point || angle_distance(*a.measured_angle, -*b.measured_angle) > 1e-9) equivariant = false;
  }
  const PetalSummary summary = petal_report(points, assignments);
  Json d{{"trial", trial},
         {"map", to_expression(map)},
         {"orbits", std::move(orbits)},
         {"summary", petal_summary_json(summary)},
         {"conjugate_equivariant", equivariant}};
  bool all_populated = true;
  for (const auto& s : summary.points) all_populated = all_populated && s.empty_petals.empty();
  d["all_petals_populated"] = all_populated;
  camp.diagnostic(std::move(d));
  return equivariant;
}

FuzzResult suite_petals(const FuzzConfig& config) {
  Campaign camp("petals", config);
  InstanceRng rng = suite_rng(config, 8);
  const int trials = trials_for("petals", config);
  int populated_maps = 0;
  for (int t = 0; t < trials; ++t) {
    // Zeros of g of multiplicity s are fixed points of G of multiplicity s(n+1).
    {
      const ExactPoly g = random_poly_with_repeats(rng, 3, 10);
      const int n = static_cast<int>(rng.uniform(2, 3));
      const ExactRatFun G = build_G(ExactRatFun(g), n);
      Json rec{{"trial", t}, {"law", "G zero multiplicity"}, {"g", to_expression(g)}, {"n", n}};
      try {
        const auto points = parabolic_points(G, config.solve);
        std::vector<std::pair<MpComplex, int>> expected;
        for (const auto& [factor, s] : squarefree_decompose(g))
          for (const auto& e : find_roots(factor, config.solve).entries) expected.emplace_back(e.value, s * (n + 1));
        const bool law = finite_points_match(points, expected);
        const bool dir = real_direction_law(points);
        bool equivariant = true;
        if (populated_maps < config.population_maps && g.deg() <= 2) {
          ++populated_maps;
          equivariant = population_check(camp, t, G, points);
        }
        rec["points"] = points_json(points);
        rec["multiplicity_law"] = law;
        rec["real_direction_law"] = dir;
        rec["conjugate_equivariant"] = equivariant;
        camp.record(std::move(rec), !(law && dir && equivariant));
      } catch (const NumericError& e) {
        camp.record_unresolved(std::move(rec), e);
      }
    }
    // A pole of f of multiplicity s gives a fixed point of F of
    // multiplicity s(m-1) at (m-1) times the pole.
    {
      const ExactRatFun f = random_ratfun_with_multiple_pole(rng, 10);
      const int m = static_cast<int>(rng.uniform(2, 4));
      const AuxMap F = build_F(f, m);
      Json rec{{"trial", t}, {"law", "F pole multiplicity"}, {"f", to_expression(f)}, {"m", m}};
      if (F.degenerate || F.map.degree() < 2) {
        rec["skipped"] = "degenerate auxiliary map";
        camp.record(std::move(rec), false);
      } else {
        try {
          const auto points = parabolic_points(F.map, config.solve);
          std::vector<std::pair<MpComplex, int>> expected;
          for (const auto& [factor, s] : squarefree_decompose(f.den())) {
            if (s * (m - 1) < 2) continue;
            for (const auto& e : find_roots(factor, config.solve).entries)
              expected.emplace_back(MpComplex(e.value.re * (m - 1), e.value.im * (m - 1)), s * (m - 1));
          }
          const bool law = finite_points_match(points, expected);
          const bool dir = real_direction_law(points);
          rec["points"] = points_json(points);
          rec["multiplicity_law"] = law;
          rec["real_direction_law"] = dir;
          camp.record(std::move(rec), !(law && dir));
        } catch (const NumericError& e) {
          camp.record_unresolved(std::move(rec), e);
        }
      }
    }
    // Polynomial f of degree d: infinity has multiplicity d(m-1)+2 for F.
    {
      const int d = static_cast<int>(rng.uniform(1, 3));
      const ExactRatFun f(random_poly(rng, d, 10));
      const int m = std::array{2, 3, 5}[static_cast<std::size_t>(rng.uniform(0, 2))];
      const AuxMap F = build_F(f, m);
      const int mu = fixed_point_multiplicity_at_infinity(F.map);
      const auto points = parabolic_points(F.map, config.solve);
      const bool law = mu == d * (m - 1) + 2;
      const bool dir = real_direction_law(points);
      camp.record(Json{{"trial", t},
                       {"law", "F infinity multiplicity"},
                       {"f", to_expression(f)},
                       {"m", m},
                       {"multiplicity", mu},
                       {"expected", d * (m - 1) + 2},
                       {"points", points_json(points)},
                       {"real_direction_law", dir}},
                  !(law && dir));
    }
  }
  return camp.finish(trials);
}

FuzzResult suite_negative_controls(const FuzzConfig& config) {
  Campaign camp("negative_controls", config);
  BoundOptions o = bound_options(config);
  o.enforce_hypotheses = false;
  struct Control {
    const char* name;
    TheoremId id;
    ExactRatFun fn;
    int k;
    BigRational c;
  };
  const std::vector<Control> controls{
      {"rational g of degree 2 with n = 2", TheoremId::Thm4Pol,
       ExactRatFun::normalize(ExactPoly({3, 8, 2}), ExactPoly({3, 5})), 2, 1},
      {"polynomial f with m = 2, c = -12", TheoremId::Thm9Rat, ExactRatFun(ExactPoly({2, 8, -16})), 2, -12},
  };
  int i = 0;
  for (const auto& ctl : controls) {
    const BoundReport r = check_bound(ctl.id, ctl.fn, ctl.k, ctl.c, o);
    // Expected behaviour: no non-real zeros, so the stated bound fails.
    const bool as_predicted = r.observed_nonreal == 0 && !r.pass;
    camp.record(Json{{"trial", i++},
                     {"control", ctl.name},
                     {"input", to_expression(ctl.fn)},
                     {"expected_failure_confirmed", as_predicted},
                     {"report", bound_report_json(r, true)}},
                !as_predicted);
  }
  return camp.finish(static_cast<int>(controls.size()));
}

const std::vector<std::pair<std::string, std::function<FuzzResult(const FuzzConfig&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<FuzzResult(const FuzzConfig&)>>> r{
      {"thm_rat", suite_thm_rat},     {"thm4pol", suite_thm4pol},
      {"thm9_rat", suite_thm9_rat},   {"cor_crat", suite_cor_crat},
      {"cor1", suite_cor1},           {"oracle", suite_oracle},
      {"census", suite_census},       {"petals", suite_petals},
      {"negative_controls", suite_negative_controls},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& fuzz_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    v.emplace_back("all");
    return v;
  }();
  return names;
}

int default_trials(const std::string& suite) {
  if (suite == "thm_rat" || suite == "thm4pol" || suite == "census") return 200;
  if (suite == "thm9_rat" || suite == "cor_crat" || suite == "cor1") return 100;
  if (suite == "oracle") return 500;
  if (suite == "petals") return 30;
  return 1;
}

FuzzResult run_fuzz(const std::string& suite, const FuzzConfig& config) {
  if (suite == "all") {
    FuzzResult total;
    total.suite = "all";
    Json suites = Json::array();
    for (const auto& [name, fn] : registry()) {
      FuzzResult r = fn(config);
      total.instances += r.instances;
      total.violations += r.violations;
      total.unresolved += r.unresolved;
      suites.push_back(std::move(r.report));
    }
    total.report = Json{{"suite", "all"},
                        {"seed", config.seed},
                        {"instances", total.instances},
                        {"violations", total.violations},
                        {"unresolved", total.unresolved},
                        {"suites", std::move(suites)}};
    return total;
  }
  for (const auto& [name, fn] : registry())
    if (name == suite) return fn(config);
  throw DomainError("unknown fuzz suite '" + suite + "'");
}

}  // namespace rzlab

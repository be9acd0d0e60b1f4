#include "report/json_report.hpp"

#include <cmath>

namespace rzlab {

double stable_double(double x) {
  if (!std::isfinite(x)) return x;
  const double r = std::round(x * 1e12) / 1e12;
  return r == 0 ? 0.0 : r;
}

Json poly_json(const ExactPoly& p, const std::string& var) {
  return to_expression(p, var);
}

Json ratfun_json(const ExactRatFun& f, const std::string& var) {
  Json j;
  j["expression"] = to_expression(f, var);
  j["num"] = to_coefficient_list(f.num());
  j["den"] = to_coefficient_list(f.den());
  j["degree"] = f.degree();
  return j;
}

Json complex_json(const MpComplex& z) {
  return Json{{"re", format_mp(z.re)}, {"im", format_mp(z.im)}};
}

Json complex_json(std::complex<double> z) {
  return Json{{"re", stable_double(z.real())}, {"im", stable_double(z.imag())}};
}

Json root_set_json(const RootSet& roots) {
  Json entries = Json::array();
  for (const auto& e : roots.entries) {
    Json j = complex_json(e.value);
    j["multiplicity"] = e.multiplicity;
    j["class"] = e.cls == RootClass::Real ? "real" : "conjugate_pair";
    if (e.partner) j["partner"] = *e.partner;
    entries.push_back(std::move(j));
  }
  const RootCounts counts = classify_and_count(roots);
  Json j;
  j["source_degree"] = roots.source_degree;
  j["precision_bits"] = roots.precision_bits;
  j["real_distinct"] = counts.real_distinct;
  j["nonreal_distinct"] = counts.nonreal_distinct;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", roots.worst_relative_residual);
  j["worst_relative_residual"] = buf;
  j["entries"] = std::move(entries);
  return j;
}

Json bound_report_json(const BoundReport& r, bool include_roots) {
  Json j;
  j["theorem"] = theorem_name(r.theorem);
  j["d"] = r.d;
  j["degree_params"] = r.theorem == TheoremId::CorCRat || r.theorem == TheoremId::Thm4Pol
                           ? Json{{"n", r.m_or_n}}
                           : Json{{"m", r.m_or_n}};
  j["c"] = r.c.get_str();
  Json required;
  required["nonreal_min"] = r.required_nonreal_min;
  required["real_max"] = r.required_real_max ? Json(*r.required_real_max) : Json(nullptr);
  j["required"] = std::move(required);
  j["observed"] = Json{{"nonreal", r.observed_nonreal}, {"real", r.observed_real}};
  j["pass"] = r.pass;
  j["hypotheses_met"] = r.hypotheses_met;
  if (!r.hypotheses_met) j["failed_hypothesis"] = r.hypothesis_note;
  j["expression"] = to_expression(r.expression, "z");
  if (r.census) {
    j["census"] = census_json(*r.census, r.d);
    if (r.census_nonreal_min) {
      j["census_nonreal_min"] = *r.census_nonreal_min;
      j["census_bound_pass"] = r.observed_nonreal >= *r.census_nonreal_min;
    }
  }
  if (include_roots) j["roots"] = root_set_json(r.roots)["entries"];
  return j;
}

Json census_json(const ZeroCensus& c, std::optional<int> degree) {
  Json j{{"K", c.K}, {"L", c.L}, {"M", c.M}, {"N", c.N}, {"P", c.P}, {"inequality_L", c.inequality_L()}};
  if (degree) j["inequality_d"] = c.inequality_d(*degree);
  return j;
}

Json rolle_json(const RolleResult& r) {
  return Json{{"real_zeros", r.real_zeros},
              {"gaps", r.gaps},
              {"gaps_witnessed", r.gaps_witnessed},
              {"holds", r.holds()}};
}

Json identity_json(const IdentityCheck& c) {
  return Json{{"lhs", to_expression(c.lhs, "z")}, {"rhs", to_expression(c.rhs, "z")}, {"pass", c.holds()}};
}

Json tc0_json(const Tc0Result& r) {
  return Json{{"g", to_expression(r.g, "z")},
              {"H", to_expression(r.H, "z")},
              {"G", to_expression(r.G, "z")},
              {"pass", r.checks}};
}

Json tan_zero_json(const ReducedTanPoly& reduced, const TanZeroCount& count) {
  Json j;
  j["expression"] = to_expression(reduced.expression, "t");
  j["poly"] = to_expression(reduced.poly, "t");
  j["attainable"] = to_expression(count.attainable, "t");
  j["excluded_pm_i_multiplicity"] = count.excluded_pm_i_multiplicity;
  j["no_zeros"] = count.no_zeros;
  j["real_distinct"] = count.real_distinct;
  j["nonreal_distinct"] = count.nonreal_distinct;
  return j;
}

Json parabolic_point_json(const ParabolicPoint& p) {
  Json j;
  if (p.at_infinity) j["location"] = "infinity";
  else j["location"] = complex_json(p.location);
  j["multiplicity"] = p.multiplicity;
  j["petals"] = p.petal_count();
  Json angles = Json::array();
  for (double a : p.predicted_angles) angles.push_back(stable_double(a));
  j["predicted_angles"] = std::move(angles);
  j["real_direction_petals"] = real_direction_count(p.predicted_angles);
  return j;
}

Json assignment_json(const PetalAssignment& a) {
  Json j;
  j["start"] = complex_json(a.start);
  switch (a.outcome) {
    case OrbitOutcome::Petal:
      j["outcome"] = "petal";
      j["point"] = a.point_index;
      j["petal"] = a.petal_index;
      j["measured_angle"] = stable_double(*a.measured_angle);
      break;
    case OrbitOutcome::Escaped: j["outcome"] = "escaped"; break;
    case OrbitOutcome::Undetermined:
      j["outcome"] = "undetermined";
      j["reason"] = a.reason;
      break;
  }
  j["iterations"] = a.iterations_used;
  return j;
}

Json petal_summary_json(const PetalSummary& s) {
  Json points = Json::array();
  for (const auto& p : s.points) {
    points.push_back(Json{{"nu", p.nu},
                          {"real_direction_petals", p.real_direction_petals},
                          {"real_direction_ok", p.real_direction_ok},
                          {"orbits_per_petal", p.orbits_per_petal},
                          {"populated_petals", p.populated_petals},
                          {"empty_petals", p.empty_petals}});
  }
  return Json{{"points", std::move(points)}, {"escaped", s.escaped}, {"undetermined", s.undetermined}};
}

Json basin_json(const BasinRaster& r) {
  return Json{{"width", r.width_px},
              {"height", r.height_px},
              {"petal_pixels", r.petal_pixels},
              {"escaped", r.escaped},
              {"undetermined", r.undetermined},
              {"real_axis_samples", r.real_axis_samples},
              {"real_axis_petal_hits", r.real_axis_petal_hits}};
}

Json error_json(const std::string& kind, const std::string& message, std::optional<std::size_t> position) {
  Json e{{"kind", kind}, {"message", message}};
  if (position) e["position"] = *position;
  return Json{{"schema", kSchemaVersion}, {"error", std::move(e)}};
}

Json with_schema(const Json& payload) {
  Json j{{"schema", kSchemaVersion}};
  for (const auto& [k, v] : payload.items()) j[k] = v;
  return j;
}

std::string dump(const Json& j) {
  return j.dump(2) + "\n";
}

}  // namespace rzlab

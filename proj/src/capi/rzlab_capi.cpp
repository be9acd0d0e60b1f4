#include "rzlab/rzlab.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

#include "core/error.hpp"
#include "diffpoly/diffpoly.hpp"
#include "diffpoly/tanfun.hpp"
#include "exactalg/parse.hpp"
#include "exactalg/sturm.hpp"
#include "petals/basin.hpp"
#include "petals/petals.hpp"
#include "report/examples.hpp"
#include "report/json_report.hpp"
#include "theorems/bounds.hpp"
#include "theorems/census.hpp"
#include "theorems/fuzz.hpp"

struct rz_function {
  rzlab::ExactRatFun value;
};

struct rz_config {
  rzlab::FuzzConfig fuzz;
  bool max_iter_set = false;
};

namespace {

using rzlab::Json;

thread_local std::string g_last_error;
thread_local long g_last_position = -1;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const Json& j) {
  if (out) *out = copy_string(rzlab::dump(j));
}

rz_status fail(char** out, rz_status status, const std::string& kind, const std::string& message,
               std::optional<std::size_t> position = std::nullopt) {
  g_last_error = message;
  g_last_position = position ? static_cast<long>(*position) : -1;
  emit(out, rzlab::error_json(kind, message, position));
  return status;
}

// Runs `body` and maps exceptions onto status codes and error objects.
rz_status guarded(char** out, const std::function<rz_status()>& body) {
  if (out) *out = nullptr;
  g_last_error.clear();
  g_last_position = -1;
  try {
    return body();
  } catch (const rzlab::ParseError& e) {
    return fail(out, RZ_PARSE_ERROR, "parse", e.what(), e.position());
  } catch (const rzlab::DomainError& e) {
    return fail(out, RZ_DOMAIN_ERROR, "domain", e.what());
  } catch (const rzlab::NumericError& e) {
    return fail(out, RZ_NUMERIC_ERROR, "numeric", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(out, RZ_INVALID_ARGUMENT, "invalid_argument", e.what());
  } catch (const std::exception& e) {
    return fail(out, RZ_INTERNAL_ERROR, "internal", e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

rzlab::BigRational rational_arg(const char* text) {
  if (!text || !*text) return 0;
  return rzlab::parse_rational(text);
}

rz_status finish(char** out, const Json& payload, bool pass) {
  emit(out, rzlab::with_schema(payload));
  return pass ? RZ_OK : RZ_VIOLATION;
}

const rzlab::FuzzConfig& defaults() {
  static const rzlab::FuzzConfig d;
  return d;
}

const rzlab::FuzzConfig& fuzz_of(const rz_config* config) {
  return config ? config->fuzz : defaults();
}

rz_status set_positive(rz_config* config, double value, double rzlab::OrbitCaps::*field) {
  if (!config || !(value > 0) || !std::isfinite(value)) return RZ_INVALID_ARGUMENT;
  config->fuzz.caps.*field = value;
  return RZ_OK;
}

}  // namespace

extern "C" {

const char* rz_version(void) { return "1.0.0"; }

const char* rz_status_name(rz_status status) {
  switch (status) {
    case RZ_OK: return "ok";
    case RZ_VIOLATION: return "violation";
    case RZ_PARSE_ERROR: return "parse_error";
    case RZ_DOMAIN_ERROR: return "domain_error";
    case RZ_NUMERIC_ERROR: return "numeric_error";
    case RZ_INVALID_ARGUMENT: return "invalid_argument";
    case RZ_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

const char* rz_last_error_message(void) { return g_last_error.c_str(); }
long rz_last_error_position(void) { return g_last_position; }

void rz_free_string(char* text) { std::free(text); }
void rz_free_buffer(unsigned char* buffer) { std::free(buffer); }

rz_status rz_function_parse(const char* text, rz_function** out) {
  return guarded(nullptr, [&] {
    require(text && out, "null argument");
    *out = new rz_function{rzlab::parse_function(text)};
    return RZ_OK;
  });
}

void rz_function_free(rz_function* fn) { delete fn; }

rz_status rz_function_to_string(const rz_function* fn, char** out) {
  return guarded(nullptr, [&] {
    require(fn && out, "null argument");
    *out = copy_string(rzlab::to_expression(fn->value));
    return RZ_OK;
  });
}

int rz_function_degree(const rz_function* fn) { return fn ? fn->value.degree() : -1; }

rz_status rz_build_aux(const rz_function* fn, const char* kind, int k, rz_function** out, int* degenerate) {
  return guarded(nullptr, [&] {
    require(fn && kind && out, "null argument");
    const std::string which = kind;
    if (which == "F") {
      const rzlab::AuxMap F = rzlab::build_F(fn->value, k);
      if (degenerate) *degenerate = F.degenerate ? 1 : 0;
      *out = new rz_function{F.map};
    } else if (which == "G") {
      rzlab::ExactRatFun G = rzlab::build_G(fn->value, k);
      if (degenerate) *degenerate = G.derivative().is_zero() ? 1 : 0;
      *out = new rz_function{std::move(G)};
    } else {
      throw std::invalid_argument("auxiliary map kind must be F or G");
    }
    return RZ_OK;
  });
}

rz_status rz_differential_poly(const rz_function* fn, const char* mode, int k, const char* c,
                               rz_function** out) {
  return guarded(nullptr, [&] {
    require(fn && mode && out, "null argument");
    const std::string which = mode;
    if (which == "hayman") *out = new rz_function{rzlab::hayman_expr(fn->value, k, rational_arg(c))};
    else if (which == "product") *out = new rz_function{rzlab::product_expr(fn->value, k, rational_arg(c))};
    else throw std::invalid_argument("mode must be hayman or product");
    return RZ_OK;
  });
}

rz_config* rz_config_new(void) { return new rz_config; }
void rz_config_free(rz_config* config) { delete config; }

rz_status rz_config_set_seed(rz_config* config, uint64_t seed) {
  if (!config) return RZ_INVALID_ARGUMENT;
  config->fuzz.seed = seed;
  return RZ_OK;
}

rz_status rz_config_set_precision(rz_config* config, int bits) {
  if (!config || bits < 64 || bits > 4096) return RZ_INVALID_ARGUMENT;
  config->fuzz.solve.precision_bits = bits;
  if (config->fuzz.max_bits < bits) config->fuzz.max_bits = bits;
  return RZ_OK;
}

rz_status rz_config_set_max_bits(rz_config* config, int bits) {
  if (!config || bits < config->fuzz.solve.precision_bits || bits > 8192) return RZ_INVALID_ARGUMENT;
  config->fuzz.max_bits = bits;
  return RZ_OK;
}

rz_status rz_config_set_trials(rz_config* config, int trials) {
  if (!config || trials < 0) return RZ_INVALID_ARGUMENT;
  config->fuzz.trials = trials;
  return RZ_OK;
}

rz_status rz_config_set_max_iter(rz_config* config, long max_iter) {
  if (!config || max_iter < 1) return RZ_INVALID_ARGUMENT;
  config->fuzz.caps.max_iter = max_iter;
  config->max_iter_set = true;
  return RZ_OK;
}

rz_status rz_config_set_tau_real(rz_config* config, double tau) {
  if (!config || !(tau > 0) || !std::isfinite(tau)) return RZ_INVALID_ARGUMENT;
  config->fuzz.solve.tau_real = tau;
  return RZ_OK;
}

rz_status rz_config_set_angle_tol(rz_config* config, double tol) {
  return set_positive(config, tol, &rzlab::OrbitCaps::angle_tol);
}

rz_status rz_config_set_capture_radius(rz_config* config, double radius) {
  return set_positive(config, radius, &rzlab::OrbitCaps::capture_radius);
}

rz_status rz_config_set_escape_radius(rz_config* config, double radius) {
  return set_positive(config, radius, &rzlab::OrbitCaps::escape_radius);
}

rz_status rz_config_set_include_roots(rz_config* config, int include) {
  if (!config) return RZ_INVALID_ARGUMENT;
  config->fuzz.include_roots = include != 0;
  return RZ_OK;
}

rz_status rz_identity_check(const rz_function* fn, const char* check, int m, const char* c, int relaxed,
                            char** json) {
  return guarded(json, [&] {
    require(fn && check, "null argument");
    const std::string which = check;
    const rzlab::BigRational cv = rational_arg(c);
    Json j{{"check", which}, {"input", rzlab::to_expression(fn->value)}, {"m", m}};
    bool pass = false;
    if (which == "sheilsmall") {
      const auto sides = rzlab::sheilsmall_sides(fn->value, m);
      j["result"] = rzlab::identity_json(sides);
      pass = sides.holds();
    } else if (which == "inversion") {
      j["c"] = cv.get_str();
      const auto sides = rzlab::inversion_sides(fn->value, m, cv);
      j["result"] = rzlab::identity_json(sides);
      pass = sides.holds();
    } else if (which == "tc0") {
      j["c"] = cv.get_str();
      const auto r = rzlab::tc0_construct(fn->value, m, cv, relaxed != 0);
      j["result"] = rzlab::tc0_json(r);
      pass = r.checks;
    } else {
      throw std::invalid_argument("check must be sheilsmall, inversion or tc0");
    }
    j["pass"] = pass;
    return finish(json, j, pass);
  });
}

rz_status rz_zeros(const rz_function* fn, const rz_config* config, char** json) {
  return guarded(json, [&] {
    require(fn, "null argument");
    const auto& cfg = fuzz_of(config);
    const rzlab::ExactPoly& num = fn->value.num();
    if (num.is_zero()) throw rzlab::DomainError("the zero function has no isolated zeros");
    Json j{{"input", rzlab::to_expression(fn->value)}, {"numerator", rzlab::to_expression(num)}};
    if (num.is_constant()) {
      j["roots"] = Json::array();
      j["real_distinct"] = 0;
      j["nonreal_distinct"] = 0;
      j["sturm_real_distinct"] = 0;
      j["agreement"] = true;
      return finish(json, j, true);
    }
    const rzlab::RootSet roots = rzlab::find_roots_escalating(num, cfg.solve, cfg.max_bits);
    const rzlab::RootCounts counts = rzlab::classify_and_count(roots);
    const int sturm = rzlab::sturm_distinct_real_roots(num);
    j["roots"] = rzlab::root_set_json(roots);
    j["real_distinct"] = counts.real_distinct;
    j["nonreal_distinct"] = counts.nonreal_distinct;
    j["sturm_real_distinct"] = sturm;
    j["agreement"] = sturm == counts.real_distinct;
    return finish(json, j, sturm == counts.real_distinct);
  });
}

rz_status rz_tan_zeros(const char* tanfun, const char* mode, int k, const char* c, const rz_config*,
                       char** json) {
  return guarded(json, [&] {
    require(tanfun && mode, "null argument");
    const rzlab::TanFun f = rzlab::parse_tanfun(tanfun);
    const std::string which = mode;
    rzlab::TanMode tm;
    if (which == "hayman") tm = rzlab::HaymanMode{k, rational_arg(c)};
    else if (which == "product") tm = rzlab::ProductMode{k, rational_arg(c)};
    else throw std::invalid_argument("mode must be hayman or product");
    const rzlab::ReducedTanPoly red = rzlab::tan_reduce(f, tm);
    Json j{{"outer", rzlab::to_expression(f.outer, "t")},
           {"b", f.frequency.get_str()},
           {"mode", which},
           {"k", k},
           {"c", rational_arg(c).get_str()}};
    j["reduction"] = rzlab::tan_zero_json(red, rzlab::count_tan_zeros(red));
    return finish(json, j, true);
  });
}

rz_status rz_check_bound(const char* theorem, const rz_function* fn, int k, const char* c,
                         int enforce_hypotheses, const rz_config* config, char** json) {
  return guarded(json, [&] {
    require(theorem && fn, "null argument");
    const auto id = rzlab::theorem_from_name(theorem);
    if (!id) throw std::invalid_argument(std::string("unknown theorem '") + theorem + "'");
    const auto& cfg = fuzz_of(config);
    rzlab::BoundOptions o;
    o.solve = cfg.solve;
    o.max_bits = cfg.max_bits;
    o.enforce_hypotheses = enforce_hypotheses != 0;
    const rzlab::BoundReport r = rzlab::check_bound(*id, fn->value, k, rational_arg(c), o);
    Json j = rzlab::bound_report_json(r, true);
    j["input"] = rzlab::to_expression(fn->value);
    bool pass = r.pass;
    if (r.census_nonreal_min) pass = pass && r.observed_nonreal >= *r.census_nonreal_min;
    return finish(json, j, pass);
  });
}

rz_status rz_census(const rz_function* g, char** json) {
  return guarded(json, [&] {
    require(g, "null argument");
    const rzlab::ZeroCensus c = rzlab::zero_census(g->value);
    const int d = g->value.degree();
    Json j{{"input", rzlab::to_expression(g->value)}, {"d", d}, {"census", rzlab::census_json(c, d)}};
    return finish(json, j, c.inequality_L() && c.inequality_d(d));
  });
}

rz_status rz_rolle_check(const rz_function* g, const char* shift, char** json) {
  return guarded(json, [&] {
    require(g, "null argument");
    const rzlab::BigRational s = shift && *shift ? rzlab::parse_rational(shift) : rzlab::BigRational(1);
    const rzlab::RolleResult r = rzlab::rolle_interlace(g->value, s);
    Json j{{"input", rzlab::to_expression(g->value)}, {"shift", s.get_str()}, {"rolle", rzlab::rolle_json(r)}};
    return finish(json, j, r.holds());
  });
}

rz_status rz_petals(const rz_function* map, const rz_config* config, char** json) {
  return guarded(json, [&] {
    require(map, "null argument");
    const auto& cfg = fuzz_of(config);
    const auto points = rzlab::parabolic_points(map->value, cfg.solve);
    const rzlab::RootSet crit = rzlab::critical_points(map->value, cfg.solve);
    const rzlab::NumericMap numeric(map->value);
    std::vector<rzlab::PetalAssignment> assignments;
    Json orbits = Json::array();
    bool angles_ok = true;
    for (const auto& e : crit.entries) {
      assignments.push_back(rzlab::orbit_to_petal(numeric, e.value.to_double(), points, cfg.caps));
      const auto& a = assignments.back();
      if (a.outcome == rzlab::OrbitOutcome::Petal) {
        const double theta =
            points[static_cast<std::size_t>(a.point_index)].predicted_angles[static_cast<std::size_t>(a.petal_index - 1)];
        angles_ok = angles_ok && rzlab::angle_distance(*a.measured_angle, theta) <= cfg.caps.angle_tol;
      }
      orbits.push_back(rzlab::assignment_json(a));
    }
    const rzlab::PetalSummary summary = rzlab::petal_report(points, assignments);
    bool law = true;
    for (const auto& s : summary.points) law = law && s.real_direction_ok;
    Json pts = Json::array();
    for (const auto& p : points) pts.push_back(rzlab::parabolic_point_json(p));
    Json j{{"map", rzlab::to_expression(map->value)},
           {"parabolic_points", std::move(pts)},
           {"critical_points", rzlab::root_set_json(crit)},
           {"orbits", std::move(orbits)},
           {"summary", rzlab::petal_summary_json(summary)},
           {"angle_agreement", angles_ok},
           {"real_direction_law", law}};
    return finish(json, j, law && angles_ok);
  });
}

rz_status rz_basin(const rz_function* map, double center_re, double center_im, double width, double height,
                   int resolution, const rz_config* config, unsigned char** ppm, size_t* ppm_size, char** json) {
  if (ppm) *ppm = nullptr;
  if (ppm_size) *ppm_size = 0;
  return guarded(json, [&] {
    require(map && ppm && ppm_size, "null argument");
    require(resolution >= 1 && resolution <= 8192, "resolution must be in [1, 8192]");
    const auto& cfg = fuzz_of(config);
    rzlab::OrbitCaps caps = rzlab::basin_caps();
    caps.angle_tol = cfg.caps.angle_tol;
    caps.capture_radius = cfg.caps.capture_radius;
    caps.escape_radius = cfg.caps.escape_radius;
    if (config && config->max_iter_set) caps.max_iter = cfg.caps.max_iter;
    const auto points = rzlab::parabolic_points(map->value, cfg.solve);
    const rzlab::BasinGrid grid{{center_re, center_im}, width, height, resolution};
    const rzlab::BasinRaster raster = rzlab::render_basin(map->value, points, grid, caps);
    const std::vector<std::uint8_t> bytes = rzlab::to_ppm(raster);
    auto* buf = static_cast<unsigned char*>(std::malloc(bytes.size()));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, bytes.data(), bytes.size());
    *ppm = buf;
    *ppm_size = bytes.size();
    Json pts = Json::array();
    for (const auto& p : points) pts.push_back(rzlab::parabolic_point_json(p));
    Json j{{"map", rzlab::to_expression(map->value)}, {"parabolic_points", std::move(pts)},
           {"raster", rzlab::basin_json(raster)}};
    emit(json, rzlab::with_schema(j));
    return RZ_OK;
  });
}

rz_status rz_examples(char** json) {
  return guarded(json, [&] {
    const auto results = rzlab::run_examples();
    Json j = rzlab::examples_json(results);
    const bool pass = j["pass"].get<bool>();
    return finish(json, j, pass);
  });
}

rz_status rz_fuzz(const char* suite, const rz_config* config, char** json) {
  return guarded(json, [&] {
    require(suite, "null argument");
    const std::string name = suite;
    bool known = false;
    for (const auto& s : rzlab::fuzz_suites()) known = known || s == name;
    if (!known) throw std::invalid_argument("unknown fuzz suite '" + name + "'");
    const rzlab::FuzzResult r = rzlab::run_fuzz(name, fuzz_of(config));
    emit(json, rzlab::with_schema(r.report));
    if (r.violations > 0) return RZ_VIOLATION;
    return r.unresolved > 0 ? RZ_NUMERIC_ERROR : RZ_OK;
  });
}

}  // extern "C"

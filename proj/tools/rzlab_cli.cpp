// Command-line front end. Talks to the library only through rzlab.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rzlab/rzlab.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kPass = 0, kViolation = 1, kUsage = 2, kNumeric = 3, kInternal = 4 };

int exit_code(rz_status s) {
  switch (s) {
    case RZ_OK: return kPass;
    case RZ_VIOLATION: return kViolation;
    case RZ_PARSE_ERROR:
    case RZ_DOMAIN_ERROR:
    case RZ_INVALID_ARGUMENT: return kUsage;
    case RZ_NUMERIC_ERROR: return kNumeric;
    case RZ_INTERNAL_ERROR: return kInternal;
  }
  return kInternal;
}

struct Common {
  std::uint64_t seed = 7;
  int precision = 128;
  int max_bits = 512;
  std::string out;
  std::string format = "json";
  long max_iter = 0;
  double tau_real = 1e-20;
  double angle_tol = 0.05;
  double capture_radius = 0.05;
  double escape_radius = 1e8;
  int trials = 0;
  bool include_roots = false;
};

std::string error_object(const std::string& kind, const std::string& message) {
  Json j{{"schema", 1}, {"error", {{"kind", kind}, {"message", message}}}};
  return j.dump(2) + "\n";
}

// Owns a C string returned by the library.
struct CString {
  char* p = nullptr;
  ~CString() { rz_free_string(p); }
  std::string str() const { return p ? p : ""; }
};

struct FunctionHandle {
  rz_function* p = nullptr;
  FunctionHandle() = default;
  FunctionHandle(const FunctionHandle&) = delete;
  FunctionHandle& operator=(const FunctionHandle&) = delete;
  FunctionHandle(FunctionHandle&& o) noexcept : p(o.p) { o.p = nullptr; }
  FunctionHandle& operator=(FunctionHandle&& o) noexcept {
    std::swap(p, o.p);
    return *this;
  }
  ~FunctionHandle() { rz_function_free(p); }
};

struct ConfigHandle {
  rz_config* p = rz_config_new();
  ~ConfigHandle() { rz_config_free(p); }
};

// Thrown to leave a command with a prepared error document.
struct Failure {
  int code;
  std::string document;
};

[[noreturn]] void fail_status(rz_status s, const std::string& context) {
  std::string msg = rz_last_error_message();
  if (msg.empty()) msg = rz_status_name(s);
  const long pos = rz_last_error_position();
  Json j{{"schema", 1},
         {"error", {{"kind", rz_status_name(s)}, {"message", context.empty() ? msg : context + ": " + msg}}}};
  if (pos >= 0) j["error"]["position"] = pos;
  throw Failure{exit_code(s), j.dump(2) + "\n"};
}

[[noreturn]] void usage(const std::string& message) {
  throw Failure{kUsage, error_object("usage", message)};
}

FunctionHandle parse(const std::string& text, const std::string& what) {
  FunctionHandle h;
  const rz_status s = rz_function_parse(text.c_str(), &h.p);
  if (s != RZ_OK) fail_status(s, "cannot parse " + what);
  return h;
}

void write_output(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) usage("cannot open output file '" + c.out + "'");
  f << text;
}

void write_binary(const Common& c, const unsigned char* data, std::size_t size) {
  if (c.out.empty()) usage("--out is required for PPM output");
  std::ofstream f(c.out, std::ios::binary);
  if (!f) usage("cannot open output file '" + c.out + "'");
  f.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(size));
}

void configure(const Common& c, rz_config* cfg) {
  auto check = [](rz_status s, const char* flag) {
    if (s != RZ_OK) usage(std::string("invalid value for ") + flag);
  };
  check(rz_config_set_seed(cfg, c.seed), "--seed");
  check(rz_config_set_precision(cfg, c.precision), "--precision");
  check(rz_config_set_max_bits(cfg, std::max(c.max_bits, c.precision)), "--max-bits");
  check(rz_config_set_tau_real(cfg, c.tau_real), "--tau-real");
  check(rz_config_set_angle_tol(cfg, c.angle_tol), "--angle-tol");
  check(rz_config_set_capture_radius(cfg, c.capture_radius), "--capture-radius");
  check(rz_config_set_escape_radius(cfg, c.escape_radius), "--escape-radius");
  check(rz_config_set_trials(cfg, c.trials), "--trials");
  check(rz_config_set_include_roots(cfg, c.include_roots ? 1 : 0), "--include-roots");
  if (c.max_iter > 0) check(rz_config_set_max_iter(cfg, c.max_iter), "--max-iter");
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

// Tabular rendering for the reports that have a natural row structure.
std::string to_csv(const std::string& command, const Json& doc) {
  std::ostringstream out;
  if (command == "examples") {
    out << "example,sub_check,expected,observed,pass\n";
    for (const auto& ex : doc["examples"])
      for (const auto& s : ex["sub_checks"])
        out << ex["id"].get<int>() << ',' << csv_escape(scalar(s["name"])) << ',' << csv_escape(scalar(s["expected"]))
            << ',' << csv_escape(scalar(s["observed"])) << ',' << (s["pass"].get<bool>() ? "true" : "false") << '\n';
    return out.str();
  }
  if (command == "fuzz") {
    out << "suite,trial,input,theorem,required_nonreal_min,observed_nonreal,observed_real,violation\n";
    auto rows = [&](const Json& suite) {
      for (const auto& r : suite["records"]) {
        const Json rep = r.contains("report") ? r["report"] : Json::object();
        out << scalar(suite["suite"]) << ',' << scalar(r.value("trial", Json())) << ','
            << csv_escape(scalar(r.value("input", r.value("g", r.value("f", Json()))))) << ','
            << scalar(rep.value("theorem", Json())) << ','
            << (rep.contains("required") ? scalar(rep["required"]["nonreal_min"]) : "") << ','
            << (rep.contains("observed") ? scalar(rep["observed"]["nonreal"]) : "") << ','
            << (rep.contains("observed") ? scalar(rep["observed"]["real"]) : "") << ','
            << (r.value("violation", false) ? "true" : "false") << '\n';
      }
    };
    if (doc.contains("suites"))
      for (const auto& s : doc["suites"]) rows(s);
    else
      rows(doc);
    return out.str();
  }
  if (command == "bounds") {
    out << "theorem,d,c,required_nonreal_min,required_real_max,observed_nonreal,observed_real,pass\n";
    out << scalar(doc["theorem"]) << ',' << scalar(doc["d"]) << ',' << scalar(doc["c"]) << ','
        << scalar(doc["required"]["nonreal_min"]) << ',' << scalar(doc["required"]["real_max"]) << ','
        << scalar(doc["observed"]["nonreal"]) << ',' << scalar(doc["observed"]["real"]) << ','
        << (doc["pass"].get<bool>() ? "true" : "false") << '\n';
    return out.str();
  }
  usage("--format csv is available for examples, fuzz and bounds");
}

// Emits a JSON report (or its CSV rendering) and maps the status.
int report(const Common& c, const std::string& command, rz_status s, const CString& json) {
  if (s != RZ_OK && s != RZ_VIOLATION && !(command == "fuzz" && s == RZ_NUMERIC_ERROR)) {
    const std::string doc = json.p ? json.str() : error_object(rz_status_name(s), rz_last_error_message());
    throw Failure{exit_code(s), doc};
  }
  if (c.format == "csv") write_output(c, to_csv(command, Json::parse(json.str())));
  else if (c.format == "json") write_output(c, json.str());
  else usage("--format " + c.format + " is not available for " + command);
  return exit_code(s);
}

// --map, or --f with --m (auxiliary F), or --g with --n (auxiliary G).
struct MapSource {
  std::string map, f, g;
  int m = 0, n = 0;
};

FunctionHandle build_map(const MapSource& src) {
  const int given = !src.map.empty() + !src.f.empty() + !src.g.empty();
  if (given != 1) usage("give exactly one of --map, --f (with --m) or --g (with --n)");
  if (!src.map.empty()) return parse(src.map, "--map");
  const bool is_f = !src.f.empty();
  FunctionHandle base = parse(is_f ? src.f : src.g, is_f ? "--f" : "--g");
  const int k = is_f ? src.m : src.n;
  if (k < 1) usage(is_f ? "--f needs --m >= 2" : "--g needs --n >= 1");
  FunctionHandle out;
  int degenerate = 0;
  const rz_status s = rz_build_aux(base.p, is_f ? "F" : "G", k, &out.p, &degenerate);
  if (s != RZ_OK) fail_status(s, "cannot build the auxiliary map");
  if (degenerate) usage("the auxiliary map is degenerate (its derivative vanishes identically)");
  return out;
}

// "re" or "re,im".
std::pair<double, double> parse_center(const std::string& text) {
  std::istringstream in(text);
  double re = 0, im = 0;
  char comma = 0;
  if (!(in >> re)) usage("--center expects 're' or 're,im'");
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) usage("--center expects 're' or 're,im'");
  }
  return {re, im};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rzlab: zeros of differential polynomials and parabolic petals"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--seed", c.seed, "Seed for fuzz instance streams");
  app.add_option("--precision", c.precision, "Working precision in bits")->check(CLI::Range(64, 4096));
  app.add_option("--max-bits", c.max_bits, "Precision cap for escalation")->check(CLI::Range(64, 8192));
  app.add_option("--out", c.out, "Output file (stdout when absent; required for ppm)");
  auto* format_opt = app.add_option("--format", c.format, "Output format (basin defaults to ppm)")->check(CLI::IsMember({"json", "csv", "ppm"}));
  app.add_option("--max-iter", c.max_iter, "Orbit iteration cap")->check(CLI::PositiveNumber);
  app.add_option("--tau-real", c.tau_real, "Real-axis snap tolerance")->check(CLI::PositiveNumber);
  app.add_option("--angle-tol", c.angle_tol, "Petal angle tolerance (rad)")->check(CLI::PositiveNumber);
  app.add_option("--capture-radius", c.capture_radius, "Orbit capture radius")->check(CLI::PositiveNumber);
  app.add_option("--escape-radius", c.escape_radius, "Orbit escape radius")->check(CLI::PositiveNumber);

  // identities
  auto* identities = app.add_subcommand("identities", "Exact transform identities");
  std::string id_f, id_g, id_check, id_c = "0";
  int id_m = 0;
  bool id_relaxed = false;
  identities->add_option("--f", id_f, "Function f");
  identities->add_option("--g", id_g, "Function g (inversion identity)");
  identities->add_option("--m", id_m, "Exponent m")->required();
  identities->add_option("--c", id_c, "Rational constant c");
  identities->add_option("--check", id_check, "Identity to verify")
      ->required()
      ->check(CLI::IsMember({"sheilsmall", "inversion", "tc0"}));
  identities->add_flag("--relaxed", id_relaxed, "tc0: allow m >= 1 for diagnostics");

  // zeros
  auto* zeros = app.add_subcommand("zeros", "Roots of a function's numerator or of a differential polynomial");
  std::string z_f, z_tan, z_mode, z_c = "0";
  int z_k = 0;
  zeros->add_option("--f", z_f, "Rational function");
  zeros->add_option("--tan", z_tan, "Tangent family \"R = <ratfun in t> ; b = <q>\"");
  zeros->add_option("--mode", z_mode, "Differential polynomial to form")->check(CLI::IsMember({"hayman", "product"}));
  zeros->add_option("--k,--m,--n", z_k, "Exponent m (hayman) or n (product)");
  zeros->add_option("--c", z_c, "Rational constant c");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Check one non-real zero bound");
  std::string b_thm, b_f, b_g, b_c = "0";
  int b_m = 0, b_n = 0;
  bool b_no_enforce = false;
  bounds->add_option("--thm", b_thm, "Statement to check")
      ->required()
      ->check(CLI::IsMember({"cor1", "thm_rat", "cor_crat", "thm4pol", "thm9_rat"}));
  bounds->add_option("--f", b_f, "Function f (f' + f^m + c)");
  bounds->add_option("--g", b_g, "Function g (g^n g' = c)");
  bounds->add_option("--m", b_m, "Exponent m");
  bounds->add_option("--n", b_n, "Exponent n");
  bounds->add_option("--c", b_c, "Rational constant c");
  bounds->add_flag("--no-enforce", b_no_enforce, "Report failed hypotheses instead of rejecting");

  // census
  auto* census = app.add_subcommand("census", "Zero census K, L, M, N, P of a real polynomial");
  std::string cz_g, cz_shift;
  census->add_option("--g", cz_g, "Polynomial g")->required();
  census->add_option("--rolle-shift", cz_shift, "Also run the Rolle interlacing check for g + shift");

  // petals
  MapSource petal_src;
  auto* petals = app.add_subcommand("petals", "Parabolic points, petal angles and critical orbits");
  petals->add_option("--map", petal_src.map, "Rational map in z");
  petals->add_option("--f", petal_src.f, "Build F from f and --m");
  petals->add_option("--m", petal_src.m, "m for F");
  petals->add_option("--g", petal_src.g, "Build G from g and --n");
  petals->add_option("--n", petal_src.n, "n for G");

  // basin
  MapSource basin_src;
  std::string bs_center = "0";
  double bs_width = 4.0, bs_height = 0.0;
  int bs_res = 512;
  auto* basin = app.add_subcommand("basin", "PPM raster of petal membership");
  basin->add_option("--map", basin_src.map, "Rational map in z");
  basin->add_option("--f", basin_src.f, "Build F from f and --m");
  basin->add_option("--m", basin_src.m, "m for F");
  basin->add_option("--g", basin_src.g, "Build G from g and --n");
  basin->add_option("--n", basin_src.n, "n for G");
  basin->add_option("--center", bs_center, "Center 're' or 're,im'");
  basin->add_option("--width", bs_width, "Width of the window")->check(CLI::PositiveNumber);
  basin->add_option("--height", bs_height, "Height of the window (defaults to width)");
  basin->add_option("--res", bs_res, "Pixels across the width")->check(CLI::Range(1, 8192));
  std::string bs_stats;
  basin->add_option("--stats", bs_stats, "Also write raster statistics (JSON) to this file");

  // examples
  auto* examples = app.add_subcommand("examples", "Reproduce the six closed-form examples");

  // fuzz
  auto* fuzz = app.add_subcommand("fuzz", "Seeded fuzz campaigns");
  std::string fz_suite = "all";
  fuzz->add_option("--suite", fz_suite, "Suite name")
      ->check(CLI::IsMember({"thm_rat", "thm4pol", "thm9_rat", "cor_crat", "cor1", "oracle", "census", "petals",
                             "negative_controls", "all"}));
  fuzz->add_option("--trials", c.trials, "Trials (0 = suite default)")->check(CLI::NonNegativeNumber);
  fuzz->add_flag("--include-roots", c.include_roots, "List roots in every instance report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cout << error_object("usage", e.what());
    return kUsage;
  }

  try {
    ConfigHandle cfg;
    configure(c, cfg.p);
    if (c.format == "ppm" && !basin->parsed()) usage("--format ppm is only available for basin");

    if (identities->parsed()) {
      if (id_f.empty() == id_g.empty()) usage("give exactly one of --f or --g");
      if (id_check == "inversion" ? id_g.empty() : id_f.empty())
        usage(id_check == "inversion" ? "the inversion identity takes --g" : "this identity takes --f");
      FunctionHandle fn = parse(id_f.empty() ? id_g : id_f, id_f.empty() ? "--g" : "--f");
      CString json;
      const rz_status s = rz_identity_check(fn.p, id_check.c_str(), id_m, id_c.c_str(), id_relaxed ? 1 : 0, &json.p);
      return report(c, "identities", s, json);
    }
    if (zeros->parsed()) {
      CString json;
      rz_status s;
      if (!z_tan.empty()) {
        if (!z_f.empty()) usage("give one of --f or --tan");
        if (z_mode.empty()) usage("--tan needs --mode hayman|product and --m/--n");
        s = rz_tan_zeros(z_tan.c_str(), z_mode.c_str(), z_k, z_c.c_str(), cfg.p, &json.p);
      } else {
        if (z_f.empty()) usage("give --f or --tan");
        FunctionHandle fn = parse(z_f, "--f");
        if (!z_mode.empty()) {
          FunctionHandle expr;
          const rz_status ds = rz_differential_poly(fn.p, z_mode.c_str(), z_k, z_c.c_str(), &expr.p);
          if (ds != RZ_OK) fail_status(ds, "cannot form the differential polynomial");
          fn = std::move(expr);
        }
        s = rz_zeros(fn.p, cfg.p, &json.p);
      }
      return report(c, "zeros", s, json);
    }
    if (bounds->parsed()) {
      const bool uses_g = b_thm == "cor_crat" || b_thm == "thm4pol";
      const std::string& text = uses_g ? (b_g.empty() ? b_f : b_g) : (b_f.empty() ? b_g : b_f);
      if (text.empty()) usage(uses_g ? "--g is required" : "--f is required");
      const int k = uses_g ? (b_n ? b_n : b_m) : (b_m ? b_m : b_n);
      FunctionHandle fn = parse(text, uses_g ? "--g" : "--f");
      CString json;
      const rz_status s = rz_check_bound(b_thm.c_str(), fn.p, k, b_c.c_str(), b_no_enforce ? 0 : 1, cfg.p, &json.p);
      return report(c, "bounds", s, json);
    }
    if (census->parsed()) {
      FunctionHandle g = parse(cz_g, "--g");
      CString json;
      rz_status s = rz_census(g.p, &json.p);
      if (cz_shift.empty() || (s != RZ_OK && s != RZ_VIOLATION)) return report(c, "census", s, json);
      CString rolle;
      const rz_status rs = rz_rolle_check(g.p, cz_shift.c_str(), &rolle.p);
      if (rs != RZ_OK && rs != RZ_VIOLATION) return report(c, "census", rs, rolle);
      Json merged = Json::parse(json.str());
      merged["rolle"] = Json::parse(rolle.str())["rolle"];
      merged["shift"] = Json::parse(rolle.str())["shift"];
      if (c.format != "json") usage("--format " + c.format + " is not available for census");
      write_output(c, merged.dump(2) + "\n");
      return exit_code(s == RZ_OK && rs == RZ_OK ? RZ_OK : RZ_VIOLATION);
    }
    if (petals->parsed()) {
      FunctionHandle map = build_map(petal_src);
      CString json;
      const rz_status s = rz_petals(map.p, cfg.p, &json.p);
      return report(c, "petals", s, json);
    }
    if (basin->parsed()) {
      FunctionHandle map = build_map(basin_src);
      const auto [re, im] = parse_center(bs_center);
      const double height = bs_height > 0 ? bs_height : bs_width;
      unsigned char* ppm = nullptr;
      std::size_t size = 0;
      CString json;
      const rz_status s = rz_basin(map.p, re, im, bs_width, height, bs_res, cfg.p, &ppm, &size, &json.p);
      std::unique_ptr<unsigned char, void (*)(unsigned char*)> guard(ppm, rz_free_buffer);
      if (s != RZ_OK) return report(c, "basin", s, json);
      if (format_opt->count() > 0 && c.format == "json") {
        write_output(c, json.str());
      } else {
        write_binary(c, ppm, size);
        if (!bs_stats.empty()) {
          std::ofstream st(bs_stats);
          st << json.str();
        }
      }
      return kPass;
    }
    if (examples->parsed()) {
      CString json;
      const rz_status s = rz_examples(&json.p);
      return report(c, "examples", s, json);
    }
    if (fuzz->parsed()) {
      CString json;
      const rz_status s = rz_fuzz(fz_suite.c_str(), cfg.p, &json.p);
      return report(c, "fuzz", s, json);
    }
  } catch (const Failure& f) {
    std::cout << f.document;
    std::cerr << "rzlab: " << Json::parse(f.document)["error"]["message"].get<std::string>() << "\n";
    return f.code;
  }
  return kUsage;
}

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "diffpoly/diffpoly.hpp"
#include "diffpoly/tanfun.hpp"
#include "petals/basin.hpp"
#include "petals/petals.hpp"
#include "rootlab/roots.hpp"
#include "theorems/bounds.hpp"
#include "theorems/census.hpp"

namespace rzlab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Doubles are rounded to 1e-12 before serialization so that reports are
// byte-stable; multiprecision values are written as 30-digit strings.
double stable_double(double x);

Json poly_json(const ExactPoly& p, const std::string& var = "z");
Json ratfun_json(const ExactRatFun& f, const std::string& var = "z");
Json complex_json(const MpComplex& z);
Json complex_json(std::complex<double> z);
Json root_set_json(const RootSet& roots);
Json bound_report_json(const BoundReport& r, bool include_roots = true);
Json census_json(const ZeroCensus& c, std::optional<int> degree = std::nullopt);
Json rolle_json(const RolleResult& r);
Json identity_json(const IdentityCheck& c);
Json tc0_json(const Tc0Result& r);
Json tan_zero_json(const ReducedTanPoly& reduced, const TanZeroCount& count);
Json parabolic_point_json(const ParabolicPoint& p);
Json assignment_json(const PetalAssignment& a);
Json petal_summary_json(const PetalSummary& s);
Json basin_json(const BasinRaster& r);

// {"schema": 1, "error": {"kind", "message", "position"?}}
Json error_json(const std::string& kind, const std::string& message,
                std::optional<std::size_t> position = std::nullopt);

// Wraps a payload object with the schema field first.
Json with_schema(const Json& payload);

std::string dump(const Json& j);

}  // namespace rzlab

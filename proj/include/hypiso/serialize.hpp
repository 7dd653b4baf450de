#pragma once

// JSON and CSV encodings shared by the command line tool and the Python module.

#include "hypiso/bounds.hpp"
#include "hypiso/optimize.hpp"
#include "hypiso/polygon.hpp"
#include "hypiso/verify.hpp"

#include <json.hpp>

#include <string>

namespace hypiso {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Decimal with 17 significant digits, '.' separator, independent of locale.
/// Non-finite values print as inf, -inf and nan.
std::string format_double(double x);

/// {"kind", "n", "radius", "thetas"}.
Json polygon_to_json(const Polygon& p);
/// Rebuilds and revalidates a polygon; throws InvalidPolygon on malformed input.
Polygon polygon_from_json(const Json& j);

Json to_json(const RegularNGonSpec& spec);
Json to_json(const RegularPolygonMetrics& m);
Json to_json(const BoundResult& r);
Json to_json(const ConvexityCertificate& c);
Json to_json(const OracleResult& o);
Json to_json(const OptimizationReport& r);
Json to_json(const VerificationReport& r);

/// Header of the bound table: theorem,n,k,param,value,feasible,guard_margin
inline constexpr const char* kBoundCsvHeader = "theorem,n,k,param,value,feasible,guard_margin";
/// One row matching kBoundCsvHeader; guard_margin is empty when absent.
std::string bound_csv_row(const BoundResult& r);

} // namespace hypiso

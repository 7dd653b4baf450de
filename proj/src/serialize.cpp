#include "hypiso/serialize.hpp"

#include "hypiso/error.hpp"

#include <charconv>
#include <cmath>
#include <vector>

namespace hypiso {

namespace {

Json number(double x) {
    if (std::isfinite(x))
        return x;
    return format_double(x);
}

Json numbers(std::span<const double> xs) {
    Json a = Json::array();
    for (double x : xs)
        a.push_back(number(x));
    return a;
}

std::string_view defining_name(const RegularDefinition& d) {
    switch (d.index()) {
    case 0: return "circumradius";
    case 1: return "inradius";
    case 2: return "interior_angle";
    default: return "side";
    }
}

double defining_value(const RegularDefinition& d) {
    return std::visit([](const auto& v) { return v.value; }, d);
}

} // namespace

std::string format_double(double x) {
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

Json polygon_to_json(const Polygon& p) {
    Json j;
    j["kind"] = std::string(to_string(kind_of(p)));
    j["n"] = static_cast<int>(thetas_of(p).size());
    j["radius"] = radius_of(p);
    j["thetas"] = numbers(thetas_of(p));
    return j;
}

Polygon polygon_from_json(const Json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        const double radius = j.at("radius").get<double>();
        auto thetas = j.at("thetas").get<std::vector<double>>();
        if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(thetas.size()))
            throw Error(ErrorCode::InvalidPolygon, "n does not match the number of sector angles");
        if (kind == "cyclic")
            return CyclicPolygon::make(radius, std::move(thetas));
        if (kind == "tangential")
            return TangentialPolygon::make(radius, std::move(thetas));
        throw Error(ErrorCode::InvalidPolygon, "unknown polygon kind '" + kind + "'");
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::InvalidPolygon, std::string("malformed polygon JSON: ") + e.what());
    }
}

Json to_json(const RegularNGonSpec& spec) {
    Json j;
    j["n"] = spec.n;
    j[std::string(defining_name(spec.defining))] = number(defining_value(spec.defining));
    return j;
}

Json to_json(const RegularPolygonMetrics& m) {
    Json j;
    j["n"] = m.n;
    j["circumradius"] = number(m.circumradius);
    j["inradius"] = number(m.inradius);
    j["interior_angle"] = number(m.interior_angle);
    j["side"] = number(m.side);
    j["perimeter"] = number(m.perimeter);
    j["area"] = number(m.area);
    return j;
}

Json to_json(const BoundResult& r) {
    Json j;
    j["theorem"] = std::string(label(r.id));
    j["n"] = r.n;
    j["k"] = r.k;
    j["parameter"] = number(r.parameter);
    j["value"] = number(r.value);
    j["kind"] = std::string(to_string(r.kind));
    j["measure"] = std::string(to_string(r.measure));
    j["feasible"] = r.feasible;
    j["guard_margin"] = r.guard_margin ? number(*r.guard_margin) : Json();
    if (r.equality_spec) {
        Json e = to_json(*r.equality_spec);
        e["copies"] = r.copies;
        j["equality_spec"] = e;
    } else {
        j["equality_spec"] = Json();
    }
    return j;
}

Json to_json(const ConvexityCertificate& c) {
    Json j;
    j["curvature"] = std::string(to_string(c.curvature));
    j["second_difference_sign"] = c.curvature == Curvature::Mixed ? "mixed" : "consistent";
    j["grid"] = numbers(c.grid);
    j["second_differences"] = numbers(c.second_differences);
    j["first_violation"] = c.first_violation ? number(*c.first_violation) : Json();
    return j;
}

Json to_json(const OracleResult& o) {
    Json j;
    j["point"] = numbers(o.point);
    j["value"] = number(o.value);
    j["cell"] = number(o.cell);
    j["resolution"] = o.resolution;
    j["evaluated"] = o.evaluated;
    return j;
}

Json to_json(const OptimizationReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["objective"] = r.objective;
    j["sense"] = std::string(to_string(r.sense));
    j["k"] = r.k;
    j["total"] = number(r.total);
    j["interval"] = {number(r.interval.lo), number(r.interval.hi)};
    j["argopt"] = numbers(r.argopt);
    j["objective_at_argopt"] = number(r.objective_at_argopt);
    j["uniform_point_objective"] = number(r.uniform_point_objective);
    j["max_deviation_from_uniform"] = number(r.max_deviation_from_uniform);
    j["certified"] = r.certified;
    j["convexity_certificate"] = to_json(r.certificate);
    j["oracle"] = r.oracle ? to_json(*r.oracle) : Json();
    j["oracle_agreement"] = r.oracle_agreement;
    Json traj = Json::array();
    for (const auto& s : r.trajectory) {
        Json t;
        t["start"] = numbers(s.start);
        t["end"] = numbers(s.end);
        t["value"] = number(s.value);
        t["iterations"] = s.iterations;
        traj.push_back(t);
    }
    j["trajectory"] = traj;
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["theorem"] = std::string(label(r.id));
    j["k"] = r.k;
    j["trials"] = r.trials;
    j["checked"] = r.checked;
    j["skipped_by_guard"] = r.skipped_by_guard;
    j["violations"] = r.violations;
    j["worst_margin"] = number(r.worst_margin);
    j["tolerance"] = number(r.tolerance);
    j["equality_checks"] = r.equality_checks;
    j["equality_failures"] = r.equality_failures;
    j["max_equality_error"] = number(r.max_equality_error);
    j["equality_tolerance"] = number(r.equality_tolerance);
    j["passed"] = r.passed();
    Json ces = Json::array();
    for (const auto& c : r.counterexamples) {
        Json e;
        e["trial"] = c.trial;
        e["n"] = c.n;
        e["parameter"] = number(c.parameter);
        e["bound"] = number(c.bound);
        e["measured"] = number(c.measured);
        e["margin"] = number(c.margin);
        Json polys = Json::array();
        for (const auto& p : c.polygons)
            polys.push_back(polygon_to_json(p));
        e["polygons"] = polys;
        ces.push_back(e);
    }
    j["counterexamples"] = ces;
    return j;
}

std::string bound_csv_row(const BoundResult& r) {
    std::string row;
    row += label(r.id);
    row += ',' + std::to_string(r.n);
    row += ',' + std::to_string(r.k);
    row += ',' + format_double(r.parameter);
    row += ',' + format_double(r.value);
    row += r.feasible ? ",true" : ",false";
    row += ',';
    if (r.guard_margin)
        row += format_double(*r.guard_margin);
    return row;
}

} // namespace hypiso

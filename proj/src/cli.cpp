#include "hypiso/cli.hpp"

#include "hypiso/acceptance.hpp"
#include "hypiso/bounds.hpp"
#include "hypiso/error.hpp"
#include "hypiso/hmodel.hpp"
#include "hypiso/optimize.hpp"
#include "hypiso/sampling.hpp"
#include "hypiso/serialize.hpp"
#include "hypiso/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace hypiso {

namespace {

constexpr std::uint64_t kDefaultSeed = 0x1509'0001;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    double lo = 0;
    double hi = 0;
    int steps = 1;

    std::vector<double> points() const {
        if (steps == 1)
            return {lo};
        std::vector<double> out;
        for (int i = 0; i < steps; ++i)
            out.push_back(i == steps - 1 ? hi : lo + (hi - lo) * i / (steps - 1));
        return out;
    }
};

struct RunConfig {
    std::string thm;
    std::optional<int> n;
    std::optional<int> k;
    std::string range;
    std::optional<int> trials;
    std::string seed;
    std::string format = "json";
    std::string out;
    bool degrees = false;
    int threads = 0;
    double tolerance = 1e-12;
    std::string kind = "cyclic";
    bool regular = false;
    std::string objective;
    std::optional<double> radius;
    std::optional<double> total;
};

double parse_number(const std::string& text) {
    double v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw UsageError("not a number: '" + text + "'");
    return v;
}

std::optional<Range> parse_range(const std::string& text) {
    if (text.empty())
        return std::nullopt;
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');)
        parts.push_back(p);
    if (parts.size() != 2 && parts.size() != 3)
        throw UsageError("--range expects lo:hi or lo:hi:steps");
    Range r;
    r.lo = parse_number(parts[0]);
    r.hi = parse_number(parts[1]);
    if (parts.size() == 3) {
        const double steps = parse_number(parts[2]);
        if (steps != std::floor(steps) || steps < 1 || steps > 1e7)
            throw UsageError("--range steps must be a positive integer");
        r.steps = static_cast<int>(steps);
    }
    if (!(r.lo < r.hi) || !std::isfinite(r.lo) || !std::isfinite(r.hi))
        throw UsageError("--range requires finite lo < hi");
    return r;
}

std::uint64_t parse_seed(const std::string& text) {
    if (text.empty())
        return kDefaultSeed;
    std::string digits = text;
    digits.erase(std::remove(digits.begin(), digits.end(), '_'), digits.end());
    int base = 10;
    if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
        base = 16;
        digits = digits.substr(2);
    }
    std::uint64_t v = 0;
    const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), v, base);
    if (digits.empty() || res.ec != std::errc() || res.ptr != digits.data() + digits.size())
        throw UsageError("--seed expects an unsigned 64-bit integer");
    return v;
}

BoundId parse_id(const std::string& text) {
    const auto id = parse_bound_id(text);
    if (!id)
        throw UsageError("unknown --thm '" + text + "'");
    return *id;
}

int require_n(const RunConfig& c, int fallback) {
    const int n = c.n.value_or(fallback);
    if (n < 3)
        throw UsageError("--n must be at least 3");
    return n;
}

class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw UsageError("cannot open '" + path + "' for writing");
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

void require_format(const RunConfig& c) {
    if (c.format != "json" && c.format != "csv")
        throw UsageError("--format must be json or csv");
}

Range default_bound_range(BoundId id, int n, int k) {
    switch (id) {
    case BoundId::TotalPerimeterGivenArea:
        return {0.1 * k, ((n - 2) * kPi - 0.1) * k, 30};
    case BoundId::TotalAreaGivenPerimeter:
        return {1.0 * k, 4.0 * min_admissible_perimeter(n) * k, 30};
    default:
        return is_multi_polygon(id) ? Range{0.1 * k, 3.0 * k, 30} : Range{0.1, 3.0, 30};
    }
}

int cmd_bounds(const RunConfig& c, std::ostream& out) {
    require_format(c);
    const int n = require_n(c, 6);
    const int k = c.k.value_or(1);
    if (k < 1)
        throw UsageError("--k must be at least 1");
    if (c.thm.empty())
        throw UsageError("bounds needs --thm");
    std::vector<BoundId> ids;
    if (c.thm == "all")
        ids.assign(kAllBounds.begin(), kAllBounds.end());
    else
        ids.push_back(parse_id(c.thm));
    const auto range = parse_range(c.range);
    const bool audit = ids.size() == 1 && ids.front() == BoundId::InradiusFromCircumradius;

    std::vector<BoundResult> rows;
    for (BoundId id : ids) {
        const int kk = is_multi_polygon(id) ? k : 1;
        for (double x : range.value_or(default_bound_range(id, n, kk)).points())
            rows.push_back(evaluate_bound(id, n, kk, x));
    }

    Sink sink(c.out, out);
    if (c.format == "csv") {
        sink.get() << kBoundCsvHeader << (audit ? ",reference_r,discrepancy" : "") << '\n';
        for (const auto& r : rows) {
            sink.get() << bound_csv_row(r);
            if (audit) {
                const double ref = reference_inradius(r.n, r.parameter);
                sink.get() << ',' << format_double(ref) << ',' << format_double(r.value - ref);
            }
            sink.get() << '\n';
        }
    } else {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "bounds";
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json row = to_json(r);
            if (r.id == BoundId::InradiusFromCircumradius) {
                const double ref = reference_inradius(r.n, r.parameter);
                row["reference_r"] = ref;
                row["discrepancy"] = std::isfinite(r.value - ref) ? Json(r.value - ref) : Json();
            }
            arr.push_back(row);
        }
        j["rows"] = arr;
        sink.get() << j.dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    require_format(c);
    std::vector<BoundId> ids;
    if (c.thm.empty() || c.thm == "all") {
        for (BoundId id : kAllBounds)
            if (id != BoundId::InradiusFromCircumradius)
                ids.push_back(id);
    } else {
        ids.push_back(parse_id(c.thm));
        if (ids.front() == BoundId::InradiusFromCircumradius)
            throw UsageError("cor1 is reported by 'bounds' and 'report', not verified");
    }
    VerificationParams p;
    if (c.n)
        p.n = require_n(c, 6);
    p.k = c.k.value_or(2);
    if (p.k < 1)
        throw UsageError("--k must be at least 1");
    if (const auto r = parse_range(c.range)) {
        if (!(r->lo > 0.0))
            throw UsageError("--range must be positive for verify");
        p.range = Interval{r->lo, r->hi};
    }
    if (!(c.tolerance >= 0.0))
        throw UsageError("--tolerance must be non-negative");
    p.tolerance = c.tolerance;
    p.threads = c.threads;
    const int trials = c.trials.value_or(1000);
    if (trials < 1)
        throw UsageError("--trials must be positive");
    const std::uint64_t seed = parse_seed(c.seed);

    std::vector<VerificationReport> reports;
    bool passed = true;
    for (BoundId id : ids) {
        reports.push_back(verify_theorem(id, p, trials, seed));
        passed = passed && reports.back().passed();
    }

    Sink sink(c.out, out);
    if (c.format == "csv") {
        sink.get() << "theorem,k,trials,checked,skipped_by_guard,violations,worst_margin,max_equality_error,passed\n";
        for (const auto& r : reports)
            sink.get() << label(r.id) << ',' << r.k << ',' << r.trials << ',' << r.checked << ','
                       << r.skipped_by_guard << ',' << r.violations << ',' << format_double(r.worst_margin) << ','
                       << format_double(r.max_equality_error) << ',' << (r.passed() ? "true" : "false") << '\n';
    } else {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "verify";
        j["seed"] = seed;
        j["passed"] = passed;
        Json arr = Json::array();
        for (const auto& r : reports)
            arr.push_back(to_json(r));
        j["reports"] = arr;
        sink.get() << j.dump(2) << '\n';
    }
    return passed ? kExitOk : kExitViolation;
}

int cmd_sample(const RunConfig& c, std::ostream& out) {
    require_format(c);
    if (c.kind != "cyclic" && c.kind != "tangential")
        throw UsageError("--kind must be cyclic or tangential");
    const bool tangential = c.kind == "tangential";
    if (c.n)
        require_n(c, 6);
    const auto range = parse_range(c.range).value_or(Range{0.05, 3.0, 1});
    if (!(range.lo > 0.0))
        throw UsageError("--range must be positive for sample");
    const int count = c.trials.value_or(10);
    if (count < 1)
        throw UsageError("--trials must be positive");
    const std::uint64_t seed = parse_seed(c.seed);

    Json polys = Json::array();
    std::vector<std::string> csv_rows;
    for (int i = 0; i < count; ++i) {
        TrialRng rng(seed, {0x5a3f1e, static_cast<std::uint64_t>(i)});
        const int n = c.n ? *c.n : rng.uniform_int(3, 12);
        std::optional<Polygon> poly;
        double hi = range.hi;
        if (tangential)
            hi = std::min(hi, max_regular_inradius(n) * (1.0 - 1e-9));
        if (!(range.lo < hi))
            throw UsageError("--range admits no tangential " + std::to_string(n) + "-gon");
        for (int attempt = 0; attempt < 1000 && !poly; ++attempt) {
            const double radius = rng.uniform(range.lo, hi);
            try {
                if (c.regular)
                    poly = tangential ? Polygon(TangentialPolygon::regular(n, radius))
                                      : Polygon(CyclicPolygon::regular(n, radius));
                else
                    poly = tangential ? Polygon(random_tangential(rng, n, radius, 50))
                                      : Polygon(random_cyclic(rng, n, radius));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::IdealVertex)
                    throw;
            }
        }
        if (!poly)
            throw Error(ErrorCode::IdealVertex, "could not sample a finite tangential polygon");
        const Embedding e = embed(*poly);
        const double cp = perimeter(*poly), mp = measured_perimeter(e);
        const double ca = area(*poly), ma = measured_area(e);
        Json item;
        item["polygon"] = polygon_to_json(*poly);
        item["closed_form"] = {{"perimeter", cp}, {"area", ca}, {"interior_angles", interior_angles(*poly)}};
        item["measured"] = {{"perimeter", mp}, {"area", ma}, {"interior_angles", measured_interior_angles(e)}};
        polys.push_back(item);
        csv_rows.push_back(std::to_string(i) + ',' + c.kind + ',' + std::to_string(n) + ',' +
                           format_double(radius_of(*poly)) + ',' + format_double(cp) + ',' + format_double(mp) +
                           ',' + format_double(ca) + ',' + format_double(ma));
    }

    Sink sink(c.out, out);
    if (c.format == "csv") {
        sink.get() << "index,kind,n,radius,perimeter,measured_perimeter,area,measured_area\n";
        for (const auto& row : csv_rows)
            sink.get() << row << '\n';
    } else {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "sample";
        j["seed"] = seed;
        j["polygons"] = polys;
        sink.get() << j.dump(2) << '\n';
    }
    return kExitOk;
}

std::string objective_for(BoundId id) {
    switch (id) {
    case BoundId::TangentialPerimeter: return "tangent_length";
    case BoundId::CyclicPerimeter: return "half_side";
    case BoundId::TangentialArea: return "tangential_angle";
    case BoundId::CyclicArea: return "cyclic_angle";
    case BoundId::TotalPerimeterCircumradii: return "half_side_by_radius";
    case BoundId::TotalPerimeterInradii: return "tangent_length_by_radius";
    case BoundId::TotalAreaCircumradii: return "cyclic_angle_by_radius";
    case BoundId::TotalAreaInradii: return "tangential_angle_by_radius";
    case BoundId::TotalPerimeterGivenArea: return "perimeter_from_area";
    case BoundId::TotalAreaGivenPerimeter: return "area_from_perimeter";
    default: throw UsageError("cor1 has no optimization problem");
    }
}

bool angle_valued(const std::string& objective) {
    return objective == "tangent_length" || objective == "half_side" || objective == "tangential_angle" ||
           objective == "cyclic_angle" || objective == "perimeter_from_area";
}

int cmd_optimize(const RunConfig& c, std::ostream& out) {
    require_format(c);
    std::string name = c.objective;
    if (name.empty())
        name = objective_for(c.thm.empty() ? BoundId::CyclicPerimeter : parse_id(c.thm));
    else if (!c.thm.empty())
        throw UsageError("give either --thm or --objective, not both");
    const int n = require_n(c, 6);
    const int k = c.k.value_or(2);
    if (k < 2)
        throw UsageError("--k must be at least 2");
    if (c.radius && !(*c.radius > 0.0))
        throw UsageError("--radius must be positive");
    const auto objs = registered_objectives(n, c.radius.value_or(1.0), c.radius.value_or(0.5));
    const auto it = std::find_if(objs.begin(), objs.end(),
                                 [&](const auto& o) { return o.problem_template.objective.name == name; });
    if (it == objs.end())
        throw UsageError("unknown --objective '" + name + "'");
    SeparableProblem p = instantiate(*it, k);
    if (auto r = parse_range(c.range)) {
        const double scale = c.degrees && angle_valued(name) ? kPi / 180.0 : 1.0;
        p.interval = {r->lo * scale, r->hi * scale};
        p.total = k * 0.5 * (p.interval.lo + p.interval.hi);
    }
    if (c.total)
        p.total = *c.total;
    try {
        p.validate();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    const auto report = solve_equal_sum(p, parse_seed(c.seed));

    Sink sink(c.out, out);
    if (c.format == "csv") {
        sink.get() << "coordinate,argopt,uniform\n";
        for (size_t i = 0; i < report.argopt.size(); ++i)
            sink.get() << i << ',' << format_double(report.argopt[i]) << ',' << format_double(p.uniform_value())
                       << '\n';
    } else {
        sink.get() << to_json(report).dump(2) << '\n';
    }
    const bool consistent = report.certificate.curvature != Curvature::Mixed;
    return consistent && report.oracle && !report.oracle_agreement ? kExitViolation : kExitOk;
}

int cmd_report(const RunConfig& c, std::ostream& out) {
    require_format(c);
    AcceptanceOptions opts;
    opts.seed = parse_seed(c.seed);
    opts.threads = c.threads;
    const auto results = run_acceptance(opts);
    const auto bundle = render_bundle(results, opts.seed);
    if (c.out.empty()) {
        out << bundle.at(c.format == "csv" ? "criteria.csv" : "report.md");
    } else {
        std::error_code ec;
        std::filesystem::create_directories(c.out, ec);
        if (ec)
            throw UsageError("cannot create directory '" + c.out + "'");
        for (const auto& [name, content] : bundle) {
            std::ofstream f(std::filesystem::path(c.out) / name, std::ios::binary);
            if (!f)
                throw UsageError("cannot write '" + name + "' in '" + c.out + "'");
            f << content;
        }
    }
    const bool passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    return passed ? kExitOk : kExitViolation;
}

void add_common(CLI::App* app, RunConfig& c) {
    app->add_option("--seed", c.seed, "64-bit seed, decimal or 0x-prefixed hex (default 0x15090001)");
    app->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--out", c.out, "output path (directory for report)");
    app->add_option("--threads", c.threads, "worker threads, 0 for all cores");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hyperbolic isoperimetric bounds: tabulation, verification and optimization"};
    app.name("hypiso");
    app.require_subcommand(1);
    RunConfig c;

    auto* bounds = app.add_subcommand("bounds", "tabulate a bound over a parameter sweep");
    bounds->add_option("--thm", c.thm, "bound id (1.1 ... 1.10, cor1) or all")->required();
    bounds->add_option("--n", c.n, "number of sides (default 6)");
    bounds->add_option("--k", c.k, "number of polygons for multi-polygon bounds (default 1)");
    bounds->add_option("--range", c.range, "lo:hi:steps, inclusive");
    add_common(bounds, c);

    auto* verify = app.add_subcommand("verify", "randomized verification campaign");
    verify->add_option("--thm", c.thm, "bound id or all (default all)");
    verify->add_option("--n", c.n, "fixed number of sides (default random 3..12)");
    verify->add_option("--k", c.k, "number of polygons for multi-polygon bounds (default 2)");
    verify->add_option("--range", c.range, "radius range, or total range for multi-polygon bounds");
    verify->add_option("--trials", c.trials, "trials per bound (default 1000)");
    verify->add_option("--tolerance", c.tolerance, "relative inequality tolerance (default 1e-12)");
    add_common(verify, c);

    auto* sample = app.add_subcommand("sample", "emit random valid polygons with their metrics");
    sample->add_option("--kind", c.kind, "cyclic or tangential (default cyclic)");
    sample->add_option("--n", c.n, "number of sides (default random 3..12)");
    sample->add_option("--range", c.range, "radius range lo:hi (default 0.05:3)");
    sample->add_option("--trials", c.trials, "number of polygons (default 10)");
    sample->add_flag("--regular", c.regular, "emit regular polygons");
    add_common(sample, c);

    auto* optimize = app.add_subcommand("optimize", "solve the equal-sum problem behind a bound");
    optimize->add_option("--thm", c.thm, "bound id selecting the objective");
    optimize->add_option("--objective", c.objective, "objective name");
    optimize->add_option("--n", c.n, "number of sides (default 6)");
    optimize->add_option("--k", c.k, "number of variables (default 2)");
    optimize->add_option("--range", c.range, "override the feasible interval lo:hi");
    optimize->add_option("--radius", c.radius, "circumradius or inradius of the sector objectives");
    optimize->add_option("--total", c.total, "constraint total (default k times the uniform point)");
    optimize->add_flag("--degrees", c.degrees, "read angle-valued ranges in degrees");
    add_common(optimize, c);

    auto* report = app.add_subcommand("report", "run the acceptance battery and render the report bundle");
    add_common(report, c);

    std::vector<std::string> argv_storage{"hypiso"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "hypiso: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (bounds->parsed())
            return cmd_bounds(c, out);
        if (verify->parsed())
            return cmd_verify(c, out);
        if (sample->parsed())
            return cmd_sample(c, out);
        if (optimize->parsed())
            return cmd_optimize(c, out);
        return cmd_report(c, out);
    } catch (const UsageError& e) {
        err << "hypiso: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "hypiso: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace hypiso

#include "hypiso/optimize.hpp"

#include "hypiso/error.hpp"
#include "hypiso/hypmath.hpp"
#include "hypiso/polygon.hpp"
#include "hypiso/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace hypiso {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kCertificatePoints = 64;
constexpr int kRandomStarts = 8;
constexpr double kGradientStep = 1e-6;
constexpr double kMinStep = 1e-12;
constexpr int kMaxIterations = 100000;

double safe_call(const ScalarFunction& f, double x) {
    try {
        return f(x);
    } catch (const Error&) {
        return kNaN;
    }
}

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

double sense_sign(Sense s) { return s == Sense::Minimize ? 1.0 : -1.0; }

struct Descent {
    std::vector<double> x;
    double value;
    int iterations;
};

// Minimizes sign * F on the constraint plane starting from x.
Descent project_descend(const SeparableProblem& p, std::vector<double> x) {
    const double sign = sense_sign(p.sense);
    const size_t k = x.size();
    auto objective = [&](const std::vector<double>& y) { return sign * p.evaluate(y); };
    double value = objective(x);
    double step = 0.1 * p.interval.width();
    std::vector<double> g(k), trial(k);
    int it = 0;
    for (; it < kMaxIterations && step >= kMinStep; ++it) {
        for (size_t i = 0; i < k; ++i) {
            const double room = std::min(x[i] - p.interval.lo, p.interval.hi - x[i]);
            const double h = std::min(kGradientStep, 0.5 * room);
            const double fp = safe_call(p.objective.f, x[i] + h);
            const double fm = safe_call(p.objective.f, x[i] - h);
            g[i] = sign * (fp - fm) / (2.0 * h);
        }
        const double mean = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(k);
        double norm = 0.0;
        for (double& gi : g) {
            gi -= mean;
            norm += gi * gi;
        }
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm))
            break;
        for (size_t i = 0; i < k; ++i)
            trial[i] = x[i] - step * g[i] / norm;
        const double v = objective(trial);
        if (std::isfinite(v) && v < value) {
            x = trial;
            value = v;
            step *= 2.0;
        } else {
            step *= 0.5;
        }
    }
    return {std::move(x), sign * value, it};
}

std::vector<double> random_start(TrialRng& rng, const SeparableProblem& p) {
    const size_t k = static_cast<size_t>(p.k);
    const double u = p.uniform_value();
    std::vector<double> d(k);
    for (double& di : d)
        di = rng.uniform(-1.0, 1.0);
    const double mean = std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(k);
    double limit = std::numeric_limits<double>::infinity();
    for (double& di : d) {
        di -= mean;
        if (di > 0.0)
            limit = std::min(limit, (p.interval.hi - u) / di);
        else if (di < 0.0)
            limit = std::min(limit, (p.interval.lo - u) / di);
    }
    if (!std::isfinite(limit))
        limit = 0.0;
    const double t = rng.uniform(0.05, 0.9) * limit;
    std::vector<double> x(k);
    for (size_t i = 0; i < k; ++i)
        x[i] = u + t * d[i];
    return x;
}

} // namespace

std::string_view to_string(Sense s) noexcept {
    return s == Sense::Minimize ? "minimize" : "maximize";
}

std::string_view to_string(Curvature c) noexcept {
    switch (c) {
    case Curvature::Convex: return "convex";
    case Curvature::Concave: return "concave";
    case Curvature::Mixed: return "mixed";
    }
    return "?";
}

ConvexityCertificate certify_convexity(const ScalarFunction& f, Interval interval, int grid_points) {
    if (grid_points < 16)
        throw Error(ErrorCode::InvalidArgument, "certificate needs at least 16 grid points");
    if (!(interval.hi > interval.lo) || !std::isfinite(interval.width()))
        throw Error(ErrorCode::InvalidArgument, "interval is empty");
    const double w = interval.width();
    const double h = 1e-5 * w;
    ConvexityCertificate cert;
    int first_sign = 0;
    bool mixed = false;
    for (int j = 1; j <= grid_points; ++j) {
        const double x = interval.lo + w * j / (grid_points + 1);
        const double fm = safe_call(f, x - h);
        const double f0 = safe_call(f, x);
        const double fp = safe_call(f, x + h);
        if (!std::isfinite(fm) || !std::isfinite(f0) || !std::isfinite(fp))
            throw Error(ErrorCode::EvaluationFailure,
                        "objective is not finite near x = " + std::to_string(x));
        const double d2 = (fm - 2.0 * f0 + fp) / (h * h);
        cert.grid.push_back(x);
        cert.second_differences.push_back(d2);
        const int s = sign_of(d2);
        if (j == 1)
            first_sign = s;
        if (s == 0 || s != first_sign) {
            if (!mixed)
                cert.first_violation = x;
            mixed = true;
        }
    }
    if (mixed)
        cert.curvature = Curvature::Mixed;
    else
        cert.curvature = first_sign > 0 ? Curvature::Convex : Curvature::Concave;
    return cert;
}

void SeparableProblem::validate() const {
    if (k < 2)
        throw Error(ErrorCode::InvalidArgument, "need at least two variables");
    if (!objective.f)
        throw Error(ErrorCode::InvalidArgument, "objective is empty");
    if (!interval.contains(uniform_value()))
        throw Error(ErrorCode::InvalidArgument, "uniform point c/k lies outside the interval");
}

double SeparableProblem::evaluate(const std::vector<double>& x) const {
    double sum = 0.0;
    for (double xi : x) {
        if (!interval.contains(xi))
            return kNaN;
        sum += safe_call(objective.f, xi);
    }
    return sum;
}

OracleResult grid_oracle(const SeparableProblem& problem, int resolution) {
    problem.validate();
    if (problem.k > 3)
        throw Error(ErrorCode::OracleTooLarge, "grid oracle supports k = 2 or 3");
    if (resolution < 50)
        throw Error(ErrorCode::InvalidArgument, "oracle resolution must be at least 50");
    const double sign = sense_sign(problem.sense);
    const double u = problem.uniform_value();
    const double step = problem.interval.width() / resolution;
    OracleResult best;
    best.cell = step;
    best.resolution = resolution;
    double best_key = std::numeric_limits<double>::infinity();
    auto consider = [&](std::vector<double> x) {
        const double v = problem.evaluate(x);
        if (!std::isfinite(v))
            return;
        ++best.evaluated;
        if (sign * v < best_key) {
            best_key = sign * v;
            best.value = v;
            best.point = std::move(x);
        }
    };
    if (problem.k == 2) {
        for (int i = -resolution; i <= resolution; ++i)
            consider({u + i * step, u - i * step});
    } else {
        for (int i = -resolution; i <= resolution; ++i)
            for (int j = -resolution; j <= resolution; ++j)
                consider({u + i * step, u + j * step, u - (i + j) * step});
    }
    if (best.point.empty())
        throw Error(ErrorCode::EvaluationFailure, "objective is not finite anywhere on the grid");
    return best;
}

bool oracle_agrees(const SeparableProblem& problem, const OptimizationReport& report,
                   const OracleResult& oracle) {
    const double sign = sense_sign(problem.sense);
    double change = 0.0;
    for (size_t i = 0; i < oracle.point.size(); ++i) {
        if (std::abs(report.argopt[i] - oracle.point[i]) > oracle.cell * (1.0 + 1e-9))
            return false;
        const double f0 = safe_call(problem.objective.f, oracle.point[i]);
        double local = 0.0;
        for (double x : {oracle.point[i] - oracle.cell, oracle.point[i] + oracle.cell}) {
            const double fx = safe_call(problem.objective.f, x);
            if (std::isfinite(fx))
                local = std::max(local, std::abs(fx - f0));
        }
        change += local;
    }
    const double slack = 1e-12 * std::max(1.0, std::abs(oracle.value));
    if (sign * report.objective_at_argopt > sign * oracle.value + slack)
        return false;
    return std::abs(report.objective_at_argopt - oracle.value) <= change + slack;
}

OptimizationReport solve_equal_sum(const SeparableProblem& problem, std::uint64_t seed) {
    problem.validate();
    OptimizationReport r;
    r.objective = problem.objective.name;
    r.k = problem.k;
    r.total = problem.total;
    r.interval = problem.interval;
    r.sense = problem.sense;
    r.certificate = certify_convexity(problem.objective.f, problem.interval, kCertificatePoints);
    r.certified = (problem.sense == Sense::Minimize && r.certificate.curvature == Curvature::Convex) ||
                  (problem.sense == Sense::Maximize && r.certificate.curvature == Curvature::Concave);

    const double u = problem.uniform_value();
    const std::vector<double> uniform(static_cast<size_t>(problem.k), u);
    r.uniform_point_objective = problem.evaluate(uniform);

    std::vector<std::vector<double>> starts{uniform};
    for (int s = 0; s < kRandomStarts; ++s) {
        TrialRng rng(seed, {0x0b7e'0001, static_cast<std::uint64_t>(problem.k), static_cast<std::uint64_t>(s)});
        starts.push_back(random_start(rng, problem));
    }
    const double sign = sense_sign(problem.sense);
    double best_key = std::numeric_limits<double>::infinity();
    for (const auto& start : starts) {
        auto d = project_descend(problem, start);
        if (sign * d.value < best_key) {
            best_key = sign * d.value;
            r.argopt = d.x;
            r.objective_at_argopt = d.value;
        }
        r.trajectory.push_back({start, std::move(d.x), d.value, d.iterations});
    }
    for (double x : r.argopt)
        r.max_deviation_from_uniform = std::max(r.max_deviation_from_uniform, std::abs(x - u));

    if (problem.k == 2 || problem.k == 3) {
        r.oracle = grid_oracle(problem, problem.k == 2 ? 200 : 60);
        r.oracle_agreement = oracle_agrees(problem, r, *r.oracle);
    }
    return r;
}

std::vector<RegisteredObjective> registered_objectives(int n, double R, double r) {
    if (n < 3)
        throw Error(ErrorCode::InvalidArgument, "n must be at least 3");
    const double regular = 2.0 * kPi / n;
    const double theta_max_t = max_tangential_theta(r);
    const double r_max = max_regular_inradius(n);
    const double angle_star = 2.0 * std::asin(std::sqrt(1.0 - std::sin(kPi / n)));
    const double perimeter_star = 2.0 * n * std::acosh(std::sqrt(1.0 + std::sin(kPi / n)));
    const double c = std::cos(kPi / n);

    auto make = [](std::string name, ScalarFunction f, Interval I, Sense s, double u) {
        RegisteredObjective o;
        o.problem_template.objective = {std::move(name), std::move(f)};
        o.problem_template.interval = I;
        o.problem_template.sense = s;
        o.uniform_point = u;
        return o;
    };

    std::vector<RegisteredObjective> out;
    out.push_back(make("tangent_length", [r](double t) { return tangential_tangent_length(t, r); },
                       {0.0, theta_max_t}, Sense::Minimize, regular));
    out.push_back(make("half_side", [R](double t) { return cyclic_half_side(t, R); }, {0.0, kPi},
                       Sense::Maximize, regular));
    out.push_back(make("tangential_angle", [r](double t) { return tangential_interior_angle(t, r); },
                       {0.0, theta_max_t}, Sense::Maximize, regular));
    out.push_back(make("cyclic_angle", [R](double t) { return cyclic_half_angle(t, R); }, {0.0, kPi},
                       Sense::Maximize, regular));
    out.push_back(make(
        "perimeter_from_area", [c](double t) { return std::acosh(c / std::sin(0.5 * t)); },
        {0.0, angle_star}, Sense::Minimize, 0.5 * angle_star));
    out.push_back(make(
        "area_from_perimeter", [c, n](double x) { return std::asin(c / std::cosh(x / (2.0 * n))); },
        {perimeter_star, 4.0 * perimeter_star}, Sense::Minimize, 2.5 * perimeter_star));
    out.push_back(make("half_side_by_radius", [regular](double x) { return cyclic_half_side(regular, x); },
                       {0.0, 3.0}, Sense::Minimize, 1.5));
    out.push_back(make("tangent_length_by_radius",
                       [regular](double x) { return tangential_tangent_length(regular, x); },
                       {0.0, r_max}, Sense::Minimize, 0.5 * r_max));
    out.push_back(make("cyclic_angle_by_radius",
                       [regular](double x) { return cyclic_half_angle(regular, x); }, {0.0, 3.0},
                       Sense::Maximize, 1.5));
    out.push_back(make("tangential_angle_by_radius",
                       [regular](double x) { return 0.5 * tangential_interior_angle(regular, x); },
                       {0.0, r_max}, Sense::Maximize, 0.5 * r_max));
    return out;
}

SeparableProblem instantiate(const RegisteredObjective& obj, int k) {
    SeparableProblem p = obj.problem_template;
    p.k = k;
    p.total = k * obj.uniform_point;
    return p;
}

} // namespace hypiso

#include "hypiso/verify.hpp"

#include "hypiso/error.hpp"
#include "hypiso/parallel.hpp"
#include "hypiso/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hypiso {

namespace {

constexpr int kSplitAttempts = 100;

struct TrialOutcome {
    bool checked = false;
    int n = 0;
    double parameter = 0;
    double bound = 0;
    double measured = 0;
    double margin = 0;
    bool violation = false;
    bool equality_checked = false;
    double equality_error = 0;
    std::vector<Polygon> polygons;
};

bool is_tangential(BoundId id) {
    return id == BoundId::TangentialPerimeter || id == BoundId::TangentialArea ||
           id == BoundId::TotalPerimeterInradii || id == BoundId::TotalAreaInradii;
}

bool measures_area(BoundId id) {
    switch (id) {
    case BoundId::TangentialArea:
    case BoundId::CyclicArea:
    case BoundId::TotalAreaCircumradii:
    case BoundId::TotalAreaInradii:
    case BoundId::TotalAreaGivenPerimeter:
        return true;
    default:
        return false;
    }
}

double relative(double x, double scale) { return x / std::max(1.0, std::abs(scale)); }

double measure(BoundId id, const Polygon& p) { return measures_area(id) ? area(p) : perimeter(p); }

/// Regular polygon carrying the per-polygon quantity x of a multi-polygon bound.
Polygon regular_member(BoundId id, int n, double x) {
    switch (id) {
    case BoundId::TotalPerimeterCircumradii:
    case BoundId::TotalAreaCircumradii:
        return CyclicPolygon::regular(n, x);
    case BoundId::TotalPerimeterInradii:
    case BoundId::TotalAreaInradii:
        return TangentialPolygon::regular(n, x);
    case BoundId::TotalPerimeterGivenArea: {
        const auto m = regular_convert({n, InteriorAngle{((n - 2) * kPi - x) / n}});
        return CyclicPolygon::regular(n, m.circumradius);
    }
    case BoundId::TotalAreaGivenPerimeter: {
        const auto m = regular_convert({n, SideLength{x / n}});
        return CyclicPolygon::regular(n, m.circumradius);
    }
    default:
        throw Error(ErrorCode::InvalidArgument, "not a multi-polygon bound");
    }
}

/// Measure of a regular member, taken straight from the defining quantity
/// where the polygon module would first have to reconstruct it.
double member_measure(BoundId id, int n, double x) {
    switch (id) {
    case BoundId::TotalPerimeterGivenArea:
        return regular_convert({n, InteriorAngle{((n - 2) * kPi - x) / n}}).perimeter;
    case BoundId::TotalAreaGivenPerimeter:
        return regular_convert({n, SideLength{x / n}}).area;
    default:
        return measure(id, regular_member(id, n, x));
    }
}

struct MemberRange {
    double lower;
    double upper;
    Interval default_mean;
};

MemberRange member_range(BoundId id, int n) {
    const double r_max = max_regular_inradius(n);
    switch (id) {
    case BoundId::TotalPerimeterCircumradii:
    case BoundId::TotalAreaCircumradii:
        return {0.0, kMaxLength, {0.05, 3.0}};
    case BoundId::TotalPerimeterInradii:
    case BoundId::TotalAreaInradii:
        return {0.0, r_max, {0.05, std::min(3.0, r_max)}};
    case BoundId::TotalPerimeterGivenArea:
        return {min_admissible_area(n), (n - 2) * kPi, {min_admissible_area(n), (n - 2) * kPi}};
    case BoundId::TotalAreaGivenPerimeter:
        return {min_admissible_perimeter(n), kMaxLength,
                {min_admissible_perimeter(n), 3.0 * min_admissible_perimeter(n)}};
    default:
        throw Error(ErrorCode::InvalidArgument, "not a multi-polygon bound");
    }
}

void score(TrialOutcome& out, const BoundResult& b, const VerificationParams& params) {
    out.margin = b.kind == BoundKind::Lower ? out.measured - out.bound : out.bound - out.measured;
    out.violation = out.margin < -params.tolerance * std::max(1.0, std::abs(out.bound));
    out.checked = true;
}

TrialOutcome single_trial(BoundId id, const VerificationParams& params, TrialRng& rng) {
    TrialOutcome out;
    out.n = params.n ? *params.n : rng.uniform_int(3, 12);
    const Interval range = params.range.value_or(Interval{0.05, 3.0});
    double hi = range.hi;
    if (is_tangential(id))
        hi = std::min(hi, max_regular_inradius(out.n) * (1.0 - 1e-9));
    if (!(range.lo < hi))
        return out;
    out.parameter = rng.uniform(range.lo, hi);
    const BoundResult b = evaluate_bound(id, out.n, 1, out.parameter);
    if (!b.feasible)
        return out;
    out.bound = b.value;
    try {
        if (is_tangential(id))
            out.polygons.emplace_back(random_tangential(rng, out.n, out.parameter));
        else
            out.polygons.emplace_back(random_cyclic(rng, out.n, out.parameter));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::IdealVertex)
            throw;
        return out;
    }
    out.measured = measure(id, out.polygons.front());
    score(out, b, params);

    const Polygon regular = is_tangential(id) ? Polygon(TangentialPolygon::regular(out.n, out.parameter))
                                              : Polygon(CyclicPolygon::regular(out.n, out.parameter));
    out.equality_checked = true;
    out.equality_error = relative(std::abs(measure(id, regular) - out.bound), out.bound);
    return out;
}

TrialOutcome multi_trial(BoundId id, const VerificationParams& params, TrialRng& rng) {
    TrialOutcome out;
    out.n = params.n ? *params.n : rng.uniform_int(3, 12);
    const int k = params.k;
    const MemberRange members = member_range(id, out.n);
    out.parameter = params.range ? rng.uniform(params.range->lo, params.range->hi)
                                 : k * rng.uniform(members.default_mean.lo, members.default_mean.hi);
    BoundResult b;
    try {
        b = evaluate_bound(id, out.n, k, out.parameter);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::InvalidTotal && e.code() != ErrorCode::OutOfRange)
            throw;
        return out;
    }
    if (!b.feasible || !(out.parameter > k * members.lower))
        return out;
    out.bound = b.value;

    std::vector<double> split;
    for (int attempt = 0; attempt < kSplitAttempts && split.empty(); ++attempt) {
        auto candidate = random_split(rng, k, out.parameter, members.lower);
        if (std::all_of(candidate.begin(), candidate.end(), [&](double x) { return x < members.upper; }))
            split = std::move(candidate);
    }
    if (split.empty())
        return out;
    try {
        for (double x : split) {
            out.measured += member_measure(id, out.n, x);
            out.polygons.push_back(regular_member(id, out.n, x));
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::IdealVertex && e.code() != ErrorCode::Infeasible)
            throw;
        out.polygons.clear();
        out.measured = 0;
        return out;
    }
    score(out, b, params);

    out.equality_checked = true;
    const double uniform = k * member_measure(id, out.n, out.parameter / k);
    out.equality_error = relative(std::abs(uniform - out.bound), out.bound);
    return out;
}

} // namespace

VerificationReport verify_theorem(BoundId id, const VerificationParams& params, int trials,
                                  std::uint64_t seed) {
    if (id == BoundId::InradiusFromCircumradius)
        throw Error(ErrorCode::InvalidArgument, "cor1 is reported, not verified");
    if (trials < 0)
        throw Error(ErrorCode::InvalidArgument, "trial count must be non-negative");
    if (params.n && *params.n < 3)
        throw Error(ErrorCode::InvalidArgument, "n must be at least 3");
    if (params.k < 1)
        throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
    if (params.range && !(params.range->lo < params.range->hi && params.range->lo > 0.0))
        throw Error(ErrorCode::InvalidArgument, "range must satisfy 0 < lo < hi");

    const bool multi = is_multi_polygon(id);
    std::vector<TrialOutcome> outcomes(static_cast<size_t>(trials));
    parallel_for(outcomes.size(), params.threads, [&](size_t i) {
        TrialRng rng(seed, {static_cast<std::uint64_t>(id), static_cast<std::uint64_t>(multi ? params.k : 1),
                            static_cast<std::uint64_t>(i)});
        outcomes[i] = multi ? multi_trial(id, params, rng) : single_trial(id, params, rng);
    });

    VerificationReport r;
    r.id = id;
    r.k = multi ? params.k : 1;
    r.trials = trials;
    r.tolerance = params.tolerance;
    r.equality_tolerance = params.equality_tolerance;
    r.worst_margin = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < outcomes.size(); ++i) {
        auto& o = outcomes[i];
        if (!o.checked) {
            ++r.skipped_by_guard;
            continue;
        }
        ++r.checked;
        r.worst_margin = std::min(r.worst_margin, relative(o.margin, o.bound));
        if (o.violation) {
            ++r.violations;
            if (r.counterexamples.size() < kMaxCounterexamples)
                r.counterexamples.push_back({static_cast<int>(i), o.n, o.parameter, o.bound, o.measured,
                                             o.margin, std::move(o.polygons)});
        }
        if (o.equality_checked) {
            ++r.equality_checks;
            r.max_equality_error = std::max(r.max_equality_error, o.equality_error);
            if (o.equality_error > params.equality_tolerance)
                ++r.equality_failures;
        }
    }
    return r;
}

} // namespace hypiso

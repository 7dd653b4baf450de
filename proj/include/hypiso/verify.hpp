#pragma once

// Randomized verification campaigns for the bounds: sample valid instances,
// compare each against its bound, and check the equality configuration.

#include "hypiso/bounds.hpp"
#include "hypiso/optimize.hpp"
#include "hypiso/polygon.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hypiso {

struct VerificationParams {
    /// Fixed n, or uniform in [3, 12] per trial.
    std::optional<int> n;
    /// Radius range for single-polygon bounds, total range for the others.
    /// Defaults: radius in [0.05, 3]; totals are k times a per-polygon mean
    /// drawn from [0.05, 3] (radii), the admissible area range, or
    /// [P*, 3 P*] for perimeters, P* the admissibility threshold.
    std::optional<Interval> range;
    int k = 2;
    /// Inequality tolerance, relative to max(1, |bound|).
    double tolerance = 1e-12;
    /// Equality-case tolerance, relative to max(1, |bound|).
    double equality_tolerance = 1e-9;
    /// Worker threads; 0 uses the hardware concurrency.
    int threads = 0;
};

struct Counterexample {
    int trial = 0;
    int n = 0;
    double parameter = 0;
    double bound = 0;
    double measured = 0;
    /// measured - bound for lower bounds, bound - measured for upper bounds.
    double margin = 0;
    std::vector<Polygon> polygons;
};

struct VerificationReport {
    BoundId id = BoundId::TangentialPerimeter;
    int k = 1;
    int trials = 0;
    int checked = 0;
    int skipped_by_guard = 0;
    int violations = 0;
    /// Smallest margin relative to max(1, |bound|) over checked trials;
    /// +inf when nothing was checked.
    double worst_margin = 0;
    int equality_checks = 0;
    int equality_failures = 0;
    double max_equality_error = 0;
    double tolerance = 0;
    double equality_tolerance = 0;
    /// The first few violations in trial order.
    std::vector<Counterexample> counterexamples;

    bool passed() const noexcept { return violations == 0 && equality_failures == 0; }
};

inline constexpr std::size_t kMaxCounterexamples = 5;

/// Runs `trials` seeded trials of the bound `id`. Throws InvalidArgument for
/// cor1, which is reported rather than verified.
VerificationReport verify_theorem(BoundId id, const VerificationParams& params, int trials,
                                  std::uint64_t seed);

} // namespace hypiso

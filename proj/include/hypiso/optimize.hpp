#pragma once

// Sum-constrained separable optimization: minimize or maximize
// F(x) = f(x_1) + ... + f(x_k) subject to x_1 + ... + x_k = c with every x_i
// in an open interval. Includes a finite-difference curvature certificate and
// an exhaustive grid oracle for small k.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hypiso {

enum class Sense { Minimize, Maximize };
enum class Curvature { Convex, Concave, Mixed };

std::string_view to_string(Sense s) noexcept;
std::string_view to_string(Curvature c) noexcept;

struct Interval {
    double lo = 0;
    double hi = 1;

    double width() const noexcept { return hi - lo; }
    bool contains(double x) const noexcept { return x > lo && x < hi; }
};

using ScalarFunction = std::function<double(double)>;

struct ConvexityCertificate {
    /// Interior points where the second difference was taken.
    std::vector<double> grid;
    std::vector<double> second_differences;
    Curvature curvature = Curvature::Mixed;
    /// First grid point whose sign disagrees with the first point's sign.
    std::optional<double> first_violation;
};

/// Centered second differences (f(x-h) - 2 f(x) + f(x+h)) / h^2 with
/// h = 1e-5 * width at `grid_points` equally spaced interior points.
/// Throws InvalidArgument for fewer than 16 points or an empty interval and
/// EvaluationFailure when f is not finite at a required point.
ConvexityCertificate certify_convexity(const ScalarFunction& f, Interval interval, int grid_points);

struct Objective {
    std::string name;
    ScalarFunction f;
};

struct SeparableProblem {
    Objective objective;
    int k = 2;
    double total = 0;
    Interval interval;
    Sense sense = Sense::Minimize;

    double uniform_value() const noexcept { return total / k; }
    /// Throws InvalidArgument unless k >= 2 and total / k lies in the interval.
    void validate() const;
    /// F(x), NaN when any coordinate leaves the interval.
    double evaluate(const std::vector<double>& x) const;
};

struct OracleResult {
    std::vector<double> point;
    double value = 0;
    /// Per-axis grid step: interval width / resolution.
    double cell = 0;
    int resolution = 0;
    std::size_t evaluated = 0;
};

/// Exhaustive scan of the lattice {c/k + step * j} restricted to the
/// constraint plane and the open box. Optimizes in the problem's sense.
/// Throws OracleTooLarge for k > 3 and InvalidArgument for resolution < 50.
OracleResult grid_oracle(const SeparableProblem& problem, int resolution);

struct StartSummary {
    std::vector<double> start;
    std::vector<double> end;
    double value = 0;
    int iterations = 0;
};

struct OptimizationReport {
    std::string objective;
    int k = 0;
    double total = 0;
    Interval interval;
    Sense sense = Sense::Minimize;
    /// Best point found (minimizer or maximizer depending on sense).
    std::vector<double> argopt;
    double objective_at_argopt = 0;
    double uniform_point_objective = 0;
    double max_deviation_from_uniform = 0;
    ConvexityCertificate certificate;
    /// True when the certificate's curvature matches the sense.
    bool certified = false;
    std::optional<OracleResult> oracle;
    bool oracle_agreement = false;
    /// One entry per start, uniform start first.
    std::vector<StartSummary> trajectory;
};

/// Projected gradient on the constraint plane from the uniform point and 8
/// seeded random interior starts. Centered difference gradients with
/// h = 1e-6, step halving on failure and doubling on success, stopping when
/// the step falls below 1e-12 or after 1e5 iterations. Runs the grid oracle
/// for k = 2 (resolution 200) and k = 3 (resolution 60).
OptimizationReport solve_equal_sum(const SeparableProblem& problem, std::uint64_t seed);

/// Oracle agreement: every coordinate within one cell, optimizer no worse
/// than the grid, and the value gap inside the one-cell change of F.
bool oracle_agrees(const SeparableProblem& problem, const OptimizationReport& report,
                   const OracleResult& oracle);

struct RegisteredObjective {
    SeparableProblem problem_template;  // k and total filled per run
    /// Claimed optimal point for each coordinate.
    double uniform_point = 0;
};

/// The ten objectives behind the optimality claims, instantiated for an
/// n-gon with circumradius R (cyclic objectives) and inradius r (tangential).
std::vector<RegisteredObjective> registered_objectives(int n = 6, double circumradius = 1.0,
                                                       double inradius = 0.5);

/// Problem for a registered objective with k variables at its uniform point.
SeparableProblem instantiate(const RegisteredObjective& obj, int k);

} // namespace hypiso

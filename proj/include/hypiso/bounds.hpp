#pragma once

// Evaluators for the perimeter and area bounds of cyclic and tangential
// polygons, single and in groups of k. Infeasibility is reported as a flag so
// sweeps can cross admissibility thresholds; nothing here throws for a
// parameter that is merely outside a bound's admissible region.

#include "hypiso/hypmath.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace hypiso {

/// Identifiers follow the numbering used on the command line ("1.1" ... "1.10", "cor1").
enum class BoundId {
    TangentialPerimeter,         // 1.1
    CyclicPerimeter,             // 1.2
    TangentialArea,              // 1.3
    CyclicArea,                  // 1.4
    InradiusFromCircumradius,    // cor1
    TotalPerimeterCircumradii,   // 1.5
    TotalPerimeterInradii,       // 1.6
    TotalAreaCircumradii,        // 1.7
    TotalAreaInradii,            // 1.8
    TotalPerimeterGivenArea,     // 1.9
    TotalAreaGivenPerimeter,     // 1.10
};

inline constexpr std::array<BoundId, 11> kAllBounds = {
    BoundId::TangentialPerimeter,       BoundId::CyclicPerimeter,
    BoundId::TangentialArea,            BoundId::CyclicArea,
    BoundId::InradiusFromCircumradius,  BoundId::TotalPerimeterCircumradii,
    BoundId::TotalPerimeterInradii,     BoundId::TotalAreaCircumradii,
    BoundId::TotalAreaInradii,          BoundId::TotalPerimeterGivenArea,
    BoundId::TotalAreaGivenPerimeter,
};

std::string_view label(BoundId id) noexcept;
std::optional<BoundId> parse_bound_id(std::string_view text) noexcept;
/// True for the bounds over k polygons with a prescribed total.
bool is_multi_polygon(BoundId id) noexcept;

enum class BoundKind { Lower, Upper };
enum class Measure { Perimeter, Area, Inradius };

std::string_view to_string(BoundKind kind) noexcept;
std::string_view to_string(Measure m) noexcept;

struct BoundResult {
    BoundId id = BoundId::TangentialPerimeter;
    int n = 3;
    int k = 1;
    /// Radius for single-polygon bounds, total T for the others.
    double parameter = 0;
    double value = 0;
    BoundKind kind = BoundKind::Lower;
    Measure measure = Measure::Perimeter;
    bool feasible = true;
    /// Signed distance to the admissibility threshold, positive inside.
    std::optional<double> guard_margin;
    /// Extremal configuration: `copies` identical regular polygons.
    std::optional<RegularNGonSpec> equality_spec;
    int copies = 1;
};

BoundResult tangential_perimeter_lower(int n, double inradius);
BoundResult cyclic_perimeter_upper(int n, double circumradius);
BoundResult tangential_area_lower(int n, double inradius);
BoundResult cyclic_area_lower(int n, double circumradius);

/// Inradius bound from the circumradius, evaluated exactly as printed:
/// asinh(tan(pi/n) / tan(2n asinh(sin(pi/n) sinh R))). Reported, never asserted.
BoundResult inradius_lower_as_printed(int n, double circumradius);
/// Inradius of the regular n-gon with circumradius R: atanh(cos(pi/n) tanh R).
double reference_inradius(int n, double circumradius);

BoundResult total_perimeter_given_circumradii(int n, int k, double total);
BoundResult total_perimeter_given_inradii(int n, int k, double total);
BoundResult total_area_given_circumradii(int n, int k, double total);
BoundResult total_area_given_inradii(int n, int k, double total);

/// Lower bound on total perimeter for k polygons of total area T. Throws
/// InvalidTotal unless 0 < T < k(n-2)pi.
BoundResult total_perimeter_given_area(int n, int k, double total);
/// Upper bound on total area for k polygons of total perimeter T, using
/// cosh(T/(2nk)) inside the arcsine. Throws InvalidTotal unless T > 0.
BoundResult total_area_given_perimeter(int n, int k, double total);
/// Same bound with cos(T/(2nk)) in place of cosh, kept for the audit table.
double total_area_given_perimeter_with_cos(int n, int k, double total);

/// Per-polygon area above which the total-area bound is admissible.
double min_admissible_area(int n);
/// Per-polygon perimeter above which the total-perimeter bound is admissible.
double min_admissible_perimeter(int n);
/// Largest regular-polygon interior angle for which the perimeter-from-angle
/// function is convex: 2 asin(sqrt(1 - sin(pi/n))).
double convexity_angle_threshold(int n);

/// Dispatch on id; `k` is ignored for single-polygon bounds.
BoundResult evaluate_bound(BoundId id, int n, int k, double parameter);

/// Pushes `equality_spec` through regular_convert and scales by `copies`.
/// Throws InvalidArgument when the result carries no equality spec.
double equality_value(const BoundResult& r);

} // namespace hypiso

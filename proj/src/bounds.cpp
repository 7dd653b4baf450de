#include "hypiso/bounds.hpp"

#include "hypiso/error.hpp"
#include "hypmath_detail.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace hypiso {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_shape(int n, int k) {
    if (n < 3)
        throw Error(ErrorCode::InvalidArgument, "n must be at least 3");
    if (k < 1)
        throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
}

void require_radius(double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw Error(ErrorCode::InvalidArgument, "radius must be positive and finite");
    if (x > kMaxLength)
        throw Error(ErrorCode::OutOfRange, "radius exceeds the representable range");
}

std::optional<RegularNGonSpec> try_spec(int n, RegularDefinition d) {
    RegularNGonSpec spec{n, d};
    try {
        regular_convert(spec);
    } catch (const Error&) {
        return std::nullopt;
    }
    return spec;
}

// Per-polygon kernels. Each returns the bound for one regular polygon.

double tangential_perimeter_one(int n, double r, bool& feasible) {
    const double x = std::tan(kPi / n) * std::sinh(r);
    feasible = x < 1.0 - kIdealSnap;
    return feasible ? 2.0 * n * stable_atanh(x) : kInf;
}

double cyclic_perimeter_one(int n, double R) {
    return 2.0 * n * stable_asinh(std::sin(kPi / n) * std::sinh(R));
}

double tangential_area_one(int n, double r, bool& feasible) {
    const double s = std::sin(kPi / n);
    const double c = std::cos(kPi / n);
    const double y = s * std::cosh(r);
    feasible = y <= 1.0 + kIdealSnap;
    if (!feasible)
        return kNaN;
    if (y >= 1.0 - kIdealSnap)
        return (n - 2) * kPi;
    // (n-2)pi - 2n acos(y) = 2n (acos(s) - acos(y)), difference of arccosines
    // taken through the angle-subtraction identity
    const double sh = s * std::sinh(r);
    const double root = std::sqrt((c - sh) * (c + sh));  // sqrt(1 - y^2)
    const double num = sh * sh / (y * c + s * root);     // (y^2 - s^2) / (...)
    const double den = s * y + c * root;
    return 2.0 * n * std::atan2(num, den);
}

double cyclic_area_one(int n, double R) {
    // (n-2)pi - 2n acot(t cosh R) = 2n atan(t (cosh R - 1) / (t^2 cosh R + 1))
    const double t = std::tan(kPi / n);
    return 2.0 * n * std::atan(t * coshm1(R) / (t * t * std::cosh(R) + 1.0));
}

BoundResult base(BoundId id, int n, int k, double parameter, BoundKind kind, Measure measure) {
    BoundResult r;
    r.id = id;
    r.n = n;
    r.k = k;
    r.parameter = parameter;
    r.kind = kind;
    r.measure = measure;
    return r;
}

} // namespace

std::string_view label(BoundId id) noexcept {
    switch (id) {
    case BoundId::TangentialPerimeter: return "1.1";
    case BoundId::CyclicPerimeter: return "1.2";
    case BoundId::TangentialArea: return "1.3";
    case BoundId::CyclicArea: return "1.4";
    case BoundId::InradiusFromCircumradius: return "cor1";
    case BoundId::TotalPerimeterCircumradii: return "1.5";
    case BoundId::TotalPerimeterInradii: return "1.6";
    case BoundId::TotalAreaCircumradii: return "1.7";
    case BoundId::TotalAreaInradii: return "1.8";
    case BoundId::TotalPerimeterGivenArea: return "1.9";
    case BoundId::TotalAreaGivenPerimeter: return "1.10";
    }
    return "?";
}

std::optional<BoundId> parse_bound_id(std::string_view text) noexcept {
    for (BoundId id : kAllBounds)
        if (label(id) == text)
            return id;
    return std::nullopt;
}

bool is_multi_polygon(BoundId id) noexcept {
    switch (id) {
    case BoundId::TotalPerimeterCircumradii:
    case BoundId::TotalPerimeterInradii:
    case BoundId::TotalAreaCircumradii:
    case BoundId::TotalAreaInradii:
    case BoundId::TotalPerimeterGivenArea:
    case BoundId::TotalAreaGivenPerimeter:
        return true;
    default:
        return false;
    }
}

std::string_view to_string(BoundKind kind) noexcept {
    return kind == BoundKind::Lower ? "lower" : "upper";
}

std::string_view to_string(Measure m) noexcept {
    switch (m) {
    case Measure::Perimeter: return "perimeter";
    case Measure::Area: return "area";
    case Measure::Inradius: return "inradius";
    }
    return "?";
}

BoundResult tangential_perimeter_lower(int n, double inradius) {
    require_shape(n, 1);
    require_radius(inradius);
    auto r = base(BoundId::TangentialPerimeter, n, 1, inradius, BoundKind::Lower, Measure::Perimeter);
    r.value = tangential_perimeter_one(n, inradius, r.feasible);
    r.guard_margin = max_regular_inradius(n) - inradius;
    if (r.feasible)
        r.equality_spec = try_spec(n, Inradius{inradius});
    return r;
}

BoundResult cyclic_perimeter_upper(int n, double circumradius) {
    require_shape(n, 1);
    require_radius(circumradius);
    auto r = base(BoundId::CyclicPerimeter, n, 1, circumradius, BoundKind::Upper, Measure::Perimeter);
    r.value = cyclic_perimeter_one(n, circumradius);
    r.equality_spec = try_spec(n, Circumradius{circumradius});
    return r;
}

BoundResult tangential_area_lower(int n, double inradius) {
    require_shape(n, 1);
    require_radius(inradius);
    auto r = base(BoundId::TangentialArea, n, 1, inradius, BoundKind::Lower, Measure::Area);
    r.value = tangential_area_one(n, inradius, r.feasible);
    r.guard_margin = std::acosh(1.0 / std::sin(kPi / n)) - inradius;
    if (r.feasible)
        r.equality_spec = try_spec(n, Inradius{inradius});
    return r;
}

BoundResult cyclic_area_lower(int n, double circumradius) {
    require_shape(n, 1);
    require_radius(circumradius);
    auto r = base(BoundId::CyclicArea, n, 1, circumradius, BoundKind::Lower, Measure::Area);
    r.value = cyclic_area_one(n, circumradius);
    r.equality_spec = try_spec(n, Circumradius{circumradius});
    return r;
}

BoundResult inradius_lower_as_printed(int n, double circumradius) {
    require_shape(n, 1);
    require_radius(circumradius);
    auto r = base(BoundId::InradiusFromCircumradius, n, 1, circumradius, BoundKind::Lower,
                  Measure::Inradius);
    const double inner = 2.0 * n * stable_asinh(std::sin(kPi / n) * std::sinh(circumradius));
    const double denom = std::tan(inner);
    r.feasible = denom > 0.0;
    r.value = stable_asinh(std::tan(kPi / n) / denom);
    return r;
}

double reference_inradius(int n, double circumradius) {
    require_shape(n, 1);
    require_radius(circumradius);
    return stable_atanh(std::cos(kPi / n) * std::tanh(circumradius));
}

BoundResult total_perimeter_given_circumradii(int n, int k, double total) {
    require_shape(n, k);
    require_radius(total / k);
    auto r = base(BoundId::TotalPerimeterCircumradii, n, k, total, BoundKind::Lower, Measure::Perimeter);
    r.value = k * cyclic_perimeter_one(n, total / k);
    r.equality_spec = try_spec(n, Circumradius{total / k});
    r.copies = k;
    return r;
}

BoundResult total_perimeter_given_inradii(int n, int k, double total) {
    require_shape(n, k);
    require_radius(total / k);
    auto r = base(BoundId::TotalPerimeterInradii, n, k, total, BoundKind::Lower, Measure::Perimeter);
    r.value = k * tangential_perimeter_one(n, total / k, r.feasible);
    r.guard_margin = max_regular_inradius(n) - total / k;
    if (r.feasible)
        r.equality_spec = try_spec(n, Inradius{total / k});
    r.copies = k;
    return r;
}

BoundResult total_area_given_circumradii(int n, int k, double total) {
    require_shape(n, k);
    require_radius(total / k);
    auto r = base(BoundId::TotalAreaCircumradii, n, k, total, BoundKind::Lower, Measure::Area);
    r.value = k * cyclic_area_one(n, total / k);
    r.equality_spec = try_spec(n, Circumradius{total / k});
    r.copies = k;
    return r;
}

BoundResult total_area_given_inradii(int n, int k, double total) {
    require_shape(n, k);
    require_radius(total / k);
    auto r = base(BoundId::TotalAreaInradii, n, k, total, BoundKind::Lower, Measure::Area);
    r.value = k * tangential_area_one(n, total / k, r.feasible);
    r.guard_margin = std::acosh(1.0 / std::sin(kPi / n)) - total / k;
    if (r.feasible)
        r.equality_spec = try_spec(n, Inradius{total / k});
    r.copies = k;
    return r;
}

double min_admissible_area(int n) {
    return (n - 2) * kPi - 2.0 * n * std::asin(std::sqrt(1.0 - std::sin(kPi / n)));
}

double min_admissible_perimeter(int n) {
    return 2.0 * n * std::acosh(std::sqrt(1.0 + std::sin(kPi / n)));
}

double convexity_angle_threshold(int n) {
    return 2.0 * std::asin(std::sqrt(1.0 - std::sin(kPi / n)));
}

BoundResult total_perimeter_given_area(int n, int k, double total) {
    require_shape(n, k);
    if (!std::isfinite(total) || total <= 0.0 || total >= k * (n - 2) * kPi)
        throw Error(ErrorCode::InvalidTotal,
                    "total area " + std::to_string(total) + " outside (0, k(n-2)pi)");
    auto r = base(BoundId::TotalPerimeterGivenArea, n, k, total, BoundKind::Lower, Measure::Perimeter);
    const double each = total / k;
    // equal split: every polygon regular with interior angle ((n-2)pi - T/k)/n,
    // its half-triangle has defect T/(2nk)
    const double half_angle = 0.5 * ((n - 2) * kPi - each) / n;
    const auto [half_side, apothem] = detail::legs_from_angles(kPi / n, half_angle, each / (2.0 * n));
    (void)apothem;
    r.value = 2.0 * n * k * half_side;
    r.guard_margin = each - min_admissible_area(n);
    r.feasible = *r.guard_margin > 0.0;
    r.equality_spec = try_spec(n, InteriorAngle{2.0 * half_angle});
    r.copies = k;
    return r;
}

BoundResult total_area_given_perimeter(int n, int k, double total) {
    require_shape(n, k);
    if (!std::isfinite(total) || total <= 0.0)
        throw Error(ErrorCode::InvalidTotal, "total perimeter must be positive and finite");
    auto r = base(BoundId::TotalAreaGivenPerimeter, n, k, total, BoundKind::Upper, Measure::Area);
    const double each = total / k;
    const double half_side = each / (2.0 * n);
    if (half_side > kMaxLength)
        throw Error(ErrorCode::OutOfRange, "perimeter exceeds the representable range");
    // apothem from sinh r = tanh(l) / tan(pi/n); area = 2n * right-triangle defect
    const double sinh_apothem = std::tanh(half_side) / std::tan(kPi / n);
    const double per_polygon =
        4.0 * n * std::atan(std::tanh(0.5 * half_side) * tanh_half_from_sinh(sinh_apothem));
    r.value = k * per_polygon;
    r.guard_margin = each - min_admissible_perimeter(n);
    r.feasible = *r.guard_margin > 0.0;
    r.equality_spec = try_spec(n, SideLength{each / n});
    r.copies = k;
    return r;
}

double total_area_given_perimeter_with_cos(int n, int k, double total) {
    require_shape(n, k);
    return k * (n - 2) * kPi -
           2.0 * n * k * std::asin(std::cos(kPi / n) / std::cos(total / (2.0 * n * k)));
}

BoundResult evaluate_bound(BoundId id, int n, int k, double parameter) {
    switch (id) {
    case BoundId::TangentialPerimeter: return tangential_perimeter_lower(n, parameter);
    case BoundId::CyclicPerimeter: return cyclic_perimeter_upper(n, parameter);
    case BoundId::TangentialArea: return tangential_area_lower(n, parameter);
    case BoundId::CyclicArea: return cyclic_area_lower(n, parameter);
    case BoundId::InradiusFromCircumradius: return inradius_lower_as_printed(n, parameter);
    case BoundId::TotalPerimeterCircumradii: return total_perimeter_given_circumradii(n, k, parameter);
    case BoundId::TotalPerimeterInradii: return total_perimeter_given_inradii(n, k, parameter);
    case BoundId::TotalAreaCircumradii: return total_area_given_circumradii(n, k, parameter);
    case BoundId::TotalAreaInradii: return total_area_given_inradii(n, k, parameter);
    case BoundId::TotalPerimeterGivenArea: return total_perimeter_given_area(n, k, parameter);
    case BoundId::TotalAreaGivenPerimeter: return total_area_given_perimeter(n, k, parameter);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown bound");
}

double equality_value(const BoundResult& r) {
    if (!r.equality_spec)
        throw Error(ErrorCode::InvalidArgument, "bound has no equality configuration");
    const auto m = regular_convert(*r.equality_spec);
    switch (r.measure) {
    case Measure::Perimeter: return r.copies * m.perimeter;
    case Measure::Area: return r.copies * m.area;
    case Measure::Inradius: return m.inradius;
    }
    return kNaN;
}

} // namespace hypiso

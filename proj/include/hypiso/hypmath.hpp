#pragma once

// Hyperbolic trigonometry kernel: right triangles, the law of cosines and
// regular polygon conversions. Curvature is fixed at -1 throughout.

#include <numbers>
#include <optional>
#include <variant>

namespace hypiso {

inline constexpr double kPi = std::numbers::pi;

/// Tolerance for algebraic identities between closed forms.
inline constexpr double kEpsRel = 1e-12;
/// Tolerance for quantities measured on an embedding.
inline constexpr double kEpsGeom = 1e-9;
/// Arguments this close to an ideal boundary are snapped onto it.
inline constexpr double kIdealSnap = 8.0 * 2.220446049250313e-16;
/// Lengths above this overflow cosh/sinh.
inline constexpr double kMaxLength = 700.0;

// Stable inverse hyperbolic functions.

/// acosh(1 + t) for t >= 0, accurate when t is tiny.
double acosh1p(double t);
double stable_asinh(double x);
/// atanh(x) for |x| < 1 via log1p.
double stable_atanh(double x);
/// cosh(x) - 1 without cancellation.
double coshm1(double x);

/// tanh(x/2) given sinh(x).
double tanh_half_from_sinh(double s);
/// tanh(x/2) given tanh(x), 0 <= t <= 1.
double tanh_half_from_tanh(double t);

/// Area (angle defect) of a right triangle with the given legs.
double right_triangle_area(double leg1, double leg2);

/// Hypotenuse of a right triangle: cosh a = cosh b cosh c.
double hyp_hypotenuse(double leg1, double leg2);

/// A right triangle with the right angle between the legs. `angle1` is
/// opposite `leg1` and `angle2` opposite `leg2`.
struct RightTriangle {
    double hypotenuse = 0;
    double leg1 = 0;
    double leg2 = 0;
    double angle1 = 0;
    double angle2 = 0;
};

/// Exactly two fields must be set.
struct TriangleKnowns {
    std::optional<double> hypotenuse;
    std::optional<double> leg1;
    std::optional<double> leg2;
    std::optional<double> angle1;
    std::optional<double> angle2;
};

/// Solves for the remaining three elements from any two.
///
/// Throws AmbiguousInput unless exactly two elements are known and
/// Infeasible when no right triangle has them (for instance two angles
/// whose sum is at least pi/2, or a leg not shorter than the hypotenuse).
RightTriangle solve_right_triangle(const TriangleKnowns& known);

/// Largest scaled residual over the six classical right-triangle identities.
/// Each residual is |lhs - rhs| / max(1, |lhs|, |rhs|).
double relation_residual(const RightTriangle& t);

/// Angle opposite side `c` in a triangle with sides a, b, c.
/// Throws DegenerateTriangle on zero sides or a violated triangle inequality.
double angle_from_sides(double a, double b, double c);

// Regular polygons.

struct Circumradius { double value; };
struct Inradius { double value; };
/// Interior angle at each vertex.
struct InteriorAngle { double value; };
struct SideLength { double value; };

using RegularDefinition = std::variant<Circumradius, Inradius, InteriorAngle, SideLength>;

struct RegularNGonSpec {
    int n = 3;
    RegularDefinition defining;
};

struct RegularPolygonMetrics {
    int n = 3;
    double circumradius = 0;
    double inradius = 0;
    double interior_angle = 0;
    double side = 0;
    double perimeter = 0;
    double area = 0;
};

/// Derives every metric of a regular n-gon from one defining quantity.
///
/// The polygon splits into 2n right triangles with hypotenuse R, legs r and
/// side/2, and angles pi/n at the center and half the interior angle at the
/// vertex. Throws Infeasible when no compact polygon matches the input.
RegularPolygonMetrics regular_convert(const RegularNGonSpec& spec);

/// Feasibility upper limit for the inradius of a regular n-gon.
double max_regular_inradius(int n);
/// Upper limit for the interior angle of a regular n-gon.
double max_regular_interior_angle(int n);

} // namespace hypiso

#pragma once

// Centered cyclic and tangential polygons described by a radius and the
// partition of the full turn at the center into sector angles.

#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace hypiso {

enum class PolygonKind { Cyclic, Tangential };

std::string_view to_string(PolygonKind kind) noexcept;

/// Tolerance on the sector angles summing to 2 pi.
inline constexpr double kAngleSumTolerance = 1e-10;
/// Largest deviation from 2 pi / n for which a polygon counts as regular.
inline constexpr double kRegularTolerance = 1e-10;

/// Polygon inscribed in a circle of radius R whose center lies inside it.
/// Sector i spans the side from vertex i to vertex i+1.
class CyclicPolygon {
public:
    /// Validates and renormalizes `thetas`. Sector angles must lie in (0, pi)
    /// and sum to 2 pi within kAngleSumTolerance; throws InvalidPolygon otherwise.
    static CyclicPolygon make(double circumradius, std::vector<double> thetas);
    static CyclicPolygon regular(int n, double circumradius);

    int n() const noexcept { return static_cast<int>(thetas_.size()); }
    double circumradius() const noexcept { return radius_; }
    std::span<const double> thetas() const noexcept { return thetas_; }
    bool is_regular() const noexcept;

private:
    CyclicPolygon(double r, std::vector<double> t) : radius_(r), thetas_(std::move(t)) {}
    double radius_;
    std::vector<double> thetas_;
};

/// Polygon circumscribed about a circle of radius r. Sector i is the angle at
/// the incenter between tangency points i and i+1; vertex i sits on its
/// bisector.
class TangentialPolygon {
public:
    /// Same checks as CyclicPolygon::make plus finiteness of every vertex
    /// (tan(theta/2) sinh r < 1); throws IdealVertex when a vertex is ideal.
    static TangentialPolygon make(double inradius, std::vector<double> thetas);
    static TangentialPolygon regular(int n, double inradius);

    int n() const noexcept { return static_cast<int>(thetas_.size()); }
    double inradius() const noexcept { return radius_; }
    std::span<const double> thetas() const noexcept { return thetas_; }
    bool is_regular() const noexcept;

private:
    TangentialPolygon(double r, std::vector<double> t) : radius_(r), thetas_(std::move(t)) {}
    double radius_;
    std::vector<double> thetas_;
};

using Polygon = std::variant<CyclicPolygon, TangentialPolygon>;

PolygonKind kind_of(const Polygon& p) noexcept;
double radius_of(const Polygon& p) noexcept;
std::span<const double> thetas_of(const Polygon& p) noexcept;

// Sector functions.

/// Half of the chord subtending `theta`: asinh(sin(theta/2) sinh R).
double cyclic_half_side(double theta, double circumradius);

/// Tangent length from a vertex to its tangency points:
/// atanh(sinh r tan(theta/2)). Throws IdealVertex when the vertex is at or
/// beyond infinity.
double tangential_tangent_length(double theta, double inradius);

/// Base angle of the isosceles sector triangle: acot(cosh R tan(theta/2)).
double cyclic_half_angle(double theta, double circumradius);

/// Full interior angle at the vertex of a tangential sector:
/// 2 acos(sin(theta/2) cosh r). Zero on the ideal boundary.
double tangential_interior_angle(double theta, double inradius);

/// Largest sector angle that keeps a tangential vertex finite.
double max_tangential_theta(double inradius);

// Closed-form metrics.

double perimeter(const CyclicPolygon& p);
double perimeter(const TangentialPolygon& p);
double perimeter(const Polygon& p);

/// Angle at each vertex, in vertex order.
std::vector<double> interior_angles(const CyclicPolygon& p);
std::vector<double> interior_angles(const TangentialPolygon& p);
std::vector<double> interior_angles(const Polygon& p);

/// Angle defect (n - 2) pi minus the interior angle sum, accumulated per
/// sector so small polygons keep full relative precision.
double area(const CyclicPolygon& p);
double area(const TangentialPolygon& p);
double area(const Polygon& p);

} // namespace hypiso

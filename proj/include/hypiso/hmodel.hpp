#pragma once

// Hyperboloid model: the upper sheet x0^2 - x1^2 - x2^2 = 1 of Minkowski
// 3-space. Distances here are computed from coordinates alone and serve as
// the independent measurement for every closed form in polygon.hpp.

#include "hypiso/polygon.hpp"

#include <vector>

namespace hypiso {

struct HPoint {
    double x0 = 1;
    double x1 = 0;
    double x2 = 0;

    static HPoint origin() noexcept { return {}; }
    /// Throws InvalidPoint when the coordinates are off the upper sheet.
    static HPoint from_coordinates(double x0, double x1, double x2);

    /// |x0^2 - x1^2 - x2^2 - 1| relative to x0^2.
    double sheet_error() const noexcept;
};

double minkowski_inner(const HPoint& p, const HPoint& q) noexcept;

/// Hyperbolic distance acosh(<p, q>). Throws InvalidPoint if either point is
/// off the sheet by more than kEpsGeom.
double dist(const HPoint& p, const HPoint& q);

/// Point at distance `d` from the origin along bearing `alpha`.
HPoint point_at(double d, double alpha);

/// Rotation by `angle` about the origin.
HPoint rotate_about_origin(const HPoint& p, double angle) noexcept;

/// Point at parameter t in [0, 1] along the geodesic segment p -> q.
HPoint geodesic_point(const HPoint& p, const HPoint& q, double t);

/// Minimum distance from `x` to the segment p -> q by golden-section search
/// on the segment parameter, tolerance 1e-10.
double distance_to_segment(const HPoint& x, const HPoint& p, const HPoint& q);

struct Embedding {
    PolygonKind kind = PolygonKind::Cyclic;
    HPoint center;
    std::vector<HPoint> vertices;
    /// Tangency points, tangential embeddings only. Point i lies on the side
    /// from vertex i-1 to vertex i.
    std::vector<HPoint> tangency_points;
};

/// Vertex i at distance R and bearing theta_0 + ... + theta_{i-1}.
Embedding embed_cyclic(const CyclicPolygon& p);

/// Vertex i on the bisector of sector i at distance acosh(cosh r cosh b_i);
/// tangency point i at distance r on the boundary between sectors i-1 and i.
Embedding embed_tangential(const TangentialPolygon& p);

Embedding embed(const Polygon& p);

double measured_perimeter(const Embedding& e);

/// Sum of the fan triangles' angle defects, every angle recovered from
/// measured side lengths.
double measured_area(const Embedding& e);

/// Interior angle at each vertex from the triangle on the two adjacent vertices.
std::vector<double> measured_interior_angles(const Embedding& e);

/// Angles at the center subtended by each side.
std::vector<double> measured_central_angles(const Embedding& e);

} // namespace hypiso

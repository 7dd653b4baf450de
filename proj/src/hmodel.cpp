#include "hypiso/hmodel.hpp"

#include "hypiso/error.hpp"
#include "hypiso/hypmath.hpp"
#include "hypmath_detail.hpp"

#include <algorithm>
#include <cmath>

namespace hypiso {

namespace {

void require_on_sheet(const HPoint& p) {
    if (!(p.x0 >= 1.0 - kEpsGeom) || !(p.sheet_error() <= kEpsGeom))
        throw Error(ErrorCode::InvalidPoint, "point is not on the upper hyperboloid sheet");
}

} // namespace

HPoint HPoint::from_coordinates(double x0, double x1, double x2) {
    HPoint p{x0, x1, x2};
    require_on_sheet(p);
    return p;
}

double HPoint::sheet_error() const noexcept {
    const double form = (x0 - x1) * (x0 + x1) - x2 * x2;
    return std::abs(form - 1.0) / std::max(1.0, x0 * x0);
}

double minkowski_inner(const HPoint& p, const HPoint& q) noexcept {
    return p.x0 * q.x0 - p.x1 * q.x1 - p.x2 * q.x2;
}

double dist(const HPoint& p, const HPoint& q) {
    require_on_sheet(p);
    require_on_sheet(q);
    const double inner = minkowski_inner(p, q);
    if (inner > 2.0)
        return std::acosh(inner);
    // Nearby points: -<p - q, p - q> = 4 sinh^2(d / 2) avoids the cancellation in acosh.
    const double d0 = p.x0 - q.x0, d1 = p.x1 - q.x1, d2 = p.x2 - q.x2;
    const double chord2 = d1 * d1 + d2 * d2 - d0 * d0;
    return 2.0 * stable_asinh(0.5 * std::sqrt(std::max(chord2, 0.0)));
}

HPoint point_at(double d, double alpha) {
    if (!(d >= 0.0) || d > kMaxLength)
        throw Error(ErrorCode::OutOfRange, "distance must lie in [0, max length]");
    const double s = std::sinh(d);
    return {std::cosh(d), s * std::cos(alpha), s * std::sin(alpha)};
}

HPoint rotate_about_origin(const HPoint& p, double angle) noexcept {
    const double c = std::cos(angle), s = std::sin(angle);
    return {p.x0, c * p.x1 - s * p.x2, s * p.x1 + c * p.x2};
}

HPoint geodesic_point(const HPoint& p, const HPoint& q, double t) {
    const double L = dist(p, q);
    if (L == 0.0)
        return p;
    const double wp = detail::sinh_ratio((1.0 - t) * L, L);
    const double wq = detail::sinh_ratio(t * L, L);
    return {wp * p.x0 + wq * q.x0, wp * p.x1 + wq * q.x1, wp * p.x2 + wq * q.x2};
}

double distance_to_segment(const HPoint& x, const HPoint& p, const HPoint& q) {
    constexpr double kInvPhi = 0.6180339887498949;
    constexpr double kTol = 1e-10;
    auto f = [&](double t) { return dist(x, geodesic_point(p, q, t)); };
    double lo = 0.0, hi = 1.0;
    double m1 = hi - kInvPhi * (hi - lo), m2 = lo + kInvPhi * (hi - lo);
    double f1 = f(m1), f2 = f(m2);
    while (hi - lo > kTol) {
        if (f1 <= f2) {
            hi = m2;
            m2 = m1;
            f2 = f1;
            m1 = hi - kInvPhi * (hi - lo);
            f1 = f(m1);
        } else {
            lo = m1;
            m1 = m2;
            f1 = f2;
            m2 = lo + kInvPhi * (hi - lo);
            f2 = f(m2);
        }
    }
    return std::min({f1, f2, f(0.0), f(1.0)});
}

Embedding embed_cyclic(const CyclicPolygon& p) {
    Embedding e;
    e.kind = PolygonKind::Cyclic;
    double bearing = 0.0;
    for (double t : p.thetas()) {
        e.vertices.push_back(point_at(p.circumradius(), bearing));
        bearing += t;
    }
    return e;
}

Embedding embed_tangential(const TangentialPolygon& p) {
    Embedding e;
    e.kind = PolygonKind::Tangential;
    const double r = p.inradius();
    double bearing = 0.0;
    for (double t : p.thetas()) {
        e.tangency_points.push_back(point_at(r, bearing));
        const double b = tangential_tangent_length(t, r);
        e.vertices.push_back(point_at(hyp_hypotenuse(r, b), bearing + 0.5 * t));
        bearing += t;
    }
    return e;
}

Embedding embed(const Polygon& p) {
    return std::visit(
        [](const auto& q) {
            if constexpr (std::is_same_v<std::decay_t<decltype(q)>, CyclicPolygon>)
                return embed_cyclic(q);
            else
                return embed_tangential(q);
        },
        p);
}

double measured_perimeter(const Embedding& e) {
    const size_t n = e.vertices.size();
    double sum = 0.0;
    for (size_t i = 0; i < n; ++i)
        sum += dist(e.vertices[i], e.vertices[(i + 1) % n]);
    return sum;
}

double measured_area(const Embedding& e) {
    const size_t n = e.vertices.size();
    if (n < 3)
        throw Error(ErrorCode::InvalidPolygon, "need at least three vertices");
    double sum = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const HPoint& u = e.vertices[i];
        const HPoint& v = e.vertices[(i + 1) % n];
        const double cu = dist(e.center, u);
        const double cv = dist(e.center, v);
        const double uv = dist(u, v);
        const double at_center = angle_from_sides(cu, cv, uv);
        const double at_u = angle_from_sides(cu, uv, cv);
        const double at_v = angle_from_sides(cv, uv, cu);
        sum += kPi - (at_center + at_u + at_v);
    }
    return sum;
}

std::vector<double> measured_interior_angles(const Embedding& e) {
    const size_t n = e.vertices.size();
    std::vector<double> out(n);
    for (size_t i = 0; i < n; ++i) {
        const HPoint& prev = e.vertices[(i + n - 1) % n];
        const HPoint& here = e.vertices[i];
        const HPoint& next = e.vertices[(i + 1) % n];
        out[i] = angle_from_sides(dist(here, prev), dist(here, next), dist(prev, next));
    }
    return out;
}

std::vector<double> measured_central_angles(const Embedding& e) {
    const size_t n = e.vertices.size();
    std::vector<double> out(n);
    for (size_t i = 0; i < n; ++i) {
        const HPoint& u = e.vertices[i];
        const HPoint& v = e.vertices[(i + 1) % n];
        out[i] = angle_from_sides(dist(e.center, u), dist(e.center, v), dist(u, v));
    }
    return out;
}

} // namespace hypiso

#include "hypiso/polygon.hpp"

#include "hypiso/error.hpp"
#include "hypiso/hypmath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace hypiso {

namespace {

void normalize_partition(std::vector<double>& thetas, double radius) {
    if (thetas.size() < 3)
        throw Error(ErrorCode::InvalidPolygon, "a polygon needs at least three sectors");
    if (!std::isfinite(radius) || radius <= 0.0)
        throw Error(ErrorCode::InvalidPolygon, "radius must be positive and finite");
    if (radius > kMaxLength)
        throw Error(ErrorCode::OutOfRange, "radius exceeds the representable range");
    for (double t : thetas) {
        if (!std::isfinite(t) || t <= 0.0 || t >= kPi)
            throw Error(ErrorCode::InvalidPolygon,
                        "sector angle " + std::to_string(t) + " outside (0, pi)");
    }
    const double sum = std::accumulate(thetas.begin(), thetas.end(), 0.0);
    if (std::abs(sum - 2.0 * kPi) > kAngleSumTolerance)
        throw Error(ErrorCode::InvalidPolygon, "sector angles sum to " + std::to_string(sum) + ", not 2 pi");
    const double scale = 2.0 * kPi / sum;
    for (double& t : thetas)
        t *= scale;
}

bool partition_is_regular(std::span<const double> thetas) {
    const double target = 2.0 * kPi / static_cast<double>(thetas.size());
    return std::all_of(thetas.begin(), thetas.end(),
                       [&](double t) { return std::abs(t - target) <= kRegularTolerance; });
}

void require_sector(double theta, double radius) {
    if (!(theta >= 0.0 && theta <= kPi) || !(radius >= 0.0) || !std::isfinite(radius))
        throw Error(ErrorCode::InvalidArgument, "sector angle must lie in [0, pi] and radius be >= 0");
}

} // namespace

std::string_view to_string(PolygonKind kind) noexcept {
    return kind == PolygonKind::Cyclic ? "cyclic" : "tangential";
}

CyclicPolygon CyclicPolygon::make(double circumradius, std::vector<double> thetas) {
    normalize_partition(thetas, circumradius);
    return CyclicPolygon(circumradius, std::move(thetas));
}

CyclicPolygon CyclicPolygon::regular(int n, double circumradius) {
    return make(circumradius, std::vector<double>(static_cast<size_t>(std::max(n, 0)), 2.0 * kPi / n));
}

bool CyclicPolygon::is_regular() const noexcept { return partition_is_regular(thetas_); }

TangentialPolygon TangentialPolygon::make(double inradius, std::vector<double> thetas) {
    normalize_partition(thetas, inradius);
    const double limit = max_tangential_theta(inradius);
    for (double t : thetas) {
        if (std::tan(0.5 * t) * std::sinh(inradius) >= 1.0 - kIdealSnap || t >= limit)
            throw Error(ErrorCode::IdealVertex, "sector angle " + std::to_string(t) +
                                                    " puts its vertex at infinity for inradius " +
                                                    std::to_string(inradius));
    }
    return TangentialPolygon(inradius, std::move(thetas));
}

TangentialPolygon TangentialPolygon::regular(int n, double inradius) {
    return make(inradius, std::vector<double>(static_cast<size_t>(std::max(n, 0)), 2.0 * kPi / n));
}

bool TangentialPolygon::is_regular() const noexcept { return partition_is_regular(thetas_); }

PolygonKind kind_of(const Polygon& p) noexcept {
    return std::holds_alternative<CyclicPolygon>(p) ? PolygonKind::Cyclic : PolygonKind::Tangential;
}

double radius_of(const Polygon& p) noexcept {
    return std::visit(
        [](const auto& q) {
            if constexpr (std::is_same_v<std::decay_t<decltype(q)>, CyclicPolygon>)
                return q.circumradius();
            else
                return q.inradius();
        },
        p);
}

std::span<const double> thetas_of(const Polygon& p) noexcept {
    return std::visit([](const auto& q) { return q.thetas(); }, p);
}

double cyclic_half_side(double theta, double circumradius) {
    require_sector(theta, circumradius);
    return stable_asinh(std::sin(0.5 * theta) * std::sinh(circumradius));
}

double tangential_tangent_length(double theta, double inradius) {
    require_sector(theta, inradius);
    const double x = std::sinh(inradius) * std::tan(0.5 * theta);
    if (!(x < 1.0 - kIdealSnap))
        throw Error(ErrorCode::IdealVertex, "tangent length is infinite");
    return stable_atanh(x);
}

double cyclic_half_angle(double theta, double circumradius) {
    require_sector(theta, circumradius);
    return std::atan2(std::cos(0.5 * theta), std::cosh(circumradius) * std::sin(0.5 * theta));
}

double tangential_interior_angle(double theta, double inradius) {
    require_sector(theta, inradius);
    const double s = std::sin(0.5 * theta);
    const double c = std::cos(0.5 * theta);
    const double y = s * std::cosh(inradius);
    if (y > 1.0 + kIdealSnap)
        throw Error(ErrorCode::IdealVertex, "vertex lies beyond the ideal boundary");
    if (y >= 1.0 - kIdealSnap)
        return 0.0;
    const double sh = s * std::sinh(inradius);
    // 1 - y^2 = (cos - sin sinh r)(cos + sin sinh r)
    return 2.0 * std::atan2(std::sqrt((c - sh) * (c + sh)), y);
}

double max_tangential_theta(double inradius) {
    return std::min(kPi, 2.0 * std::atan(1.0 / std::sinh(inradius)));
}

double perimeter(const CyclicPolygon& p) {
    double sum = 0.0;
    for (double t : p.thetas())
        sum += 2.0 * cyclic_half_side(t, p.circumradius());
    return sum;
}

double perimeter(const TangentialPolygon& p) {
    double sum = 0.0;
    for (double t : p.thetas())
        sum += 2.0 * tangential_tangent_length(t, p.inradius());
    return sum;
}

double perimeter(const Polygon& p) {
    return std::visit([](const auto& q) { return perimeter(q); }, p);
}

std::vector<double> interior_angles(const CyclicPolygon& p) {
    const auto t = p.thetas();
    const size_t n = t.size();
    std::vector<double> half(n);
    for (size_t i = 0; i < n; ++i)
        half[i] = cyclic_half_angle(t[i], p.circumradius());
    // vertex i closes sector i-1 and opens sector i
    std::vector<double> out(n);
    for (size_t i = 0; i < n; ++i)
        out[i] = half[(i + n - 1) % n] + half[i];
    return out;
}

std::vector<double> interior_angles(const TangentialPolygon& p) {
    std::vector<double> out;
    out.reserve(p.thetas().size());
    for (double t : p.thetas())
        out.push_back(tangential_interior_angle(t, p.inradius()));
    return out;
}

std::vector<double> interior_angles(const Polygon& p) {
    return std::visit([](const auto& q) { return interior_angles(q); }, p);
}

double area(const CyclicPolygon& p) {
    const double R = p.circumradius();
    double sum = 0.0;
    for (double t : p.thetas()) {
        const double half_side = cyclic_half_side(t, R);
        const double apothem = stable_atanh(std::cos(0.5 * t) * std::tanh(R));
        sum += 2.0 * right_triangle_area(half_side, apothem);
    }
    return sum;
}

double area(const TangentialPolygon& p) {
    const double r = p.inradius();
    double sum = 0.0;
    for (double t : p.thetas())
        sum += 2.0 * right_triangle_area(r, tangential_tangent_length(t, r));
    return sum;
}

double area(const Polygon& p) {
    return std::visit([](const auto& q) { return area(q); }, p);
}

} // namespace hypiso

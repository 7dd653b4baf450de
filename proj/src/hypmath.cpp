#include "hypiso/hypmath.hpp"

#include "hypiso/error.hpp"
#include "hypmath_detail.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hypiso {

namespace {

void require_length(double x, const char* what) {
    if (!std::isfinite(x) || x <= 0.0)
        throw Error(ErrorCode::Infeasible, std::string(what) + " must be a positive finite length");
    if (x > kMaxLength)
        throw Error(ErrorCode::OutOfRange, std::string(what) + " exceeds the representable range");
}

void require_acute(double x, const char* what) {
    if (!std::isfinite(x) || x <= 0.0 || x >= kPi / 2)
        throw Error(ErrorCode::Infeasible, std::string(what) + " must lie in (0, pi/2)");
}

double scaled_residual(double lhs, double rhs) {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

} // namespace

double coshm1(double x) {
    const double s = std::sinh(0.5 * x);
    return 2.0 * s * s;
}

double acosh1p(double t) {
    if (std::isnan(t))
        throw Error(ErrorCode::OutOfRange, "acosh1p of NaN");
    if (t < 0.0) {
        if (t < -kIdealSnap)
            throw Error(ErrorCode::OutOfRange, "acosh argument below 1");
        return 0.0;
    }
    if (t > 1e8)
        return std::log(t + 1.0) + std::log1p(std::sqrt(1.0 - 1.0 / ((t + 1.0) * (t + 1.0))));
    return std::log1p(t + std::sqrt(t * (t + 2.0)));
}

double stable_asinh(double x) {
    const double a = std::abs(x);
    double r;
    if (a > 1e8)
        r = std::log(a) + std::numbers::ln2;
    else
        r = std::log1p(a + a * a / (1.0 + std::sqrt(1.0 + a * a)));
    return std::copysign(r, x);
}

double stable_atanh(double x) {
    const double a = std::abs(x);
    if (a >= 1.0)
        return std::copysign(HUGE_VAL, x);
    return std::copysign(0.5 * std::log1p(2.0 * a / (1.0 - a)), x);
}

double tanh_half_from_sinh(double s) {
    return s / (1.0 + std::hypot(1.0, s));
}

double tanh_half_from_tanh(double t) {
    t = std::clamp(t, 0.0, 1.0);
    return t / (1.0 + std::sqrt((1.0 - t) * (1.0 + t)));
}

double right_triangle_area(double leg1, double leg2) {
    return 2.0 * std::atan(std::tanh(0.5 * leg1) * std::tanh(0.5 * leg2));
}

double hyp_hypotenuse(double leg1, double leg2) {
    if (!(leg1 >= 0.0) || !(leg2 >= 0.0) || leg1 > kMaxLength || leg2 > kMaxLength)
        throw Error(ErrorCode::OutOfRange, "legs must lie in [0, " + std::to_string(kMaxLength) + "]");
    if (leg1 + leg2 > 40.0) {
        // cosh a = cosh b cosh c with every exponential kept below overflow
        return leg1 + leg2 - std::numbers::ln2 + std::log1p(std::exp(-2.0 * leg1)) +
               std::log1p(std::exp(-2.0 * leg2));
    }
    const double u = coshm1(leg1);
    const double v = coshm1(leg2);
    return acosh1p(u * v + u + v);
}

namespace detail {

double sinh_ratio(double x, double y) {
    if (std::abs(x) < 300.0 && y < 300.0)
        return std::sinh(x) / std::sinh(y);
    const double ax = std::abs(x);
    return std::copysign(std::exp(ax - y) * -std::expm1(-2.0 * ax) / -std::expm1(-2.0 * y), x);
}

std::pair<double, double> legs_from_angles(double angle1, double angle2, double defect) {
    if (!(defect > 0.0))
        throw Error(ErrorCode::Infeasible, "angle sum of a right triangle must stay below pi/2");
    const double half = std::sin(0.5 * defect);
    // cos B - sin C = 2 cos((pi/2 - B + C)/2) sin(defect/2), likewise for C
    const double t1 = 2.0 * std::cos(0.5 * (kPi / 2 - angle1 + angle2)) * half / std::sin(angle2);
    const double t2 = 2.0 * std::cos(0.5 * (kPi / 2 - angle2 + angle1)) * half / std::sin(angle1);
    return {acosh1p(t1), acosh1p(t2)};
}

} // namespace detail

RightTriangle solve_right_triangle(const TriangleKnowns& known) {
    const int count = known.hypotenuse.has_value() + known.leg1.has_value() + known.leg2.has_value() +
                      known.angle1.has_value() + known.angle2.has_value();
    if (count != 2)
        throw Error(ErrorCode::AmbiguousInput,
                    "exactly two elements are required, got " + std::to_string(count));

    if (known.hypotenuse) require_length(*known.hypotenuse, "hypotenuse");
    if (known.leg1) require_length(*known.leg1, "leg1");
    if (known.leg2) require_length(*known.leg2, "leg2");
    if (known.angle1) require_acute(*known.angle1, "angle1");
    if (known.angle2) require_acute(*known.angle2, "angle2");

    double b = 0.0;
    double c = 0.0;
    const auto& a = known.hypotenuse;
    const auto& B = known.angle1;
    const auto& C = known.angle2;

    // leg adjacent to the hypotenuse pair: cosh c = cosh a / cosh b
    auto other_leg = [](double hyp, double leg) {
        if (!(leg < hyp))
            throw Error(ErrorCode::Infeasible, "a leg must be shorter than the hypotenuse");
        const double t = 2.0 * std::sinh(0.5 * (hyp + leg)) * std::sinh(0.5 * (hyp - leg)) / std::cosh(leg);
        return acosh1p(t);
    };
    // tanh(adjacent) = tan(angle) sinh(opposite)
    auto adjacent_leg = [](double angle, double leg) {
        const double x = std::tan(angle) * std::sinh(leg);
        if (x >= 1.0 - kIdealSnap)
            throw Error(ErrorCode::Infeasible, "angle too large for the given adjacent leg");
        return stable_atanh(x);
    };

    if (a && known.leg1) {
        b = *known.leg1;
        c = other_leg(*a, b);
    } else if (a && known.leg2) {
        c = *known.leg2;
        b = other_leg(*a, c);
    } else if (a && B) {
        b = stable_asinh(std::sin(*B) * std::sinh(*a));
        c = stable_atanh(std::cos(*B) * std::tanh(*a));
    } else if (a && C) {
        c = stable_asinh(std::sin(*C) * std::sinh(*a));
        b = stable_atanh(std::cos(*C) * std::tanh(*a));
    } else if (known.leg1 && known.leg2) {
        b = *known.leg1;
        c = *known.leg2;
    } else if (known.leg1 && B) {
        b = *known.leg1;
        c = stable_asinh(std::tanh(b) / std::tan(*B));
    } else if (known.leg1 && C) {
        b = *known.leg1;
        c = adjacent_leg(*C, b);
    } else if (known.leg2 && B) {
        c = *known.leg2;
        b = adjacent_leg(*B, c);
    } else if (known.leg2 && C) {
        c = *known.leg2;
        b = stable_asinh(std::tanh(c) / std::tan(*C));
    } else {
        const double defect = kPi / 2 - *B - *C;
        if (defect <= kIdealSnap)
            throw Error(ErrorCode::Infeasible, "angle sum of a right triangle must stay below pi/2");
        std::tie(b, c) = detail::legs_from_angles(*B, *C, defect);
    }

    if (!(b > 0.0) || !(c > 0.0) || !std::isfinite(b) || !std::isfinite(c))
        throw Error(ErrorCode::Infeasible, "elements describe a degenerate triangle");
    if (b > kMaxLength || c > kMaxLength)
        throw Error(ErrorCode::OutOfRange, "solved leg exceeds the representable range");

    RightTriangle t;
    t.leg1 = b;
    t.leg2 = c;
    t.hypotenuse = a ? *a : hyp_hypotenuse(b, c);
    t.angle1 = B ? *B : std::atan2(std::tanh(b), std::sinh(c));
    t.angle2 = C ? *C : std::atan2(std::tanh(c), std::sinh(b));
    return t;
}

double relation_residual(const RightTriangle& t) {
    const double a = t.hypotenuse, b = t.leg1, c = t.leg2, B = t.angle1, C = t.angle2;
    const double r[] = {
        scaled_residual(std::cosh(a), std::cosh(b) * std::cosh(c)),
        scaled_residual(std::cosh(a), 1.0 / (std::tan(B) * std::tan(C))),
        scaled_residual(std::sinh(b), std::sin(B) * std::sinh(a)),
        scaled_residual(std::sinh(c), std::tanh(b) / std::tan(B)),
        scaled_residual(std::cos(C), std::cosh(c) * std::sin(B)),
        scaled_residual(std::cos(B), std::tanh(c) / std::tanh(a)),
    };
    return *std::max_element(std::begin(r), std::end(r));
}

double angle_from_sides(double a, double b, double c) {
    for (double x : {a, b, c}) {
        if (!std::isfinite(x) || x <= 0.0)
            throw Error(ErrorCode::DegenerateTriangle, "sides must be positive");
        if (x > kMaxLength)
            throw Error(ErrorCode::OutOfRange, "side exceeds the representable range");
    }
    // Half-angle form of the law of cosines.
    const double s = 0.5 * (a + b + c);
    const double sin2 = detail::sinh_ratio(s - a, a) * detail::sinh_ratio(s - b, b);
    const double cos2 = detail::sinh_ratio(s, a) * detail::sinh_ratio(s - c, b);
    // cos C = cos2 - sin2 = 1 - 2 sin2 = 2 cos2 - 1
    if (sin2 < -0.5 * kEpsGeom || cos2 < -0.5 * kEpsGeom)
        throw Error(ErrorCode::DegenerateTriangle, "sides violate the triangle inequality");
    return 2.0 * std::atan2(std::sqrt(std::max(sin2, 0.0)), std::sqrt(std::max(cos2, 0.0)));
}

double max_regular_inradius(int n) {
    return std::asinh(1.0 / std::tan(kPi / n));
}

double max_regular_interior_angle(int n) {
    return (n - 2) * kPi / n;
}

RegularPolygonMetrics regular_convert(const RegularNGonSpec& spec) {
    const int n = spec.n;
    if (n < 3)
        throw Error(ErrorCode::InvalidArgument, "a polygon needs at least three sides");
    const double center = kPi / n;

    TriangleKnowns known;
    known.angle1 = center;
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if (!std::isfinite(d.value) || d.value <= 0.0)
                throw Error(ErrorCode::Infeasible, "defining quantity must be positive and finite");
            if constexpr (std::is_same_v<T, Circumradius>) {
                known.hypotenuse = d.value;
            } else if constexpr (std::is_same_v<T, Inradius>) {
                if (std::tan(center) * std::sinh(d.value) >= 1.0 - kIdealSnap)
                    throw Error(ErrorCode::Infeasible, "inradius too large for a compact regular polygon");
                known.leg2 = d.value;
            } else if constexpr (std::is_same_v<T, InteriorAngle>) {
                if (d.value >= max_regular_interior_angle(n))
                    throw Error(ErrorCode::Infeasible, "interior angle must stay below (n-2)pi/n");
                known.angle2 = 0.5 * d.value;
            } else {
                known.leg1 = 0.5 * d.value;
            }
        },
        spec.defining);

    RightTriangle t;
    if (known.angle2) {
        // keep the exact defect instead of recomputing it from the angle sum
        const double defect = 0.5 * (max_regular_interior_angle(n) - 2.0 * *known.angle2);
        const auto [half_side, apothem] = detail::legs_from_angles(center, *known.angle2, defect);
        t.leg1 = half_side;
        t.leg2 = apothem;
        t.angle1 = center;
        t.angle2 = *known.angle2;
        t.hypotenuse = hyp_hypotenuse(half_side, apothem);
    } else {
        t = solve_right_triangle(known);
    }

    RegularPolygonMetrics m;
    m.n = n;
    m.circumradius = t.hypotenuse;
    m.inradius = t.leg2;
    m.interior_angle = 2.0 * t.angle2;
    m.side = 2.0 * t.leg1;
    m.perimeter = 2.0 * n * t.leg1;
    m.area = 2.0 * n * right_triangle_area(t.leg1, t.leg2);
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Circumradius>) m.circumradius = d.value;
            else if constexpr (std::is_same_v<T, Inradius>) m.inradius = d.value;
            else if constexpr (std::is_same_v<T, InteriorAngle>) m.interior_angle = d.value;
            else m.side = d.value;
        },
        spec.defining);
    return m;
}

} // namespace hypiso

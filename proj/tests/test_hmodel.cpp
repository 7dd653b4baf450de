#include "hypiso/error.hpp"
#include "hypiso/hmodel.hpp"
#include "hypiso/hypmath.hpp"
#include "hypiso/sampling.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace hypiso;
using oracle::Real;

namespace {

HPoint random_point(TrialRng& rng) { return point_at(rng.uniform(0.0, 4.0), rng.uniform(0.0, 2.0 * kPi)); }

Polygon random_polygon(TrialRng& rng, bool tangential) {
    const int n = rng.uniform_int(3, 12);
    if (!tangential)
        return random_cyclic(rng, n, rng.uniform(0.05, 3.0));
    for (;;) {
        try {
            return random_tangential(rng, n, rng.uniform(0.05, std::min(3.0, max_regular_inradius(n))), 50);
        } catch (const Error&) {
        }
    }
}

} // namespace

TEST_CASE("points and distances") {
    const HPoint o = HPoint::origin();
    CHECK(dist(o, o) == 0.0);
    for (double d : {1e-12, 1e-6, 0.3, 2.0, 15.0})
        for (double a : {0.0, 1.0, 4.0}) {
            const HPoint p = point_at(d, a);
            CHECK(p.sheet_error() <= 1e-14);
            CHECK(std::abs(dist(o, p) - d) <= 1e-14 * std::max(1.0, d) + 1e-20);
        }
    CHECK(point_at(0.0, 2.0).x1 == 0.0);
    CHECK(dist(point_at(1.5, 0.0), point_at(1.5, kPi)) == doctest::Approx(3.0).epsilon(1e-14));
    for (double d : {0.2, 1.0, 3.0})
        for (double a : {0.1, 1.3, 2.9}) {
            const Real D = Real(d);
            const Real want = oracle::acosh(cosh(D) * cosh(D) - sinh(D) * sinh(D) * cos(Real(a)));
            CHECK(oracle::rel(dist(point_at(d, 0.0), point_at(d, a)), want) <= 1e-13);
        }
    CHECK_THROWS_AS(HPoint::from_coordinates(1.0, 1.0, 0.0), Error);
    CHECK_THROWS_AS(HPoint::from_coordinates(-1.0, 0.0, 0.0), Error);
    CHECK_THROWS_AS(dist(HPoint{2.0, 0.0, 0.0}, o), Error);
    CHECK_NOTHROW(HPoint::from_coordinates(std::cosh(1.0), std::sinh(1.0), 0.0));
}

TEST_CASE("distance is symmetric and satisfies the triangle inequality") {
    for (int i = 0; i < 10000; ++i) {
        TrialRng rng(3, {static_cast<std::uint64_t>(i)});
        const HPoint p = random_point(rng), q = random_point(rng), r = random_point(rng);
        CHECK(dist(p, q) == doctest::Approx(dist(q, p)).epsilon(1e-14));
        CHECK(dist(p, r) <= dist(p, q) + dist(q, r) + 1e-12);
    }
}

TEST_CASE("rotations about the origin preserve distances") {
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        TrialRng rng(4, {static_cast<std::uint64_t>(i)});
        const HPoint p = random_point(rng), q = random_point(rng);
        const double a = rng.uniform(0.0, 2.0 * kPi);
        worst = std::max(worst, std::abs(dist(rotate_about_origin(p, a), rotate_about_origin(q, a)) - dist(p, q)));
    }
    CHECK(worst <= 1e-11);
}

TEST_CASE("geodesic points") {
    const HPoint p = point_at(1.0, 0.3), q = point_at(2.0, 2.0);
    const double L = dist(p, q);
    for (double t : {0.0, 0.25, 0.5, 1.0}) {
        const HPoint g = geodesic_point(p, q, t);
        CHECK(g.sheet_error() <= 1e-13);
        CHECK(dist(p, g) == doctest::Approx(t * L).epsilon(1e-12));
        CHECK(dist(g, q) == doctest::Approx((1 - t) * L).epsilon(1e-12));
    }
}

TEST_CASE("cyclic embeddings") {
    const auto reg = CyclicPolygon::regular(7, 1.4);
    const auto e = embed_cyclic(reg);
    for (size_t i = 0; i < e.vertices.size(); ++i) {
        CHECK(dist(e.center, e.vertices[i]) == doctest::Approx(1.4).epsilon(1e-12));
        CHECK(std::abs(dist(e.vertices[i], e.vertices[(i + 1) % 7]) - dist(e.vertices[0], e.vertices[1])) <= 1e-10);
    }
    const auto p = CyclicPolygon::make(2.0, {0.5, 1.0, 2.0, 2.0 * kPi - 3.5});
    const auto ep = embed_cyclic(p);
    for (size_t i = 0; i < 4; ++i) {
        const double chord = dist(ep.vertices[i], ep.vertices[(i + 1) % 4]);
        CHECK(chord == doctest::Approx(2.0 * std::asinh(std::sin(p.thetas()[i] / 2) * std::sinh(2.0))).epsilon(1e-13));
    }
    const auto central = measured_central_angles(ep);
    CHECK(std::accumulate(central.begin(), central.end(), 0.0) == doctest::Approx(2.0 * kPi).epsilon(1e-12));
}

TEST_CASE("tangential embeddings") {
    SUBCASE("regular sides touch the incircle") {
        const double r = 0.8;
        const auto e = embed_tangential(TangentialPolygon::regular(5, r));
        const double d0 = dist(e.center, e.vertices[0]);
        for (size_t i = 0; i < 5; ++i) {
            CHECK(dist(e.center, e.vertices[i]) == doctest::Approx(d0).epsilon(1e-12));
            const double foot = distance_to_segment(e.center, e.vertices[i], e.vertices[(i + 1) % 5]);
            CHECK(std::abs(foot - r) <= 1e-9);
        }
    }
    SUBCASE("irregular sides split at the tangency points") {
        const double r = 0.5;
        const auto p = TangentialPolygon::make(r, {1.3, 1.5, 1.7, 2.0 * kPi - 4.5});
        const auto e = embed_tangential(p);
        const auto t = p.thetas();
        for (size_t i = 0; i < 4; ++i) {
            const size_t j = (i + 1) % 4;
            const double side = dist(e.vertices[i], e.vertices[j]);
            const double want = tangential_tangent_length(t[i], r) + tangential_tangent_length(t[j], r);
            CHECK(side == doctest::Approx(want).epsilon(1e-12));
            CHECK(std::abs(distance_to_segment(e.center, e.vertices[i], e.vertices[j]) - r) <= 1e-9);
            CHECK(dist(e.center, e.tangency_points[j]) == doctest::Approx(r).epsilon(1e-13));
        }
    }
    SUBCASE("tiny inradius collapses the polygon") {
        const auto e = embed_tangential(TangentialPolygon::regular(6, 1e-9));
        for (const auto& v : e.vertices)
            CHECK(dist(e.center, v) < 1e-8);
    }
}

TEST_CASE("measured area") {
    const auto e = embed_cyclic(CyclicPolygon::regular(3, 0.9));
    const double a = measured_area(e);
    CHECK(a > 0.0);
    CHECK(a < kPi);
    for (int n : {3, 5, 8}) {
        const auto m = regular_convert({n, Circumradius{1.1}});
        CHECK(measured_area(embed_cyclic(CyclicPolygon::regular(n, 1.1))) ==
              doctest::Approx((n - 2) * kPi - n * m.interior_angle).epsilon(1e-10));
    }
}

TEST_CASE("closed forms agree with measurement on random polygons") {
    double peri = 0, ar = 0, ang = 0;
    for (int i = 0; i < 2000; ++i) {
        TrialRng rng(9, {static_cast<std::uint64_t>(i)});
        const Polygon p = random_polygon(rng, i % 2 == 1);
        const auto e = embed(p);
        const double cp = perimeter(p), ca = area(p);
        peri = std::max(peri, std::abs(cp - measured_perimeter(e)) / (1 + cp));
        ar = std::max(ar, std::abs(ca - measured_area(e)) / (1 + ca));
        const auto ci = interior_angles(p), mi = measured_interior_angles(e);
        for (size_t j = 0; j < ci.size(); ++j)
            ang = std::max(ang, std::abs(ci[j] - mi[j]));
    }
    CHECK(peri <= 1e-9);
    CHECK(ar <= 1e-8);
    CHECK(ang <= 1e-8);
}

#include "hypiso/error.hpp"
#include "hypiso/hypmath.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <optional>
#include <array>

using namespace hypiso;
using oracle::Real;

namespace {

RightTriangle reference(double b, double c) {
    RightTriangle t;
    t.leg1 = b;
    t.leg2 = c;
    t.hypotenuse = hyp_hypotenuse(b, c);
    t.angle1 = std::atan2(std::tanh(b), std::sinh(c));
    t.angle2 = std::atan2(std::tanh(c), std::sinh(b));
    return t;
}

struct Hp {
    Real a, b, c, B, C;
};

Hp hp_triangle(double b, double c) {
    Hp t;
    t.b = b;
    t.c = c;
    t.a = oracle::acosh(cosh(t.b) * cosh(t.c));
    t.B = atan(tanh(t.b) / sinh(t.c));
    t.C = atan(tanh(t.c) / sinh(t.b));
    return t;
}

void check_against(const RightTriangle& got, const Hp& want, double tol) {
    CHECK(oracle::rel(got.hypotenuse, want.a) <= tol);
    CHECK(oracle::rel(got.leg1, want.b) <= tol);
    CHECK(oracle::rel(got.leg2, want.c) <= tol);
    CHECK(oracle::rel(got.angle1, want.B) <= tol);
    CHECK(oracle::rel(got.angle2, want.C) <= tol);
}

} // namespace

TEST_CASE("stable inverse functions match 50-digit references") {
    for (double x : {1e-300, 1e-20, 1e-9, 1e-4, 0.3, 1.0, 7.5, 1e3, 1e9, 1e200}) {
        CHECK(oracle::rel(stable_asinh(x), oracle::asinh(Real(x))) <= 1e-15);
        CHECK(stable_asinh(-x) == -stable_asinh(x));
    }
    for (double t : {1e-300, 1e-18, 1e-8, 0.01, 1.0, 40.0, 1e7, 1e10, 1e200}) {
        const Real want = oracle::acosh(Real(1) + Real(t));
        CHECK(oracle::rel(acosh1p(t), want) <= 1e-15);
    }
    for (double x : {1e-300, 1e-12, 1e-5, 0.5, 0.9, 0.999999, 1.0 - 1e-15}) {
        const Real want = oracle::atanh(Real(x));
        CHECK(oracle::rel(stable_atanh(x), want) <= 1e-15);
    }
    for (double x : {1e-200, 1e-9, 1e-3, 0.7, 5.0, 300.0}) {
        CHECK(oracle::rel(coshm1(x), cosh(Real(x)) - 1) <= 1e-15);
        const Real half = tanh(Real(x) / 2);
        CHECK(oracle::rel(tanh_half_from_sinh(std::sinh(x)), half) <= 1e-15);
    }
    CHECK(acosh1p(0.0) == 0.0);
    CHECK_THROWS_AS(acosh1p(-1e-3), Error);
}

TEST_CASE("hypotenuse") {
    CHECK(hyp_hypotenuse(0.0, 0.0) == 0.0);
    CHECK(hyp_hypotenuse(1.25, 0.0) == doctest::Approx(1.25).epsilon(1e-15));
    const Real want = oracle::acosh(Real(6));
    CHECK(oracle::rel(hyp_hypotenuse(std::acosh(2.0), std::acosh(3.0)), want) <= 1e-15);
    CHECK(hyp_hypotenuse(std::acosh(2.0), std::acosh(3.0)) == doctest::Approx(2.47789).epsilon(1e-5));
    for (double b : {1e-9, 0.1, 2.0, 30.0, 400.0})
        for (double c : {1e-7, 0.5, 25.0, 650.0}) {
            const double a = hyp_hypotenuse(b, c);
            CHECK(a >= std::max(b, c));
            CHECK(oracle::rel(a, hp_triangle(b, c).a) <= 1e-14);
        }
    try {
        hyp_hypotenuse(701.0, 1.0);
        FAIL("expected OutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OutOfRange);
    }
}

TEST_CASE("right triangle area is the angle defect") {
    for (double b : {1e-6, 0.3, 2.0, 9.0})
        for (double c : {1e-5, 0.8, 4.0}) {
            const Hp t = hp_triangle(b, c);
            CHECK(oracle::rel(right_triangle_area(b, c), oracle::pi() / 2 - t.B - t.C) <= 1e-14);
        }
}

TEST_CASE("solve_right_triangle supports all ten known pairs") {
    for (double b : {0.05, 0.7, 2.5, 8.0}) {
        for (double c : {0.03, 1.1, 3.0}) {
            const RightTriangle ref = reference(b, c);
            const Hp want = hp_triangle(b, c);
            const std::optional<double> vals[5] = {ref.hypotenuse, ref.leg1, ref.leg2, ref.angle1, ref.angle2};
            for (int i = 0; i < 5; ++i) {
                for (int j = i + 1; j < 5; ++j) {
                    TriangleKnowns k;
                    std::optional<double>* slots[5] = {&k.hypotenuse, &k.leg1, &k.leg2, &k.angle1, &k.angle2};
                    *slots[i] = vals[i];
                    *slots[j] = vals[j];
                    CAPTURE(b);
                    CAPTURE(c);
                    CAPTURE(i);
                    CAPTURE(j);
                    const RightTriangle t = solve_right_triangle(k);
                    // Angles near pi/2 make the residual itself ill-conditioned for long legs.
                    CHECK(relation_residual(t) <= (b < 5.0 ? 1e-12 : 1e-9));
                    // Pairs that fix only a hypotenuse and a leg lose accuracy in the
                    // other leg when the triangle is long and thin.
                    check_against(t, want, 1e-9);
                }
            }
        }
    }
}

TEST_CASE("relations are mutually consistent on a grid of legs") {
    double worst = 0;
    for (double b = 0.0; b <= 20.0; b += 0.5)
        for (double c = 0.25; c <= 20.0; c += 0.5) {
            TriangleKnowns k;
            k.leg1 = b > 0 ? b : 1e-3;
            k.leg2 = c;
            worst = std::max(worst, relation_residual(solve_right_triangle(k)));
        }
    CHECK(worst <= 1e-11);
}

TEST_CASE("solve_right_triangle examples") {
    SUBCASE("equal legs give equal angles") {
        TriangleKnowns k;
        k.leg1 = 0.9;
        k.leg2 = 0.9;
        const auto t = solve_right_triangle(k);
        CHECK(t.angle1 == doctest::Approx(t.angle2).epsilon(1e-15));
        CHECK(std::cosh(t.hypotenuse) == doctest::Approx(std::cosh(0.9) * std::cosh(0.9)).epsilon(1e-14));
    }
    SUBCASE("hypotenuse and center angle give the apothem") {
        for (int n : {3, 5, 8}) {
            TriangleKnowns k;
            k.hypotenuse = 1.3;
            k.angle1 = kPi / n;
            const auto t = solve_right_triangle(k);
            const Real want = oracle::atanh(cos(oracle::pi_over(n)) * tanh(Real(1.3)));
            CHECK(oracle::rel(t.leg2, want) <= 1e-14);
        }
    }
    SUBCASE("angles approaching the Euclidean sum are infeasible") {
        TriangleKnowns k;
        k.angle1 = kPi / 6;
        k.angle2 = kPi / 3 - 1e-3;
        CHECK_NOTHROW(solve_right_triangle(k));
        k.angle2 = kPi / 3;
        CHECK_THROWS_AS(solve_right_triangle(k), Error);
        k.angle2 = kPi / 3 + 1e-3;
        try {
            solve_right_triangle(k);
            FAIL("expected Infeasible");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Infeasible);
        }
    }
    SUBCASE("leg not shorter than hypotenuse is infeasible") {
        TriangleKnowns k;
        k.hypotenuse = 1.0;
        k.leg1 = 1.0;
        CHECK_THROWS_AS(solve_right_triangle(k), Error);
    }
    SUBCASE("wrong number of knowns is ambiguous") {
        TriangleKnowns one;
        one.leg1 = 1.0;
        TriangleKnowns three;
        three.leg1 = 1.0;
        three.leg2 = 1.0;
        three.angle1 = 0.5;
        for (const auto& k : {one, three, TriangleKnowns{}}) {
            try {
                solve_right_triangle(k);
                FAIL("expected AmbiguousInput");
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::AmbiguousInput);
            }
        }
    }
}

TEST_CASE("angle_from_sides") {
    SUBCASE("equilateral") {
        const double s = 1.7;
        const double a = angle_from_sides(s, s, s);
        const Real want = acos((cosh(Real(s)) * cosh(Real(s)) - cosh(Real(s))) / (sinh(Real(s)) * sinh(Real(s))));
        CHECK(oracle::rel(a, want) <= 1e-14);
    }
    SUBCASE("right angle opposite the hypotenuse") {
        for (double b : {1e-4, 0.5, 3.0, 12.0})
            for (double c : {2e-4, 1.0, 6.0}) {
                const RightTriangle t = reference(b, c);
                CHECK(std::abs(angle_from_sides(b, c, t.hypotenuse) - kPi / 2) <= 1e-10);
                CHECK(std::abs(angle_from_sides(t.hypotenuse, c, b) - t.angle1) <= 1e-10);
                CHECK(std::abs(angle_from_sides(t.hypotenuse, b, c) - t.angle2) <= 1e-10);
            }
    }
    SUBCASE("general triangles against the law of cosines") {
        for (double a : {0.2, 1.0, 4.0})
            for (double b : {0.3, 2.0})
                for (double c : {0.25, 1.5}) {
                    if (c >= a + b || a >= b + c || b >= a + c)
                        continue;
                    const Real cosC = (cosh(Real(a)) * cosh(Real(b)) - cosh(Real(c))) / (sinh(Real(a)) * sinh(Real(b)));
                    CHECK(oracle::rel(angle_from_sides(a, b, c), acos(cosC)) <= 1e-13);
                }
    }
    SUBCASE("degenerate input") {
        for (auto sides : {std::array{0.0, 1.0, 1.0}, std::array{1.0, 1.0, 2.5}, std::array{1.0, -1.0, 0.5}}) {
            try {
                angle_from_sides(sides[0], sides[1], sides[2]);
                FAIL("expected DegenerateTriangle");
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::DegenerateTriangle);
            }
        }
    }
}

TEST_CASE("regular_convert closed forms") {
    SUBCASE("hexagon with sinh(side/2) = 1") {
        const auto m = regular_convert({6, Circumradius{std::asinh(2.0)}});
        const Real side = 2 * oracle::asinh(Real(1));
        CHECK(oracle::rel(m.side, side) <= 1e-15);
        CHECK(oracle::rel(m.perimeter, 12 * log(1 + sqrt(Real(2)))) <= 1e-15);
    }
    SUBCASE("square with inradius asinh(1/2)") {
        const auto m = regular_convert({4, Inradius{std::asinh(0.5)}});
        CHECK(oracle::rel(m.perimeter, 4 * log(Real(3))) <= 1e-15);
        CHECK(m.perimeter == doctest::Approx(4.39445).epsilon(1e-5));
    }
    SUBCASE("square whose angle approaches the Euclidean value") {
        const auto m = regular_convert({4, InteriorAngle{kPi / 2 - 1e-9}});
        CHECK(m.perimeter < 1e-3);
        CHECK(m.area == doctest::Approx(4e-9).epsilon(1e-6));
    }
    SUBCASE("perimeter and area from the interior angle") {
        for (int n : {3, 4, 7, 12}) {
            for (double frac : {0.05, 0.4, 0.9, 0.999}) {
                const double theta = frac * max_regular_interior_angle(n);
                const auto m = regular_convert({n, InteriorAngle{theta}});
                const Real th = Real(theta);
                const Real peri = 2 * n * oracle::acosh(cos(oracle::pi_over(n)) / sin(th / 2));
                const Real ar = (n - 2) * oracle::pi() - n * th;
                CHECK(oracle::rel(m.perimeter, peri) <= 1e-13);
                CHECK(oracle::rel(m.area, ar) <= 1e-13);
                const Real R = Real(m.circumradius);
                CHECK(oracle::rel(m.inradius, oracle::atanh(cos(oracle::pi_over(n)) * tanh(R))) <= 1e-12);
                CHECK(oracle::rel(m.side, 2 * oracle::asinh(sin(oracle::pi_over(n)) * sinh(R))) <= 1e-12);
            }
        }
    }
    SUBCASE("infeasible definitions") {
        for (const RegularNGonSpec& spec :
             {RegularNGonSpec{4, InteriorAngle{kPi / 2}}, RegularNGonSpec{3, InteriorAngle{1.5}},
              RegularNGonSpec{4, Inradius{std::asinh(1.0)}}, RegularNGonSpec{4, Inradius{3.0}},
              RegularNGonSpec{5, Circumradius{-1.0}}, RegularNGonSpec{2, Circumradius{1.0}}}) {
            CHECK_THROWS_AS(regular_convert(spec), Error);
        }
    }
}

TEST_CASE("regular_convert round trips") {
    for (int n : {3, 4, 6, 9, 12}) {
        for (double R : {0.01, 0.3, 1.0, 2.5, 5.0}) {
            const auto m = regular_convert({n, Circumradius{R}});
            const RegularDefinition defs[] = {Circumradius{m.circumradius}, Inradius{m.inradius},
                                              InteriorAngle{m.interior_angle}, SideLength{m.side}};
            for (const auto& d : defs) {
                const auto back = regular_convert({n, d});
                CAPTURE(n);
                CAPTURE(R);
                CAPTURE(d.index());
                // An angle near its Euclidean value fixes a small polygon only up to
                // one ulp of the angle divided by the per-vertex defect.
                const double defect = max_regular_interior_angle(n) - m.interior_angle;
                const double tol = d.index() == 2 ? std::max(1e-12, 8e-16 * kPi / defect) : 1e-12;
                CHECK(std::abs(back.circumradius - R) <= tol * R);
                CHECK(std::abs(back.inradius - m.inradius) <= tol * m.inradius);
                CHECK(std::abs(back.side - m.side) <= tol * m.side);
                CHECK(std::abs(back.interior_angle - m.interior_angle) <= 1e-12 * m.interior_angle);
            }
        }
    }
}

TEST_CASE("regular polygons approach Euclidean ones") {
    const double R = 1e-4;
    for (int n = 3; n <= 12; ++n) {
        const auto m = regular_convert({n, Circumradius{R}});
        CHECK(m.perimeter / (2 * n * std::sin(kPi / n) * R) == doctest::Approx(1.0).epsilon(1e-5));
        CHECK(m.area / (R * R) == doctest::Approx(n * std::sin(kPi / n) * std::cos(kPi / n)).epsilon(1e-5));
    }
}

TEST_CASE("regular perimeter and area increase with the circumradius") {
    for (int n : {3, 5, 8}) {
        double last_p = 0, last_a = 0;
        for (int i = 1; i <= 50; ++i) {
            const auto m = regular_convert({n, Circumradius{0.1 * i}});
            CHECK(m.perimeter > last_p);
            CHECK(m.area > last_a);
            last_p = m.perimeter;
            last_a = m.area;
        }
    }
}

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "bezfit/bezier.hpp"
#include "fixtures.hpp"

using namespace bezfit;

TEST_CASE("bernstein_eval basic values") {
    CHECK(bernstein_eval(2, 1, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(bernstein_eval(5, 0, 0.0) == 1.0);
    CHECK(bernstein_eval(5, 5, 1.0) == 1.0);
    double s = 0.0;
    for (int i = 0; i <= 7; ++i) s += bernstein_eval(7, i, 0.3);
    CHECK(s == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(bernstein_eval(3, 4, 0.5), std::out_of_range);
    CHECK_THROWS_AS(bernstein_eval(3, -1, 0.5), std::out_of_range);
}

TEST_CASE("bernstein partition of unity") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 1; n <= 30; ++n) {
        for (int rep = 0; rep < 100; ++rep) {
            const double t = u(rng);
            double s = 0.0;
            for (int i = 0; i <= n; ++i) s += bernstein_eval(n, i, t);
            CHECK(std::fabs(s - 1.0) < 1e-14);
        }
    }
}

TEST_CASE("rational_eval") {
    SUBCASE("constant curve") {
        RationalBezierCurve c({{3, -1}, {3, -1}, {3, -1}}, {1, 2, 5});
        for (double t : {0.0, 0.3, 0.77, 1.0}) {
            Point p = rational_eval(c, t);
            CHECK(p[0] == doctest::Approx(3.0).epsilon(1e-15));
            CHECK(p[1] == doctest::Approx(-1.0).epsilon(1e-15));
        }
    }
    SUBCASE("endpoint interpolation is bitwise") {
        auto c = fixtures::closed_degree8();
        CHECK(rational_eval(c, 0.0) == c.control_points.front());
        CHECK(rational_eval(c, 1.0) == c.control_points.back());
    }
    SUBCASE("1-d curve against direct summation") {
        RationalBezierCurve c({{0}, {1}, {1}}, {1, 1, 2});
        CHECK(rational_eval(c, 0.5)[0] == doctest::Approx(0.8).epsilon(1e-14));
    }
    SUBCASE("weight scaling invariance") {
        auto c = fixtures::closed_degree8();
        auto scaled = c;
        for (double& w : scaled.weights) w *= 37.5;
        for (double t : {0.1, 0.45, 0.9}) {
            Point a = rational_eval(c, t), b = rational_eval(scaled, t);
            CHECK(point_dist(a, b) < 1e-14 * (1.0 + point_norm(a)));
        }
    }
}

TEST_CASE("poly_eval") {
    BezierCurve lin({{0}, {1}});
    CHECK(poly_eval(lin, 0.25)[0] == doctest::Approx(0.25).epsilon(1e-15));
    BezierCurve con({{4, 2}, {4, 2}, {4, 2}});
    CHECK(poly_eval(con, 0.6) == Point{4, 2});

    // de Casteljau against direct Bernstein summation
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    BezierCurve c({{1, 0}, {-2, 3}, {0.5, -1}, {4, 4}, {2, -3}});
    for (int rep = 0; rep < 100; ++rep) {
        const double t = u(rng);
        Point direct(2, 0.0);
        for (int i = 0; i <= c.degree(); ++i)
            for (int d = 0; d < 2; ++d) direct[d] += c.control_points[i][d] * bernstein_eval(c.degree(), i, t);
        CHECK(point_dist(poly_eval(c, t), direct) < 1e-13);
    }
}

TEST_CASE("degree_elevate") {
    SUBCASE("polynomial single step") {
        BezierCurve lin({{0}, {1}});
        BezierCurve up = degree_elevate(lin, 1);
        REQUIRE(up.degree() == 2);
        CHECK(up.control_points[0][0] == doctest::Approx(0.0));
        CHECK(up.control_points[1][0] == doctest::Approx(0.5));
        CHECK(up.control_points[2][0] == doctest::Approx(1.0));
    }
    SUBCASE("h=0 is the identity") {
        auto c = fixtures::closed_degree8();
        auto same = degree_elevate(c, 0);
        CHECK(same.control_points == c.control_points);
        CHECK(same.weights == c.weights);
    }
    SUBCASE("rational elevation preserves the point set") {
        auto c = fixtures::starling_segment1();
        auto up = degree_elevate(c, 3);
        REQUIRE(up.degree() == c.degree() + 3);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double t = double(i) / 999.0;
            worst = std::max(worst, point_dist(rational_eval(c, t), rational_eval(up, t)));
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("subdivide") {
    auto c = fixtures::starling_segment2();
    const double t0 = 0.37;
    auto [left, right] = subdivide(c, t0);

    CHECK(point_dist(rational_eval(left, 1.0), rational_eval(c, t0)) < 1e-13);
    CHECK(point_dist(rational_eval(right, 0.0), rational_eval(c, t0)) < 1e-13);
    for (int i = 0; i <= 4; ++i) {
        const double t = i / 4.0;
        CHECK(point_dist(rational_eval(left, t), rational_eval(c, t0 * t)) < 1e-12);
        CHECK(point_dist(rational_eval(right, t), rational_eval(c, t0 + (1.0 - t0) * t)) < 1e-12);
    }

    SUBCASE("equal weights stay equal up to scale") {
        RationalBezierCurve eq({{0, 0}, {1, 3}, {2, 0}, {4, 1}}, {2, 2, 2, 2});
        auto [a, b] = subdivide(eq, 0.5);
        for (double w : a.weights) CHECK(w == doctest::Approx(a.weights[0]).epsilon(1e-14));
        for (double w : b.weights) CHECK(w == doctest::Approx(b.weights[0]).epsilon(1e-14));
    }
    CHECK_THROWS_AS(subdivide(c, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(subdivide(c, 1.0), std::invalid_argument);
}

TEST_CASE("forward_difference") {
    std::vector<double> s{1, 3, 7};
    CHECK(forward_difference(s, 2) == doctest::Approx(2.0));
    CHECK(forward_difference(s, 0) == doctest::Approx(1.0));
    std::vector<double> c{5.5, 5.5, 5.5};
    CHECK(forward_difference(c, 1) == doctest::Approx(0.0));
    CHECK_THROWS_AS(forward_difference(std::vector<double>{1, 2}, 2), std::invalid_argument);
}

TEST_CASE("endpoint_derivative") {
    BezierCurve q({{0}, {1}, {2}});
    CHECK(endpoint_derivative(q, CurveEnd::Left, 0)[0] == doctest::Approx(0.0));
    CHECK(endpoint_derivative(q, CurveEnd::Left, 1)[0] == doctest::Approx(2.0));
    CHECK_THROWS_AS(endpoint_derivative(q, CurveEnd::Left, 3), std::invalid_argument);

    // central finite differences of poly_eval; the polynomial extends past
    // [0,1], so the stencil can sit right on the endpoint
    BezierCurve c({{1, 0}, {-2, 3}, {0.5, -1}, {4, 4}, {2, -3}, {0, 1}});
    const double steps[] = {0.0, 1e-5, 1e-4, 1e-3};
    for (auto end : {CurveEnd::Left, CurveEnd::Right}) {
        const double t0 = end == CurveEnd::Left ? 0.0 : 1.0;
        for (int j = 1; j <= 3; ++j) {
            const double h = steps[j];
            Point exact = endpoint_derivative(c, end, j);
            Point fd(2, 0.0);
            for (int s = -j; s <= j; ++s) {
                double coeff = 0.0;
                if (j == 1) coeff = s == -1 ? -0.5 : (s == 1 ? 0.5 : 0.0);
                if (j == 2) coeff = s == 0 ? -2.0 : (s == -1 || s == 1 ? 1.0 : 0.0);
                if (j == 3) coeff = s == -2 ? -0.5 : (s == 2 ? 0.5 : (s == -1 ? 1.0 : (s == 1 ? -1.0 : 0.0)));
                if (coeff == 0.0) continue;
                Point v = poly_eval(c, t0 + s * h);
                for (int dcomp = 0; dcomp < 2; ++dcomp) fd[dcomp] += coeff * v[dcomp];
            }
            for (int dcomp = 0; dcomp < 2; ++dcomp) fd[dcomp] /= std::pow(h, j);
            CHECK(point_dist(exact, fd) < 1e-5 * (1.0 + point_norm(exact)));
        }
    }
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(RationalBezierCurve({{0}, {1}}, {1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(RationalBezierCurve({{0}, {1}}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(BezierCurve({{0}, {1, 2}}), std::invalid_argument);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(BezierCurve({{0}, {inf}}), std::invalid_argument);
}

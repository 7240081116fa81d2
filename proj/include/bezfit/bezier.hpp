#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace bezfit {

using Point = std::vector<double>;

double point_norm(const Point& p);
double point_dist(const Point& a, const Point& b);

enum class CurveEnd { Left, Right };

// Degree-m polynomial curve in Bernstein form.
struct BezierCurve {
    std::vector<Point> control_points;

    BezierCurve() = default;
    explicit BezierCurve(std::vector<Point> pts);

    int degree() const { return static_cast<int>(control_points.size()) - 1; }
    int dimension() const { return control_points.empty() ? 0 : static_cast<int>(control_points[0].size()); }

    // Control values of one coordinate.
    std::vector<double> component(int c) const;
};

// Rational curve Q_n(t)/w(t) with positive weights.
struct RationalBezierCurve {
    std::vector<Point> control_points;
    std::vector<double> weights;

    RationalBezierCurve() = default;
    RationalBezierCurve(std::vector<Point> pts, std::vector<double> w);

    int degree() const { return static_cast<int>(control_points.size()) - 1; }
    int dimension() const { return control_points.empty() ? 0 : static_cast<int>(control_points[0].size()); }

    std::vector<double> component(int c) const;

    static RationalBezierCurve from_polynomial(const BezierCurve& c);
};

struct CompositeCurve {
    std::vector<RationalBezierCurve> segments;
    int continuity_order = 0;
};

double bernstein_eval(int n, int i, double t);

Point rational_eval(const RationalBezierCurve& curve, double t);
Point poly_eval(const BezierCurve& curve, double t);

// Scalar weight polynomial w(t) = sum w_i B^n_i(t) via de Casteljau.
double weight_poly_eval(std::span<const double> weights, double t);

BezierCurve degree_elevate(const BezierCurve& curve, int h);
RationalBezierCurve degree_elevate(const RationalBezierCurve& curve, int h);

std::pair<RationalBezierCurve, RationalBezierCurve> subdivide(const RationalBezierCurve& curve, double t0);

// Delta^j applied at the head of seq; needs at least j+1 entries.
double forward_difference(std::span<const double> seq, int j);

// j-th derivative of the curve at t = 0 (Left) or t = 1 (Right).
Point endpoint_derivative(const BezierCurve& curve, CurveEnd end, int j);

}  // namespace bezfit

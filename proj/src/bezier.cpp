#include "bezfit/bezier.hpp"

#include <cmath>
#include <stdexcept>

#include "bezfit/math_util.hpp"

namespace bezfit {

namespace {

void check_finite(const std::vector<Point>& pts) {
    for (const auto& p : pts)
        for (double x : p)
            if (!std::isfinite(x)) throw std::invalid_argument("control point coordinate not finite");
}

// One de Casteljau sweep on homogeneous data (each entry is a point of
// equal dimension); reduces n+1 entries to a single one.
Point de_casteljau(std::vector<Point> rows, double t) {
    const std::size_t n = rows.size() - 1;
    for (std::size_t r = 1; r <= n; ++r)
        for (std::size_t i = 0; i + r <= n; ++i)
            for (std::size_t c = 0; c < rows[i].size(); ++c)
                rows[i][c] = (1.0 - t) * rows[i][c] + t * rows[i + 1][c];
    return rows[0];
}

std::vector<Point> lift(const RationalBezierCurve& curve) {
    std::vector<Point> h(curve.control_points.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        h[i] = curve.control_points[i];
        for (double& x : h[i]) x *= curve.weights[i];
        h[i].push_back(curve.weights[i]);
    }
    return h;
}

RationalBezierCurve unlift(const std::vector<Point>& h) {
    std::vector<Point> pts(h.size());
    std::vector<double> w(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        w[i] = h[i].back();
        pts[i].assign(h[i].begin(), h[i].end() - 1);
        for (double& x : pts[i]) x /= w[i];
    }
    return RationalBezierCurve(std::move(pts), std::move(w));
}

std::vector<Point> elevate_once(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size()) - 1;
    std::vector<Point> out(n + 2);
    out[0] = pts[0];
    out[n + 1] = pts[n];
    for (int i = 1; i <= n; ++i) {
        const double a = double(i) / double(n + 1);
        out[i] = pts[i];
        for (std::size_t c = 0; c < out[i].size(); ++c)
            out[i][c] = a * pts[i - 1][c] + (1.0 - a) * pts[i][c];
    }
    return out;
}

}  // namespace

double point_norm(const Point& p) {
    double s = 0.0;
    for (double x : p) s += x * x;
    return std::sqrt(s);
}

double point_dist(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw std::invalid_argument("point dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

BezierCurve::BezierCurve(std::vector<Point> pts) : control_points(std::move(pts)) {
    if (control_points.empty()) throw std::invalid_argument("BezierCurve: no control points");
    for (const auto& p : control_points)
        if (p.size() != control_points[0].size())
            throw std::invalid_argument("BezierCurve: inconsistent point dimension");
    check_finite(control_points);
}

std::vector<double> BezierCurve::component(int c) const {
    std::vector<double> v(control_points.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = control_points[i][c];
    return v;
}

RationalBezierCurve::RationalBezierCurve(std::vector<Point> pts, std::vector<double> w)
    : control_points(std::move(pts)), weights(std::move(w)) {
    if (control_points.empty()) throw std::invalid_argument("RationalBezierCurve: no control points");
    if (weights.size() != control_points.size())
        throw std::invalid_argument("RationalBezierCurve: weight count mismatch");
    for (double wi : weights)
        if (!(wi > 0.0) || !std::isfinite(wi))
            throw std::invalid_argument("RationalBezierCurve: weights must be positive");
    for (const auto& p : control_points)
        if (p.size() != control_points[0].size())
            throw std::invalid_argument("RationalBezierCurve: inconsistent point dimension");
    check_finite(control_points);
}

std::vector<double> RationalBezierCurve::component(int c) const {
    std::vector<double> v(control_points.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = control_points[i][c];
    return v;
}

RationalBezierCurve RationalBezierCurve::from_polynomial(const BezierCurve& c) {
    return RationalBezierCurve(c.control_points, std::vector<double>(c.control_points.size(), 1.0));
}

double bernstein_eval(int n, int i, double t) {
    if (i < 0 || i > n) throw std::out_of_range("bernstein_eval: index out of range");
    if (n <= 60) return binom(n, i) * std::pow(t, i) * std::pow(1.0 - t, n - i);
    if (t == 0.0) return i == 0 ? 1.0 : 0.0;
    if (t == 1.0) return i == n ? 1.0 : 0.0;
    return std::exp(log_binom(n, i) + i * std::log(t) + (n - i) * std::log(1.0 - t));
}

Point rational_eval(const RationalBezierCurve& curve, double t) {
    if (t == 0.0) return curve.control_points.front();
    if (t == 1.0) return curve.control_points.back();
    Point h = de_casteljau(lift(curve), t);
    Point p(h.begin(), h.end() - 1);
    for (double& x : p) x /= h.back();
    return p;
}

Point poly_eval(const BezierCurve& curve, double t) {
    return de_casteljau(curve.control_points, t);
}

double weight_poly_eval(std::span<const double> weights, double t) {
    std::vector<double> v(weights.begin(), weights.end());
    const std::size_t n = v.size() - 1;
    for (std::size_t r = 1; r <= n; ++r)
        for (std::size_t i = 0; i + r <= n; ++i) v[i] = (1.0 - t) * v[i] + t * v[i + 1];
    return v[0];
}

BezierCurve degree_elevate(const BezierCurve& curve, int h) {
    if (h < 0) throw std::invalid_argument("degree_elevate: negative amount");
    std::vector<Point> pts = curve.control_points;
    for (int s = 0; s < h; ++s) pts = elevate_once(pts);
    return BezierCurve(std::move(pts));
}

RationalBezierCurve degree_elevate(const RationalBezierCurve& curve, int h) {
    if (h < 0) throw std::invalid_argument("degree_elevate: negative amount");
    std::vector<Point> hom = lift(curve);
    for (int s = 0; s < h; ++s) hom = elevate_once(hom);
    return unlift(hom);
}

std::pair<RationalBezierCurve, RationalBezierCurve> subdivide(const RationalBezierCurve& curve, double t0) {
    if (!(t0 > 0.0 && t0 < 1.0)) throw std::invalid_argument("subdivide: parameter outside (0,1)");
    std::vector<Point> rows = lift(curve);
    const std::size_t n = rows.size() - 1;
    std::vector<Point> left(n + 1), right(n + 1);
    left[0] = rows[0];
    right[n] = rows[n];
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t i = 0; i + r <= n; ++i)
            for (std::size_t c = 0; c < rows[i].size(); ++c)
                rows[i][c] = (1.0 - t0) * rows[i][c] + t0 * rows[i + 1][c];
        left[r] = rows[0];
        right[n - r] = rows[n - r];
    }
    return {unlift(left), unlift(right)};
}

double forward_difference(std::span<const double> seq, int j) {
    if (j < 0 || seq.size() < static_cast<std::size_t>(j) + 1)
        throw std::invalid_argument("forward_difference: sequence too short");
    double s = 0.0;
    for (int h = 0; h <= j; ++h) s += ((j - h) % 2 == 0 ? 1.0 : -1.0) * binom(j, h) * seq[h];
    return s;
}

Point endpoint_derivative(const BezierCurve& curve, CurveEnd end, int j) {
    const int m = curve.degree();
    if (j < 0 || j > m) throw std::invalid_argument("endpoint_derivative: order exceeds degree");
    double fall = 1.0;  // m!/(m-j)!
    for (int i = 0; i < j; ++i) fall *= m - i;
    const int base = end == CurveEnd::Left ? 0 : m - j;
    Point out(curve.dimension(), 0.0);
    for (int c = 0; c < curve.dimension(); ++c) {
        std::vector<double> comp(j + 1);
        for (int i = 0; i <= j; ++i) comp[i] = curve.control_points[base + i][c];
        out[c] = fall * forward_difference(comp, j);
    }
    return out;
}

}  // namespace bezfit

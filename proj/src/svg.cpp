#include "bezfit/svg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bezfit {

namespace {

Point plot_point(const Point& p, double t) {
    if (p.size() >= 2) return {p[0], p[1]};
    return {t, p[0]};
}

}  // namespace

std::vector<Point> flatten_rational(const RationalBezierCurve& curve, int samples) {
    std::vector<Point> out(samples);
    for (int i = 0; i < samples; ++i) {
        const double t = double(i) / (samples - 1);
        out[i] = plot_point(rational_eval(curve, t), t);
    }
    return out;
}

std::vector<Point> flatten_polynomial(const BezierCurve& curve, int samples) {
    std::vector<Point> out(samples);
    for (int i = 0; i < samples; ++i) {
        const double t = double(i) / (samples - 1);
        out[i] = plot_point(poly_eval(curve, t), t);
    }
    return out;
}

std::string render_svg(const std::vector<SvgPolyline>& curves, int width, int height) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& c : curves)
        for (const auto& p : c.points) {
            if (p.size() != 2) throw std::invalid_argument("render_svg: expects 2-d plot points");
            xmin = std::min(xmin, p[0]);
            xmax = std::max(xmax, p[0]);
            ymin = std::min(ymin, p[1]);
            ymax = std::max(ymax, p[1]);
        }
    if (!(xmin <= xmax)) throw std::invalid_argument("render_svg: no points");
    const double margin = 20.0;
    const double spanx = std::max(xmax - xmin, 1e-12);
    const double spany = std::max(ymax - ymin, 1e-12);
    const double scale = std::min((width - 2 * margin) / spanx, (height - 2 * margin) / spany);
    auto X = [&](double x) { return margin + (x - xmin) * scale; };
    auto Y = [&](double y) { return height - margin - (y - ymin) * scale; };  // y grows upward

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\">\n";
    for (const auto& c : curves) {
        os << "  <polyline fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"1.5\"";
        if (c.dashed) os << " stroke-dasharray=\"6 4\"";
        os << " points=\"";
        for (std::size_t i = 0; i < c.points.size(); ++i) {
            if (i) os << ' ';
            os << X(c.points[i][0]) << ',' << Y(c.points[i][1]);
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace bezfit

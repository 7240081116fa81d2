#pragma once

#include <string>
#include <vector>

#include "bezfit/bezier.hpp"

namespace bezfit {

struct SvgPolyline {
    std::vector<Point> points;  // 2-d points (1-d curves are plotted as (t, x))
    std::string color = "black";
    bool dashed = false;
};

std::vector<Point> flatten_rational(const RationalBezierCurve& curve, int samples = 512);
std::vector<Point> flatten_polynomial(const BezierCurve& curve, int samples = 512);

std::string render_svg(const std::vector<SvgPolyline>& curves, int width = 800, int height = 600);

}  // namespace bezfit

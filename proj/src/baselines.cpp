#include "bezfit/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bezfit {

BezierCurve huang_approximation(const RationalBezierCurve& curve, int h) {
    RationalBezierCurve elevated = degree_elevate(curve, h);
    return BezierCurve(std::move(elevated.control_points));
}

LuResult lu_iterate(const RationalBezierCurve& curve, int m, const std::vector<double>& nodes,
                    double lambda, int iters) {
    if (static_cast<int>(nodes.size()) != m + 1) throw std::invalid_argument("lu_iterate: need m+1 nodes");
    if (nodes.front() != 0.0 || nodes.back() != 1.0)
        throw std::invalid_argument("lu_iterate: nodes must start at 0 and end at 1");
    if (!std::is_sorted(nodes.begin(), nodes.end()) ||
        std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
        throw std::invalid_argument("lu_iterate: nodes must be strictly increasing");
    if (iters < 0) throw std::invalid_argument("lu_iterate: negative iteration count");

    std::vector<Point> targets(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) targets[i] = rational_eval(curve, nodes[i]);

    BezierCurve current{targets};
    LuResult res;
    res.residual_history.reserve(iters + 1);
    for (int h = 0; h <= iters; ++h) {
        double worst = 0.0;
        std::vector<Point> gaps(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            Point at = poly_eval(current, nodes[i]);
            gaps[i] = targets[i];
            for (std::size_t c = 0; c < at.size(); ++c) gaps[i][c] -= at[c];
            worst = std::max(worst, point_norm(gaps[i]));
        }
        res.residual_history.push_back(worst);
        if (h == iters) break;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t c = 0; c < gaps[i].size(); ++c)
                current.control_points[i][c] += lambda * gaps[i][c];
    }
    res.curve = std::move(current);
    return res;
}

std::vector<double> lu_uniform_nodes(int m) {
    std::vector<double> t(m + 1);
    for (int i = 0; i <= m; ++i) t[i] = double(i) / m;
    return t;
}

std::vector<double> lu_chebyshev_nodes(int m) {
    std::vector<double> t(m + 1);
    for (int i = 0; i <= m; ++i) t[i] = 0.5 * (1.0 - std::cos(i * std::numbers::pi / m));
    t.front() = 0.0;
    t.back() = 1.0;
    return t;
}

}  // namespace bezfit

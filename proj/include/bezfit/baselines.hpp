#pragma once

#include <vector>

#include "bezfit/bezier.hpp"

namespace bezfit {

// Degree-elevation approximation: elevate the rational curve h times in
// homogeneous form and keep the elevated control points, discarding the
// weights. Converges uniformly (slowly) as h grows.
BezierCurve huang_approximation(const RationalBezierCurve& curve, int h);

struct LuResult {
    BezierCurve curve;
    // max_i |v0_i - V^h(t_i)| for h = 0..iters.
    std::vector<double> residual_history;
};

// Progressive-iteration approximation: start from the samples R(t_i) and
// repeatedly move each control point toward its interpolation target.
LuResult lu_iterate(const RationalBezierCurve& curve, int m, const std::vector<double>& nodes,
                    double lambda, int iters);

std::vector<double> lu_uniform_nodes(int m);
std::vector<double> lu_chebyshev_nodes(int m);

}  // namespace bezfit

#pragma once

#include <span>
#include <vector>

#include "bezfit/bezier.hpp"
#include "bezfit/chebyshev.hpp"
#include "bezfit/dual_bernstein.hpp"

namespace bezfit {

struct ApproximationRequest {
    RationalBezierCurve curve;
    int m = 0;
    ConstraintSpec cons;
    JacobiWeight weight;
    double eps = 1e-12;
};

struct ApproximationResult {
    BezierCurve approximant;
    // End-point derivative values of the rational curve, per coordinate:
    // rho0[c][i] = R^(i)(0), orders 0..k-1; rho1[c][i] = R^(i)(1), orders 0..l-1.
    std::vector<std::vector<double>> rho0;
    std::vector<std::vector<double>> rho1;
    MomentVector moments;
};

// R^(i)(0) (Left) or R^(i)(1) (Right) of one coordinate of the rational
// curve, for i = 0..max_order.
std::vector<double> endpoint_rho(std::span<const double> values, std::span<const double> weights,
                                 CurveEnd end, int max_order);

struct BoundaryPoints {
    std::vector<double> left;   // p_0 .. p_{k-1}
    std::vector<double> right;  // p_{m-l+1} .. p_m, ascending index
};

BoundaryPoints boundary_control_points(std::span<const double> rho0, std::span<const double> rho1,
                                       int m, ConstraintSpec cons);

// Interior coefficients p_k .. p_{m-l} of one coordinate, by dual-basis
// projection of the residual.
std::vector<double> inner_control_points(std::span<const double> values, std::span<const double> weights,
                                         int m, ConstraintSpec cons, JacobiWeight w,
                                         const DualBasisTable& table, const MomentVector& moments,
                                         const BoundaryPoints& boundary);

ApproximationResult approximate(const ApproximationRequest& req);

struct SegmentRequest {
    int m = 0;
    ConstraintSpec cons;
    JacobiWeight weight;
    double eps = 1e-12;
};

struct CompositePiece {
    RationalBezierCurve piece;  // the (possibly subdivided) rational input
    ApproximationResult result;
};

// Subdivides each segment at the given parameters, then approximates each
// piece independently; piece_requests are consumed in curve order and must
// match the total piece count.
std::vector<CompositePiece> approximate_composite(const CompositeCurve& curve,
                                                  const std::vector<std::vector<double>>& splits,
                                                  const std::vector<SegmentRequest>& piece_requests);

}  // namespace bezfit

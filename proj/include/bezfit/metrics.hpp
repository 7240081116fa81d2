#pragma once

#include "bezfit/bezier.hpp"
#include "bezfit/dual_bernstein.hpp"

namespace bezfit {

struct ErrorReport {
    double e_inf = 0.0;
    double e_2 = 0.0;
    int sample_count = 0;
    double argmax_t = 0.0;
};

struct MaxError {
    double value = 0.0;
    double argmax_t = 0.0;
};

// max_t |R(t) - P(t)| over a dense uniform sample including both endpoints.
MaxError max_error(const RationalBezierCurve& R, const BezierCurve& P, int samples = 10000);

// e_2(alpha,beta) = (int_0^1 (1-t)^alpha t^beta |R(t)-P(t)|^2 dt)^{1/2},
// via a Chebyshev fit of the squared error.
double l2_error(const RationalBezierCurve& R, const BezierCurve& P, JacobiWeight w, double eps = 1e-12);

ErrorReport error_report(const RationalBezierCurve& R, const BezierCurve& P, JacobiWeight w,
                         int samples = 10000, double eps = 1e-12);

}  // namespace bezfit

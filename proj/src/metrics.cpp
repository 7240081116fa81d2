#include "bezfit/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "bezfit/chebyshev.hpp"

namespace bezfit {

MaxError max_error(const RationalBezierCurve& R, const BezierCurve& P, int samples) {
    if (samples < 2) throw std::invalid_argument("max_error: need at least two samples");
    MaxError me;
    for (int i = 0; i < samples; ++i) {
        const double t = double(i) / (samples - 1);
        const double e = point_dist(rational_eval(R, t), poly_eval(P, t));
        if (e > me.value) {
            me.value = e;
            me.argmax_t = t;
        }
    }
    return me;
}

double l2_error(const RationalBezierCurve& R, const BezierCurve& P, JacobiWeight w, double eps) {
    if (!(w.alpha > -1.0) || !(w.beta > -1.0)) throw std::invalid_argument("l2_error: bad Jacobi exponents");
    auto sq = [&](double x) {
        const double t = 0.5 * (1.0 + x);
        const double e = point_dist(rational_eval(R, t), poly_eval(P, t));
        return e * e;
    };
    ChebyshevFit fit = chebyshev_fit(sq, eps);
    if (!fit.converged)
        throw QuadratureToleranceError("l2_error: squared-error fit did not meet tolerance", fit);
    const double integral = std::exp2(-w.sigma()) * jacobi_integral(w.alpha, w.beta, fit.series);
    // Roundoff can nudge a near-zero integral negative.
    return std::sqrt(std::max(integral, 0.0));
}

ErrorReport error_report(const RationalBezierCurve& R, const BezierCurve& P, JacobiWeight w,
                         int samples, double eps) {
    ErrorReport rep;
    const MaxError me = max_error(R, P, samples);
    rep.e_inf = me.value;
    rep.argmax_t = me.argmax_t;
    rep.sample_count = samples;
    rep.e_2 = l2_error(R, P, w, eps);
    return rep;
}

}  // namespace bezfit

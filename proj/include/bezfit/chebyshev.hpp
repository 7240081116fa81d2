#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bezfit/dual_bernstein.hpp"

namespace bezfit {

// S_M(x) = 1/2 g_0 T_0(x) + sum_{j=1..M} g_j T_j(x) on [-1,1].
struct ChebyshevSeries {
    std::vector<double> coeffs;  // g_0 .. g_M

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double x) const;  // Clenshaw
};

struct ChebyshevFit {
    ChebyshevSeries series;
    bool converged = false;
    double tail = 0.0;  // sum of the last four |g_j| at the final order
};

// Reciprocal-weight function v(x) = (1-x)^l (1+x)^k / w((1+x)/2).
std::function<double(double)> theta(std::vector<double> curve_weights, ConstraintSpec cons);

// Interpolate f at the extrema nodes cos(i pi / M), doubling M from 32
// until the coefficient tail drops below eps or m_max is exceeded.
ChebyshevFit chebyshev_fit(const std::function<double(double)>& f, double eps, int m_max = 1 << 17);

// Exact value of int_{-1}^{1} (1-x)^a (1+x)^b S_M(x) dx.
double jacobi_integral(double a, double b, const ChebyshevSeries& s);

namespace detail {
// Chebyshev interpolation coefficients of the samples f(cos(i pi / M)),
// i = 0..M; fast cosine transform (M a power of two) and the direct
// O(M^2) summation it is tested against.
std::vector<double> cosine_transform(std::span<const double> samples);
std::vector<double> cosine_transform_direct(std::span<const double> samples);
}  // namespace detail

// Moments I_h = int_0^1 (1-t)^a t^b B^N_h(t) / w(t) dt for h = k..N-l.
struct MomentVector {
    int h_min = 0;
    int h_max = 0;
    std::vector<double> values;
    int cheb_order = 0;  // M used for the reciprocal-weight fit

    double at(int h) const;
};

class QuadratureToleranceError : public std::runtime_error {
public:
    QuadratureToleranceError(const std::string& what, ChebyshevFit best)
        : std::runtime_error(what), best_fit(std::move(best)) {}
    ChebyshevFit best_fit;
};

MomentVector rational_moments(std::span<const double> curve_weights, int m, ConstraintSpec cons,
                              JacobiWeight w, double eps);

}  // namespace bezfit

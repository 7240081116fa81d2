#include "bezfit/chebyshev.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bezfit/bezier.hpp"
#include "bezfit/math_util.hpp"

namespace bezfit {

namespace {

// In-place iterative radix-2 FFT; size must be a power of two.
void fft(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const auto u = a[i + j];
                const auto v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

double tail_sum(const std::vector<double>& g) {
    double s = 0.0;
    for (std::size_t i = g.size() >= 4 ? g.size() - 4 : 0; i < g.size(); ++i) s += std::fabs(g[i]);
    return s;
}

}  // namespace

double ChebyshevSeries::eval(double x) const {
    double b1 = 0.0, b2 = 0.0;
    for (int j = order(); j >= 1; --j) {
        const double b = 2.0 * x * b1 - b2 + coeffs[j];
        b2 = b1;
        b1 = b;
    }
    return x * b1 - b2 + 0.5 * coeffs[0];
}

std::function<double(double)> theta(std::vector<double> curve_weights, ConstraintSpec cons) {
    for (double w : curve_weights)
        if (!(w > 0.0)) throw std::invalid_argument("theta: weights must be positive");
    return [w = std::move(curve_weights), cons](double x) {
        const double num = std::pow(1.0 - x, cons.l) * std::pow(1.0 + x, cons.k);
        return num / weight_poly_eval(w, 0.5 * (1.0 + x));
    };
}

namespace detail {

std::vector<double> cosine_transform(std::span<const double> samples) {
    const std::size_t M = samples.size() - 1;
    if (M == 0 || (M & (M - 1)) != 0) throw std::invalid_argument("cosine_transform: M must be a power of two");
    // Even extension of the samples; the DCT is the real part of its FFT.
    std::vector<std::complex<double>> v(2 * M);
    for (std::size_t i = 0; i <= M; ++i) v[i] = samples[i];
    for (std::size_t i = M + 1; i < 2 * M; ++i) v[i] = samples[2 * M - i];
    fft(v);
    std::vector<double> g(M + 1);
    for (std::size_t j = 0; j <= M; ++j) {
        const double scale = (j == M ? 1.0 : 2.0) / (2.0 * static_cast<double>(M));
        g[j] = scale * v[j].real();
    }
    return g;
}

std::vector<double> cosine_transform_direct(std::span<const double> samples) {
    const std::size_t M = samples.size() - 1;
    std::vector<double> g(M + 1);
    for (std::size_t j = 0; j <= M; ++j) {
        double s = 0.5 * (samples[0] + (j % 2 == 0 ? 1.0 : -1.0) * samples[M]);
        for (std::size_t i = 1; i < M; ++i)
            s += samples[i] * std::cos(static_cast<double>(i * j) * std::numbers::pi / static_cast<double>(M));
        g[j] = (j == M ? 1.0 : 2.0) / static_cast<double>(M) * s;
    }
    return g;
}

}  // namespace detail

ChebyshevFit chebyshev_fit(const std::function<double(double)>& f, double eps, int m_max) {
    if (!(eps > 0.0)) throw std::invalid_argument("chebyshev_fit: tolerance must be positive");
    int M = 32;
    std::vector<double> samples(M + 1);
    for (int i = 0; i <= M; ++i) samples[i] = f(std::cos(i * std::numbers::pi / M));

    ChebyshevFit best;
    best.tail = std::numeric_limits<double>::infinity();
    for (;;) {
        std::vector<double> g = detail::cosine_transform(samples);
        const double tail = tail_sum(g);
        if (tail < eps) return ChebyshevFit{ChebyshevSeries{std::move(g)}, true, tail};
        if (tail < best.tail) best = ChebyshevFit{ChebyshevSeries{std::move(g)}, false, tail};
        if (2 * M > m_max) return best;
        // Old nodes are the even-index nodes of the doubled grid.
        std::vector<double> doubled(2 * M + 1);
        for (int i = 0; i <= M; ++i) doubled[2 * i] = samples[i];
        for (int i = 1; i < 2 * M; i += 2) doubled[i] = f(std::cos(i * std::numbers::pi / (2 * M)));
        samples = std::move(doubled);
        M *= 2;
    }
}

double jacobi_integral(double a, double b, const ChebyshevSeries& s) {
    if (!(a > -1.0) || !(b > -1.0)) throw std::invalid_argument("jacobi_integral: exponents must exceed -1");
    const double r = b - a;
    const double sc = a + b + 1.0;
    const int M = s.order();
    std::vector<double> d(M + 2, 0.0);
    for (int i = M; i >= 1; --i) d[i - 1] = (2.0 * r * d[i] + (i - sc) * d[i + 1] - 2.0 * s.coeffs[i]) / (i + sc);
    const double delta = s.coeffs[0] - r * d[0] + sc * d[1];
    return std::exp((sc - 1.0) * std::numbers::ln2 + log_beta(a + 1.0, b + 1.0)) * delta;
}

double MomentVector::at(int h) const {
    if (h < h_min || h > h_max) throw std::out_of_range("MomentVector: index outside [k, N-l]");
    return values[static_cast<std::size_t>(h - h_min)];
}

MomentVector rational_moments(std::span<const double> curve_weights, int m, ConstraintSpec cons,
                              JacobiWeight w, double eps) {
    const int n = static_cast<int>(curve_weights.size()) - 1;
    const int N = n + m;
    const int k = cons.k, l = cons.l;
    if (k + l > m) throw std::invalid_argument("rational_moments: k+l > m");

    ChebyshevFit fit = chebyshev_fit(theta({curve_weights.begin(), curve_weights.end()}, cons), eps);
    if (!fit.converged)
        throw QuadratureToleranceError("rational_moments: weight nearly singular, tolerance unreachable", fit);

    MomentVector mv;
    mv.h_min = k;
    mv.h_max = N - l;
    mv.cheb_order = fit.series.order();
    mv.values.resize(static_cast<std::size_t>(N - l - k + 1));
    const double log_scale = -(w.sigma() + N) * std::numbers::ln2;
    for (int h = k; h <= N - l; ++h) {
        const double J = jacobi_integral(w.alpha + N - l - h, w.beta - k + h, fit.series);
        mv.values[static_cast<std::size_t>(h - k)] = std::exp(log_binom(N, h) + log_scale) * J;
    }
    return mv;
}

}  // namespace bezfit

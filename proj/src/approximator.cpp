#include "bezfit/approximator.hpp"

#include <cmath>
#include <stdexcept>

#include "bezfit/math_util.hpp"

namespace bezfit {

namespace {

// n! / (n-r)!
double falling(int n, int r) {
    double f = 1.0;
    for (int t = 0; t < r; ++t) f *= n - t;
    return f;
}

double binom_ratio(int m, int j, int n, int h, int N) {
    // C(m,j) C(n,h) / C(N, j+h)
    if (N <= 60) return binom(m, j) * binom(n, h) / binom(N, j + h);
    return std::exp(log_binom(m, j) + log_binom(n, h) - log_binom(N, j + h));
}

}  // namespace

std::vector<double> endpoint_rho(std::span<const double> values, std::span<const double> weights,
                                 CurveEnd end, int max_order) {
    const int n = static_cast<int>(weights.size()) - 1;
    if (values.size() != weights.size()) throw std::invalid_argument("endpoint_rho: size mismatch");
    if (max_order > n) throw std::invalid_argument("endpoint_rho: order exceeds degree");
    std::vector<double> q(weights.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = weights[i] * values[i];

    const double w_end = end == CurveEnd::Left ? weights[0] : weights[n];
    std::vector<double> rho(max_order + 1);
    for (int i = 0; i <= max_order; ++i) {
        const int base = end == CurveEnd::Left ? 0 : n - i;
        double s = falling(n, i) * forward_difference(std::span(q).subspan(base), i);
        for (int j = 0; j < i; ++j) {
            const int wbase = end == CurveEnd::Left ? 0 : n - i + j;
            s -= binom(i, j) * falling(n, i - j) *
                 forward_difference(weights.subspan(wbase), i - j) * rho[j];
        }
        rho[i] = s / w_end;
    }
    return rho;
}

BoundaryPoints boundary_control_points(std::span<const double> rho0, std::span<const double> rho1,
                                       int m, ConstraintSpec cons) {
    if (rho0.size() < static_cast<std::size_t>(cons.k) || rho1.size() < static_cast<std::size_t>(cons.l))
        throw std::invalid_argument("boundary_control_points: too few derivative values");
    BoundaryPoints bp;
    bp.left.resize(cons.k);
    for (int i = 0; i < cons.k; ++i) {
        double s = rho0[i] / falling(m, i);
        for (int j = 0; j < i; ++j) s -= ((i + j) % 2 == 0 ? 1.0 : -1.0) * binom(i, j) * bp.left[j];
        bp.left[i] = s;
    }
    bp.right.resize(cons.l);
    // bp.right holds p_{m-l+1}..p_m; entry for p_{m-i} sits at index l-1-i.
    for (int i = 0; i < cons.l; ++i) {
        double s = (i % 2 == 0 ? 1.0 : -1.0) * rho1[i] / falling(m, i);
        for (int j = 1; j <= i; ++j)
            s -= (j % 2 == 0 ? 1.0 : -1.0) * binom(i, j) * bp.right[cons.l - 1 - i + j];
        bp.right[cons.l - 1 - i] = s;
    }
    return bp;
}

std::vector<double> inner_control_points(std::span<const double> values, std::span<const double> weights,
                                         int m, ConstraintSpec cons, JacobiWeight w,
                                         const DualBasisTable& table, const MomentVector& moments,
                                         const BoundaryPoints& boundary) {
    const int n = static_cast<int>(weights.size()) - 1;
    const int N = n + m;
    const int k = cons.k, l = cons.l;
    if (table.degree() != m || table.constraints().k != k || table.constraints().l != l)
        throw std::invalid_argument("inner_control_points: table mismatch");
    if (moments.h_min != k || moments.h_max != N - l)
        throw std::invalid_argument("inner_control_points: moment range mismatch");
    if (boundary.left.size() != static_cast<std::size_t>(k) ||
        boundary.right.size() != static_cast<std::size_t>(l))
        throw std::invalid_argument("inner_control_points: boundary size mismatch");

    // s_j = C(m,j) sum_h C(n,h) w_h r_h I_{j+h} / C(N,j+h); independent of i.
    // The projection sums cancel against table entries that grow fast with
    // m, so everything from here on runs in extended precision.
    std::vector<long double> s(m - k - l + 1, 0.0L);
    for (int j = k; j <= m - l; ++j) {
        long double acc = 0.0L;
        for (int h = 0; h <= n; ++h)
            acc += static_cast<long double>(binom_ratio(m, j, n, h, N)) * weights[h] * values[h] *
                   moments.at(j + h);
        s[j - k] = acc;
    }

    std::vector<double> p(m - k - l + 1, 0.0);
    for (int i = k; i <= m - l; ++i) {
        long double acc = 0.0L;
        for (int j = k; j <= m - l; ++j) acc += table.at_l(i, j) * s[j - k];
        for (int j = 0; j < k; ++j)
            acc -= boundary.left[j] * detail::k_coefficient_l(i, j, m, cons, w);
        for (int j = m - l + 1; j <= m; ++j)
            acc -= boundary.right[j - (m - l + 1)] * detail::k_coefficient_l(i, j, m, cons, w);
        p[i - k] = static_cast<double>(acc);
    }
    return p;
}

ApproximationResult approximate(const ApproximationRequest& req) {
    const int m = req.m;
    const int k = req.cons.k, l = req.cons.l;
    if (k + l > m) throw std::invalid_argument("approximate: k+l > m");
    const int d = req.curve.dimension();
    const int n = req.curve.degree();
    if (k > n + 1 || l > n + 1)
        throw std::invalid_argument("approximate: constraint order exceeds input degree");

    // The c-table and the moments depend only on (m,k,l,alpha,beta) and the
    // weights, so they are shared across the d coordinates.
    DualBasisTable table = build_ctable(m, req.cons, req.weight);
    MomentVector moments = rational_moments(req.curve.weights, m, req.cons, req.weight, req.eps);

    ApproximationResult res;
    res.moments = moments;
    res.rho0.resize(d);
    res.rho1.resize(d);
    std::vector<Point> pts(m + 1, Point(d, 0.0));
    for (int c = 0; c < d; ++c) {
        const std::vector<double> values = req.curve.component(c);
        res.rho0[c] = k > 0 ? endpoint_rho(values, req.curve.weights, CurveEnd::Left, k - 1)
                            : std::vector<double>{};
        res.rho1[c] = l > 0 ? endpoint_rho(values, req.curve.weights, CurveEnd::Right, l - 1)
                            : std::vector<double>{};
        BoundaryPoints bp = boundary_control_points(res.rho0[c], res.rho1[c], m, req.cons);
        std::vector<double> inner =
            inner_control_points(values, req.curve.weights, m, req.cons, req.weight, table, moments, bp);
        for (int i = 0; i < k; ++i) pts[i][c] = bp.left[i];
        for (int i = k; i <= m - l; ++i) pts[i][c] = inner[i - k];
        for (int i = m - l + 1; i <= m; ++i) pts[i][c] = bp.right[i - (m - l + 1)];
    }
    res.approximant = BezierCurve(std::move(pts));
    return res;
}

std::vector<CompositePiece> approximate_composite(const CompositeCurve& curve,
                                                  const std::vector<std::vector<double>>& splits,
                                                  const std::vector<SegmentRequest>& piece_requests) {
    if (!splits.empty() && splits.size() != curve.segments.size())
        throw std::invalid_argument("approximate_composite: one split list per segment expected");

    std::vector<RationalBezierCurve> pieces;
    for (std::size_t seg = 0; seg < curve.segments.size(); ++seg) {
        RationalBezierCurve rest = curve.segments[seg];
        double consumed = 0.0;
        if (!splits.empty()) {
            for (double t : splits[seg]) {
                if (!(t > consumed && t < 1.0))
                    throw std::invalid_argument("approximate_composite: split parameters must increase in (0,1)");
                auto [left, right] = subdivide(rest, (t - consumed) / (1.0 - consumed));
                pieces.push_back(std::move(left));
                rest = std::move(right);
                consumed = t;
            }
        }
        pieces.push_back(std::move(rest));
    }
    if (piece_requests.size() != pieces.size())
        throw std::invalid_argument("approximate_composite: request count does not match piece count");

    if (curve.continuity_order >= 0) {
        const int need = curve.continuity_order + 1;
        for (std::size_t p = 0; p + 1 < pieces.size(); ++p) {
            if (piece_requests[p].cons.l < need || piece_requests[p + 1].cons.k < need)
                throw std::invalid_argument(
                    "approximate_composite: join continuity needs l (left piece) and k (right piece) "
                    ">= continuity_order + 1");
        }
    }

    std::vector<CompositePiece> out;
    out.reserve(pieces.size());
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        const SegmentRequest& sr = piece_requests[p];
        ApproximationRequest req{pieces[p], sr.m, sr.cons, sr.weight, sr.eps};
        out.push_back(CompositePiece{pieces[p], approximate(req)});
    }
    return out;
}

}  // namespace bezfit

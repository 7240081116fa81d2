#include "bezfit/dual_bernstein.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bezfit/bezier.hpp"
#include "bezfit/math_util.hpp"

namespace bezfit {

namespace {

void validate(int m, ConstraintSpec cons, JacobiWeight w) {
    if (cons.k < 0 || cons.l < 0) throw std::invalid_argument("constraint orders must be nonnegative");
    if (cons.k + cons.l > m) throw std::invalid_argument("constraint orders exceed degree: k+l > m");
    if (!(w.alpha > -1.0) || !(w.beta > -1.0))
        throw std::invalid_argument("Jacobi exponents must exceed -1");
}

// log-magnitude / sign pair in extended precision
struct SignedLogL {
    long double log = 0.0L;
    int sign = 1;
};

SignedLogL operator*(SignedLogL a, SignedLogL b) { return {a.log + b.log, a.sign * b.sign}; }
SignedLogL operator/(SignedLogL a, SignedLogL b) { return {a.log - b.log, a.sign * b.sign}; }

// rising factorial (a)_n, factor by factor so negative arguments keep
// their sign pattern
SignedLogL poch_l(long double a, int n) {
    SignedLogL r;
    for (int t = 0; t < n; ++t) {
        const long double f = a + t;
        if (f == 0.0L) return {-std::numeric_limits<long double>::infinity(), 0};
        r.log += std::log(std::fabs(f));
        if (f < 0.0L) r.sign = -r.sign;
    }
    return r;
}

long double log_binom_l(int n, int r) {
    return std::lgamma(static_cast<long double>(n) + 1.0L) -
           std::lgamma(static_cast<long double>(r) + 1.0L) -
           std::lgamma(static_cast<long double>(n - r) + 1.0L);
}

}  // namespace

DualBasisTable::DualBasisTable(int m, ConstraintSpec cons, JacobiWeight weight,
                               std::vector<long double> c)
    : m_(m), cons_(cons), weight_(weight), c_(std::move(c)) {
    const std::size_t dim = static_cast<std::size_t>(size());
    if (c_.size() != dim * dim) throw std::invalid_argument("DualBasisTable: wrong table size");
}

double DualBasisTable::at(int i, int j) const { return static_cast<double>(at_l(i, j)); }

long double DualBasisTable::at_l(int i, int j) const {
    if (i < cons_.k || i > m_ - cons_.l || j < cons_.k || j > m_ - cons_.l) return 0.0L;
    return c_[static_cast<std::size_t>(i - cons_.k) * size() + (j - cons_.k)];
}

DualBasisTable build_ctable(int m, ConstraintSpec cons, JacobiWeight w) {
    validate(m, cons, w);
    const int k = cons.k, l = cons.l;
    const long double alpha = w.alpha, beta = w.beta;
    const long double sigma = alpha + beta + 1.0L;
    const int dim = m - k - l + 1;
    std::vector<long double> c(static_cast<std::size_t>(dim) * dim, 0.0L);
    auto cell = [&](int i, int j) -> long double& {
        return c[static_cast<std::size_t>(i - k) * dim + (j - k)];
    };
    auto fetch = [&](int i, int j) -> long double {
        if (i < k || i > m - l || j < k || j > m - l) return 0.0L;
        return cell(i, j);
    };

    // Last entry of the first row, assembled in log space.
    {
        SignedLogL v = poch_l(sigma + 2 * k + 2 * l + 1, m - k - l);
        v.log += -log_binom_l(m, k) - log_binom_l(m, l) -
                 (std::lgamma(alpha + 2 * l + 1) + std::lgamma(beta + 2 * k + 1) -
                  std::lgamma(alpha + 2 * l + beta + 2 * k + 2)) -
                 std::lgamma(static_cast<long double>(m - k - l) + 1.0L);
        if ((m - k - l) % 2 != 0) v.sign = -v.sign;
        cell(k, m - l) = v.sign * std::exp(v.log);
    }

    // Rest of the first row, right to left.
    for (int j = m - l - 1; j >= k; --j) {
        const long double num = (j - m) * (j - k + 1.0L) * (j + beta + k + 2.0L);
        const long double den = (j + 1.0L) * (j - m + l) * (j - alpha - l - m);
        cell(k, j) = num / den * cell(k, j + 1);
    }

    auto A = [&](int u) { return (u - m) * (u - k + 1.0L) * (u + k + beta + 1.0L) / (u + 1.0L); };
    auto B = [&](int u) {
        assert(u - m - 1 != 0);
        return u * (u - m - l - alpha - 1.0L) * (u - m + l - 1.0L) / (u - m - 1.0L);
    };

    for (int i = k; i <= m - l - 1; ++i) {
        const long double Ai = A(i);
        for (int j = k; j <= m - l; ++j) {
            const long double v =
                ((i - j) * (2.0L * i + 2.0L * j - 2.0L * m - alpha + beta) * fetch(i, j) +
                 B(j) * fetch(i, j - 1) + A(j) * fetch(i, j + 1) - B(i) * fetch(i - 1, j)) /
                Ai;
            cell(i + 1, j) = v;
        }
    }

    for (long double v : c)
        if (!std::isfinite(v))
            throw std::domain_error("build_ctable: non-finite entry (recurrence unstable for these parameters)");
    return DualBasisTable(m, cons, w, std::move(c));
}

double dual_eval(const DualBasisTable& table, int i, double t) {
    const int m = table.degree();
    const int k = table.constraints().k, l = table.constraints().l;
    if (i < k || i > m - l) throw std::out_of_range("dual_eval: index outside [k, m-l]");
    long double s = 0.0L;
    for (int j = k; j <= m - l; ++j) s += table.at_l(i, j) * bernstein_eval(m, j, t);
    return static_cast<double>(s);
}

namespace detail {

long double k_coefficient_l(int i, int j, int m, ConstraintSpec cons, JacobiWeight w) {
    validate(m, cons, w);
    const int k = cons.k, l = cons.l;
    if (i < k || i > m - l) throw std::invalid_argument("k_coefficient: i outside [k, m-l]");
    const bool boundary = (j >= 0 && j < k) || (j > m - l && j <= m);
    if (!boundary) throw std::invalid_argument("k_coefficient: j must be a boundary index");

    SignedLogL v{log_binom_l(m, j) - log_binom_l(m, i), 1};
    v = v * poch_l(k - j, m - k - l + 1);
    v.log -= std::log(std::fabs(static_cast<long double>(i - j)));
    if (i - j < 0) v.sign = -v.sign;
    v.log -= std::lgamma(static_cast<long double>(i - k) + 1.0L) +
             std::lgamma(static_cast<long double>(m - l - i) + 1.0L);
    v = v * poch_l(static_cast<long double>(w.alpha) + l + 1, m - j) *
        poch_l(static_cast<long double>(w.beta) + k + 1, j);
    v = v / (poch_l(static_cast<long double>(w.alpha) + l + 1, m - i) *
             poch_l(static_cast<long double>(w.beta) + k + 1, i));
    if ((i - k) % 2 != 0) v.sign = -v.sign;
    return v.sign * std::exp(v.log);
}

}  // namespace detail

double k_coefficient(int i, int j, int m, ConstraintSpec cons, JacobiWeight w) {
    return static_cast<double>(detail::k_coefficient_l(i, j, m, cons, w));
}

}  // namespace bezfit

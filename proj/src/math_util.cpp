#include "bezfit/math_util.hpp"

#include <array>
#include <vector>

namespace bezfit {

namespace {

constexpr int kTableMax = 60;

const std::vector<std::vector<double>>& pascal_table() {
    static const std::vector<std::vector<double>> table = [] {
        std::vector<std::vector<double>> t(kTableMax + 1);
        for (int n = 0; n <= kTableMax; ++n) {
            t[n].resize(n + 1);
            t[n][0] = t[n][n] = 1.0;
            for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
        return t;
    }();
    return table;
}

}  // namespace

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (n <= kTableMax) return pascal_table()[n][k];
    return std::exp(log_binom(n, k));
}

double log_binom(int n, int k) {
    if (k < 0 || k > n) throw std::domain_error("log_binom: index out of range");
    if (n <= kTableMax) return std::log(pascal_table()[n][k]);
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

SignedLog log_poch(double a, int n) {
    if (n < 0) throw std::domain_error("log_poch: negative length");
    SignedLog r{0.0, 1};
    // For positive a the whole product is a gamma ratio; otherwise multiply
    // the (few) factors directly in log form.
    if (a > 0.0) {
        r.log = std::lgamma(a + n) - std::lgamma(a);
        return r;
    }
    for (int j = 0; j < n; ++j) {
        double f = a + j;
        if (f == 0.0) throw std::domain_error("log_poch: vanishing factor");
        r = r * SignedLog::of(f);
    }
    return r;
}

double log_beta(double x, double y) {
    if (x <= 0.0 || y <= 0.0) throw std::domain_error("log_beta: nonpositive argument");
    return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
}

}  // namespace bezfit

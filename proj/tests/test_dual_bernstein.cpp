#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bezfit/bezier.hpp"
#include "bezfit/dual_bernstein.hpp"
#include "oracles.hpp"

using namespace bezfit;

namespace {

double poch(double a, int n) {
    double p = 1.0;
    for (int j = 0; j < n; ++j) p *= a + j;
    return p;
}

double beta_fn(double x, double y) {
    return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

double fact(int n) { return std::tgamma(n + 1.0); }

double binom_d(int n, int k) { return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0))); }

// Closed form of the whole first row, used as a cross-check of the
// right-to-left ratio recurrence actually used by build_ctable.
double first_row_closed_form(int m, int k, int l, double alpha, double beta, int j) {
    const double sigma = alpha + beta + 1.0;
    const double lead = 1.0 / binom_d(m, k) * ((k % 2 == 0) ? 1.0 : -1.0) *
                        poch(sigma + 2 * k + 2 * l + 1, m - k - l) * poch(k + beta + 2, m - l) /
                        (fact(m - k - l) * beta_fn(alpha + 2 * l + 1, beta + 2 * k + 1));
    const double dep = binom_d(m - k - l, j - k) / binom_d(m, j) * ((j % 2 == 0) ? 1.0 : -1.0) /
                       (poch(alpha + 2 * l + 1, m - l - j) * poch(k + beta + 2, j));
    return lead * dep;
}

}  // namespace

TEST_CASE("build_ctable small closed forms") {
    CHECK(build_ctable(0, {0, 0}, {0, 0}).at(0, 0) == doctest::Approx(1.0).epsilon(1e-14));

    auto t1 = build_ctable(1, {0, 0}, {0, 0});
    CHECK(t1.at(0, 0) == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(t1.at(0, 1) == doctest::Approx(-2.0).epsilon(1e-13));
    CHECK(t1.at(1, 0) == doctest::Approx(-2.0).epsilon(1e-13));
    CHECK(t1.at(1, 1) == doctest::Approx(4.0).epsilon(1e-13));

    // single constrained basis function: c_11 = 1/<B^2_1,B^2_1> = 15/2
    auto t2 = build_ctable(2, {1, 1}, {0, 0});
    CHECK(t2.at(1, 1) == doctest::Approx(7.5).epsilon(1e-13));
}

TEST_CASE("build_ctable argument validation") {
    CHECK_THROWS_AS(build_ctable(2, {2, 1}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_ctable(3, {0, 0}, {-1.0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_ctable(3, {0, 0}, {0, -1.5}), std::invalid_argument);
    CHECK_THROWS_AS(build_ctable(3, {-1, 0}, {0, 0}), std::invalid_argument);
}

TEST_CASE("first row matches the direct closed form") {
    for (auto [alpha, beta] : {std::pair{0.0, 0.0}, {0.5, 0.5}, {1.0, 0.0}}) {
        for (int m : {3, 6, 9}) {
            for (int k = 0; k <= 2; ++k) {
                for (int l = 0; l <= 2; ++l) {
                    if (k + l > m) continue;
                    auto table = build_ctable(m, {k, l}, {alpha, beta});
                    for (int j = k; j <= m - l; ++j) {
                        const double want = first_row_closed_form(m, k, l, alpha, beta, j);
                        CHECK(table.at(k, j) == doctest::Approx(want).epsilon(1e-10));
                    }
                }
            }
        }
    }
}

TEST_CASE("table symmetry and reflection") {
    for (auto [alpha, beta] : {std::pair{0.0, 0.0}, {0.5, 0.5}, {1.0, 0.0}}) {
        for (int m : {5, 12, 20}) {
            const int k = 1, l = 2;
            auto table = build_ctable(m, {k, l}, {alpha, beta});
            double cmax = 0.0, asym = 0.0;
            for (int i = k; i <= m - l; ++i)
                for (int j = k; j <= m - l; ++j) {
                    cmax = std::max(cmax, std::fabs(table.at(i, j)));
                    asym = std::max(asym, std::fabs(table.at(i, j) - table.at(j, i)));
                }
            CHECK(asym / cmax < 1e-10);

            auto mirrored = build_ctable(m, {l, k}, {beta, alpha});
            for (int i = k; i <= m - l; ++i)
                for (int j = k; j <= m - l; ++j)
                    CHECK(table.at(i, j) ==
                          doctest::Approx(mirrored.at(m - i, m - j)).epsilon(1e-8));
        }
    }
}

TEST_CASE("table equals the Gram matrix inverse") {
    for (auto [alpha, beta] : {std::pair{0.0, 0.0}, {0.5, 0.5}, {1.0, 0.0}}) {
        for (int m : {4, 7, 10}) {
            for (auto [k, l] : {std::pair{0, 0}, {1, 1}, {2, 1}}) {
                auto table = build_ctable(m, {k, l}, {alpha, beta});
                auto Ginv = oracle::invert(oracle::bernstein_gram(m, k, l, alpha, beta));
                for (int i = k; i <= m - l; ++i)
                    for (int j = k; j <= m - l; ++j)
                        CHECK(table.at(i, j) ==
                              doctest::Approx(Ginv[i - k][j - k]).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("dual_eval") {
    auto t0 = build_ctable(0, {0, 0}, {0, 0});
    CHECK(dual_eval(t0, 0, 0.3) == doctest::Approx(1.0));

    auto t1 = build_ctable(1, {0, 0}, {0, 0});
    CHECK(dual_eval(t1, 0, 0.0) == doctest::Approx(4.0).epsilon(1e-13));
    CHECK_THROWS_AS(dual_eval(t1, 2, 0.5), std::out_of_range);

    // biorthogonality under the Jacobi inner product (spot check; the full
    // sweep lives in the acceptance suite)
    const double alpha = 0.5, beta = 0.5;
    const int m = 8, k = 1, l = 1;
    auto table = build_ctable(m, {k, l}, {alpha, beta});
    for (int i = k; i <= m - l; ++i)
        for (int j = k; j <= m - l; ++j) {
            const double ip = oracle::integrate_jacobi01(alpha, beta, 200, [&](double t) {
                return dual_eval(table, i, t) * bernstein_eval(m, j, t);
            });
            CHECK(std::fabs(ip - (i == j ? 1.0 : 0.0)) < 1e-8);
        }
}

TEST_CASE("k_coefficient") {
    CHECK(k_coefficient(1, 0, 2, {1, 0}, {0, 0}) == doctest::Approx(1.0).epsilon(1e-13));

    SUBCASE("matches quadrature of <B_j, D_i>") {
        for (auto [alpha, beta] : {std::pair{0.0, 0.0}, {0.5, 0.5}, {1.0, 0.0}}) {
            for (int m : {4, 8, 12}) {
                const int k = 2, l = 1;
                auto table = build_ctable(m, {k, l}, {alpha, beta});
                for (int i = k; i <= m - l; ++i) {
                    for (int j : {0, 1, m}) {
                        const double want = oracle::integrate_jacobi01(alpha, beta, 300, [&](double t) {
                            return bernstein_eval(m, j, t) * dual_eval(table, i, t);
                        });
                        const double got = k_coefficient(i, j, m, {k, l}, {alpha, beta});
                        CHECK(got == doctest::Approx(want).epsilon(1e-9));
                    }
                }
            }
        }
    }
    SUBCASE("reflection symmetry") {
        const int m = 9;
        for (int i = 2; i <= m - 1; ++i)
            for (int j : {0, 1}) {
                const double a = k_coefficient(i, j, m, {2, 1}, {0.5, 1.0});
                const double b = k_coefficient(m - i, m - j, m, {1, 2}, {1.0, 0.5});
                CHECK(a == doctest::Approx(b).epsilon(1e-12));
            }
    }
    SUBCASE("interior j is rejected") {
        CHECK_THROWS_AS(k_coefficient(2, 3, 6, {1, 1}, {0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(k_coefficient(0, 0, 6, {1, 1}, {0, 0}), std::invalid_argument);
    }
}

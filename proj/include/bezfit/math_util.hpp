#pragma once

#include <cmath>
#include <stdexcept>

namespace bezfit {

// Binomial coefficients: exact Pascal table up to n = 60, log-gamma above.
double binom(int n, int k);
double log_binom(int n, int k);

// log |x| together with sign(x); the identity element is {0, +1}.
struct SignedLog {
    double log = 0.0;
    int sign = 1;

    SignedLog operator*(const SignedLog& o) const { return {log + o.log, sign * o.sign}; }
    SignedLog operator/(const SignedLog& o) const { return {log - o.log, sign * o.sign}; }
    double value() const { return sign * std::exp(log); }

    static SignedLog of(double x) {
        if (x == 0.0) throw std::domain_error("SignedLog of zero");
        return {std::log(std::fabs(x)), x < 0.0 ? -1 : 1};
    }
};

// Rising factorial (a)_n in log form, valid for any real a (sign tracked).
// Throws if some factor vanishes.
SignedLog log_poch(double a, int n);

// Euler Beta in log form (positive arguments).
double log_beta(double x, double y);

}  // namespace bezfit

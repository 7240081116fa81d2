#pragma once

#include <vector>

namespace bezfit {

// End-point constraint orders: derivatives of order < k are pinned at t = 0,
// of order < l at t = 1.
struct ConstraintSpec {
    int k = 0;
    int l = 0;
};

// Jacobi weight (1-t)^alpha t^beta on [0,1].
struct JacobiWeight {
    double alpha = 0.0;
    double beta = 0.0;

    double sigma() const { return alpha + beta + 1.0; }
};

// Bezier coefficients c_ij of the constrained dual Bernstein basis of
// degree m: D_i = sum_j c_ij B^m_j for i,j in [k, m-l].  The table equals
// the inverse of the constrained Bernstein Gram matrix.
class DualBasisTable {
public:
    DualBasisTable(int m, ConstraintSpec cons, JacobiWeight weight, std::vector<long double> c);

    int degree() const { return m_; }
    ConstraintSpec constraints() const { return cons_; }
    JacobiWeight weight() const { return weight_; }
    int size() const { return m_ - cons_.k - cons_.l + 1; }

    // c_ij with the out-of-range convention c_ij = 0.
    double at(int i, int j) const;
    // Full-precision entry; the table is built and kept in extended
    // precision because its entries grow fast and the projection sums
    // cancel heavily.
    long double at_l(int i, int j) const;

private:
    int m_;
    ConstraintSpec cons_;
    JacobiWeight weight_;
    std::vector<long double> c_;  // size() x size(), row-major, offset by k
};

DualBasisTable build_ctable(int m, ConstraintSpec cons, JacobiWeight w);

// D^{(m,k,l)}_i(t) for k <= i <= m-l.
double dual_eval(const DualBasisTable& table, int i, double t);

// K_ij = <B^m_j, D^{(m,k,l)}_i> for boundary indices j < k or j > m-l.
double k_coefficient(int i, int j, int m, ConstraintSpec cons, JacobiWeight w);

namespace detail {
// Extended-precision K_ij, used where it multiplies large table entries.
long double k_coefficient_l(int i, int j, int m, ConstraintSpec cons, JacobiWeight w);
}  // namespace detail

}  // namespace bezfit

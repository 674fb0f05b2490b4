#pragma once

// Classical endpoints: the Legendre addition formula, the ultraspherical
// product formula, and the numerical base-to-one scan that drives the
// q-identities toward them along q = c^{1/m}, p = m r, t = c^r.

#include <vector>

#include "qaw/rational.hpp"
#include "qaw/report.hpp"

namespace qaw {

VerificationReport classical_addition_check(int l, double x, double y, double t, double tol);

// degree-one case as an exact polynomial identity in x, y, t and the formal
// square roots of 1-x^2 and 1-y^2
bool classical_addition_l1_symbolic();

// the product formula via Gauss-Chebyshev quadrature with num_nodes points;
// |x|, |y| < 1 (the endpoint is degenerate for n >= 1)
VerificationReport classical_product_check(int l, int n, double x, double y, int num_nodes,
                                           double tol);

struct LimitScanConfig {
    int l = 2;
    Rat c = make_rat(1, 2);          // 0 < c < 1
    int r = 1;                       // p = m r; t = c^r
    std::vector<int> m_list = {8, 16, 32};
    std::vector<double> x_outside = {1.7, 2.4};  // outside [B-2A, B+2A]
    double x_inside = 0.3;
};

struct LimitScanRow {
    int m;
    double dev_addition;     // normalized q-sum vs classical sum
    double dev_dconst;       // D^{n,l}/(q;q)_l vs its classical constant
    double dev_ratio;        // q-Laguerre ratio vs the rho(x) formula
    double dev_bigqjacobi;   // big q-Jacobi value vs classical Jacobi value
    double dev_qlegendre;    // p_l/(q;q)_l vs 4^l R_l at x_inside
    double dev_poch;         // the descending Pochhammer vs ((1-c^2)(1-c^2 t^2))^n
};

struct LimitScanResult {
    std::vector<LimitScanRow> rows;
    VerificationReport report;  // pass iff every deviation strictly decreases
};

LimitScanResult qlim_scan(const LimitScanConfig& config);

}  // namespace qaw

#pragma once

// Exact and numerical verification of the central polynomial identities: the
// two-parameter addition formula (checked as exact equality of q-Laguerre
// basis coefficients), the companion product formula (checked through the
// Golub-Welsch quadrature of the orthogonality measure), and the reflection
// and parity symmetries of the families involved.

#include <vector>

#include "qaw/polyfam.hpp"
#include "qaw/report.hpp"

namespace qaw {

// D^{n,l}: the coefficient in front of each product term in the addition
// formula; qt = q^tau and qs = q^sigma, v = q^{1/2}
template <class R>
R dconst(int n, int l, const R& qt, const R& qs, const R& q, const R& v) {
    R qml = pow_of(ring_inv(q), l);
    R dd = qpoch(R(-(qs * qs * qml)), q, l - n) * qpoch(R(-(qt * qt * qml)), q, l - n);
    dd = dd * q_binomial(l, n, q);  // (q^{l-n+1};q)_n / (q;q)_n, division-free
    dd = dd * qpoch(R(pow_of(q, n + 1)), q, l);
    int k = l - n;
    // q^{(l-n)(l-n-2 sigma-2 tau)/2} = v^{(l-n)^2} (q^sigma q^tau)^{-(l-n)}
    return dd * pow_of(v, static_cast<long>(k) * k) * pow_of(ring_inv(qs * qt), k);
}

// fully symbolic variant over the (v, s, t) Laurent ring, with the sigma
// dependence carried by the ring symbol s and the tau dependence by t
Laurent dconst_symbolic(int n, int l);

// parameters in the addition-formula notation: the q-Laguerre families are
// l_m^{(p)}(x; s, t | q) with s = q^tau, t = q^sigma
struct AdditionParams {
    int l = 0, m = 0, p = 0;
    Rat q, s, t;
};

// exact certificate: both sides expanded in the q-Laguerre basis over
// Q(sqrt q); pass iff every coefficient matches literally.  The optional
// variant records how the identity responds to squaring the base of the
// second-sum big q-Jacobi factor (it does not hold there).
VerificationReport addition_formula_exact(const AdditionParams& P,
                                          bool record_base_squared_variant = false);

// same identity with s and t left as formal symbols (q rational); exact
VerificationReport addition_formula_symbolic(int l, int m, int p, const Rat& q);

// floating cross-check at sample points
VerificationReport addition_formula_pointwise(const AdditionParams& P,
                                              const std::vector<double>& xs, double tol);

struct GWQuadrature {
    std::vector<double> nodes;
    std::vector<double> weights;  // sum to 1 (normalised measure)
};

// Gaussian quadrature of dm^{(alpha)}(.; s,t | q) from the Jacobi matrix of
// the three-term recurrence (diagonal b_k/2, off-diagonal sqrt(c_{k+1})/2)
GWQuadrature golub_welsch(int num_nodes, int alpha, double s, double t, double q);

// product formula: quadrature value of (1/C) int p_l^{(0,0)} l_m l_{m+n} dm
// against the two big q-Jacobi factors, and against the exact linearization
// coefficient from the addition formula
VerificationReport product_formula_check(int l, int m, int n, int p, const Rat& q, const Rat& s,
                                         const Rat& t, double tol);

// reflection P^{(a,b)}_n(-x; c,d) = (-q^{a-b} d/c)^n ... P^{(b,a)}_n(x; d,c)
// as an exact polynomial identity
VerificationReport reflection_check(int n, int alpha, int beta, const Rat& c, const Rat& d,
                                    const Rat& q);

// the same reflection specialised to the spectral points, u = q^{2 tau}
VerificationReport spectral_reflection_check(int l, int n, int m, const Rat& u, const Rat& q);

// parity transfer p_n^{(a,b)}(-x; s,t|q) = (-1)^n p_n^{(a,b)}(x; -s,t|q)
VerificationReport parity_check(int n, int alpha, int beta, const Rat& s, const Rat& t,
                                const Rat& q);

}  // namespace qaw

#pragma once

// q-shifted factorials and terminating basic hypergeometric series.

#include <cmath>
#include <string>
#include <vector>

#include "qaw/errors.hpp"
#include "qaw/unipoly.hpp"

namespace qaw {

// (a; base)_k = prod_{i=0}^{k-1} (1 - a base^i); empty product is 1
template <class R>
R qpoch(const R& a, const R& base, int k) {
    if (k < 0) throw std::invalid_argument("qpoch: negative k");
    R r(1), p(1);
    for (int i = 0; i < k; ++i) {
        r = r * (R(1) - a * p);
        p = p * base;
    }
    return r;
}

template <class R>
R qpoch(std::initializer_list<R> as, const R& base, int k) {
    R r(1);
    for (auto& a : as) r = r * qpoch(a, base, k);
    return r;
}

// (a; base)_inf truncated once |a base^k| < tol; needs |base| < 1
double qpoch_inf(double a, double base, double tol = 1e-15);

// Gaussian binomial [n choose k]_q = (q^{n-k+1};q)_k / (q;q)_k via the Pascal
// recurrence; polynomial in q, so it stays division-free in symbolic rings
template <class R>
R q_binomial(int n, int k, const R& q) {
    if (k < 0 || k > n) return R(0);
    std::vector<R> qpow(static_cast<std::size_t>(k) + 1, R(1));
    for (int j = 1; j <= k; ++j) qpow[j] = qpow[j - 1] * q;
    std::vector<R> row(static_cast<std::size_t>(k) + 1, R(0));
    row[0] = R(1);
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, k); j >= 1; --j) row[j] = row[j - 1] + qpow[j] * row[j];
    return row[k];
}

struct PhiOptions {
    int max_terms = 0;           // 0: series must terminate
    int termination_bound = 64;  // scan upper parameters against base^-n, n <= bound
};

// {}_{r+1}phi_r(upper; lower; base, z).  Terminating series return the exact
// sum in exact rings; a vanishing lower-parameter factor raises pole_error.
template <class R>
R phi(const std::vector<R>& upper, const std::vector<R>& lower, const R& base, const R& z,
      PhiOptions opt = {}) {
    int n_term = -1;
    {
        R p(1);  // base^-n
        for (int n = 0; n <= opt.termination_bound && n_term < 0; ++n) {
            for (auto& a : upper)
                if (a == p) {
                    n_term = n;
                    break;
                }
            p = p * ring_inv(base);
        }
    }
    int kmax;
    if (n_term >= 0)
        kmax = n_term;
    else if (opt.max_terms > 0)
        kmax = opt.max_terms - 1;
    else
        throw unsupported_mode("phi: series does not terminate and no max_terms given");

    R total(0), term(1), bp(1);  // bp = base^k
    for (int k = 0;; ++k) {
        total += term;
        if (k == kmax) break;
        // ratio t_{k+1}/t_k = prod(1 - a_i base^k) * z / ((1 - base^{k+1}) prod(1 - b_j base^k))
        R num = z;
        for (auto& a : upper) num = num * (R(1) - a * bp);
        if (qaw::is_zero(num)) break;  // terminated early
        bp = bp * base;
        R den = R(1) - bp;
        for (auto& b : lower) den = den * (R(1) - b * (bp * ring_inv(base)));
        if (qaw::is_zero(den))
            throw pole_error("phi: lower-parameter q-shifted factorial vanished at k=" +
                             std::to_string(k + 1));
        term = term * num * ring_inv(den);
    }
    return total;
}

}  // namespace qaw

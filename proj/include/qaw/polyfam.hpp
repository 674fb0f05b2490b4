#pragma once

// Orthogonal-polynomial families: Askey-Wilson p_n(x; a,b,c,d | q) and the
// q-Jacobi / q-Laguerre specializations, big q-Jacobi, plus the classical
// Chebyshev and Jacobi endpoints.  The Askey-Wilson polynomial is expanded in
// the real form, with the conjugate Pochhammer pair
// (a e^{i theta}, a e^{-i theta}; q)_k written as
// prod_{j<k} (1 - 2 a q^j x + a^2 q^{2j}), x = cos theta.

#include <vector>

#include "qaw/qseries.hpp"
#include "qaw/unipoly.hpp"

namespace qaw {

template <class R>
R pow_of(const R& x, long e) {
    if (e < 0) return pow_of(ring_inv(x), -e);
    R r(1), b = x;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

template <class R>
struct AWParams {
    R a, b, c, d, base;
};

namespace detail {
template <class R>
void check_aw_poles(int n, const AWParams<R>& P) {
    R p(1);
    for (int j = 0; j < n; ++j) {
        if (P.a * P.b == p || P.a * P.c == p || P.a * P.d == p)
            throw pole_error("askey_wilson: denominator parameter equals base^-" +
                             std::to_string(j));
        p = p * ring_inv(P.base);
    }
}
}  // namespace detail

// Degree-n Askey-Wilson polynomial in x.  Only (q;q)_k and a^n are inverted,
// so any field works; the other Pochhammer ratios are regrouped as
// (ab q^k, ac q^k, ad q^k; q)_{n-k}, which are polynomial in the parameters.
template <class R>
UniPoly<R> askey_wilson(int n, const AWParams<R>& P) {
    detail::check_aw_poles(n, P);
    const R& q = P.base;
    R ab = P.a * P.b, ac = P.a * P.c, ad = P.a * P.d;
    R abcd_qn1 = ab * P.c * P.d * pow_of(q, n - 1);
    R qmn = pow_of(ring_inv(q), n);
    UniPoly<R> total;
    UniPoly<R> pair = UniPoly<R>::constant(R(1));
    R qj(1);
    for (int k = 0; k <= n; ++k) {
        R qk = pow_of(q, k);
        R coeff = qpoch(qmn, q, k) * qpoch(abcd_qn1, q, k) * ring_inv(qpoch(q, q, k)) * qk;
        coeff = coeff * qpoch(R(ab * qk), q, n - k) * qpoch(R(ac * qk), q, n - k) *
                qpoch(R(ad * qk), q, n - k);
        total += pair.scaled(coeff);
        if (k < n) {
            pair = pair * UniPoly<R>(std::vector<R>{R(1) + P.a * P.a * qj * qj, R(-2) * P.a * qj});
            qj = qj * q;
        }
    }
    return total.scaled(pow_of(ring_inv(P.a), n));
}

// p_n^{(alpha,beta)}(x; s,t | q): Askey-Wilson with
// (a,b,c,d) = (q^{1/2+alpha} s/t, q^{1/2} t/s, -q^{1/2}/(st), -s t q^{1/2+beta});
// v must equal q^{1/2} in the ring at hand.
template <class R>
AWParams<R> pjacobi_params(int alpha, int beta, const R& s, const R& t, const R& q, const R& v) {
    R st_inv = ring_inv(s * t);
    return {v * pow_of(q, alpha) * s * ring_inv(t), v * t * ring_inv(s), -(v * st_inv),
            -(s * t * v * pow_of(q, beta)), q};
}

template <class R>
UniPoly<R> pjacobi(int n, int alpha, int beta, const R& s, const R& t, const R& q, const R& v) {
    return askey_wilson(n, pjacobi_params(alpha, beta, s, t, q, v));
}

// q-Laguerre: the d -> 0 degeneration of p_n^{(alpha,beta)}
template <class R>
UniPoly<R> qlaguerre(int n, int alpha, const R& s, const R& t, const R& q, const R& v) {
    AWParams<R> P = pjacobi_params(alpha, 0, s, t, q, v);
    P.d = R(0);
    return askey_wilson(n, P);
}

// 2x l_n = l_{n+1} + b_n l_n + c_n l_{n-1}
template <class R>
struct QLagRecurrence {
    R b, c;
};

template <class R>
QLagRecurrence<R> qlag_recurrence(int n, int alpha, const R& s, const R& t, const R& q,
                                  const R& v) {
    R qn = pow_of(q, n), qna = pow_of(q, n + alpha);
    R s_inv = ring_inv(s), t_inv = ring_inv(t);
    R c = (R(1) - qn) * (R(1) - pow_of(q, alpha) * qn) * (R(1) + qn * s_inv * s_inv) *
          (R(1) + qna * t_inv * t_inv);
    R b = qn * ((t - t_inv) * v * s_inv + (s - s_inv) * v * pow_of(q, alpha) * t_inv +
                (R(1) + q) * v * qna * s_inv * t_inv);
    return {b, c};
}

// h_n = prod_{k=1}^n c_k (measure normalised, h_0 = 1): the square norm of
// l_n under dm^{(alpha)}, via Favard from the recurrence.
template <class R>
R qlag_norm(int n, int alpha, const R& s, const R& t, const R& q) {
    R h(1), s_inv2 = ring_inv(s * s), t_inv2 = ring_inv(t * t);
    for (int k = 1; k <= n; ++k) {
        R qk = pow_of(q, k), qka = pow_of(q, k + alpha);
        h = h * (R(1) - qk) * (R(1) - qka) * (R(1) + qk * s_inv2) * (R(1) + qka * t_inv2);
    }
    return h;
}

namespace detail {
template <class R>
void check_bqj_poles(int n, int alpha, const R& c, const R& d, const R& base) {
    R p(1);
    R ratio = -(pow_of(base, 1 + alpha) * d * ring_inv(c));
    R qa1 = pow_of(base, alpha + 1);
    for (int j = 0; j < n; ++j) {
        if (ratio == p || qa1 == p)
            throw pole_error("big_qjacobi: denominator parameter equals base^-" +
                             std::to_string(j));
        p = p * ring_inv(base);
    }
}
}  // namespace detail

// Big q-Jacobi polynomial of degree n in x (3phi2 expanded termwise).
template <class R>
UniPoly<R> big_qjacobi(int n, int alpha, int beta, const R& c, const R& d, const R& base) {
    detail::check_bqj_poles(n, alpha, c, d, base);
    UniPoly<R> total;
    R qmn = pow_of(ring_inv(base), n);
    R qab1 = pow_of(base, n + alpha + beta + 1);
    R xfac = pow_of(base, 1 + alpha) * ring_inv(c);
    R md = -(pow_of(base, 1 + alpha) * d * ring_inv(c));
    UniPoly<R> xpoch = UniPoly<R>::constant(R(1));  // (q^{1+alpha} x / c ; q)_k in x
    R p(1);
    for (int k = 0; k <= n; ++k) {
        R coeff = qpoch(qmn, base, k) * qpoch(qab1, base, k) *
                  ring_inv(qpoch(base, base, k) * qpoch(R(pow_of(base, alpha + 1)), base, k) *
                           qpoch(md, base, k)) *
                  pow_of(base, k);
        total += xpoch.scaled(coeff);
        if (k < n) {
            xpoch = xpoch * UniPoly<R>(std::vector<R>{R(1), -(xfac * p)});
            p = p * base;
        }
    }
    return total;
}

template <class R>
R big_qjacobi_value(int n, int alpha, int beta, const R& x, const R& c, const R& d,
                    const R& base) {
    return big_qjacobi(n, alpha, beta, c, d, base).eval(x);
}

// Chebyshev T_n and classical Jacobi R_n^{(alpha,beta)} with R_n(1) = 1.
UniPoly<Rat> chebyshev_T(int n);
UniPoly<Rat> classical_jacobi_R(int n, int alpha, int beta);

// Coefficients e_k with poly = sum e_k l_k^{(alpha)}(x; s,t | q), by
// leading-coefficient elimination (the leading coefficient of l_k is 2^k).
template <class R>
std::vector<R> to_qlaguerre_basis(UniPoly<R> poly, int alpha, const R& s, const R& t, const R& q,
                                  const R& v) {
    int deg = poly.degree();
    if (deg < 0) return {};
    std::vector<UniPoly<R>> fam;
    fam.reserve(deg + 1);
    for (int k = 0; k <= deg; ++k) fam.push_back(qlaguerre(k, alpha, s, t, q, v));
    std::vector<R> e(deg + 1, R(0));
    for (int k = deg; k >= 0; --k) {
        R ck = poly.coeff(k) * pow_of(ring_inv(R(2)), k);
        e[k] = ck;
        if (!qaw::is_zero(ck)) poly -= fam[k].scaled(ck);
    }
    return e;
}

}  // namespace qaw

#include "qaw/polyfam.hpp"

namespace qaw {

UniPoly<Rat> chebyshev_T(int n) {
    UniPoly<Rat> tm1 = UniPoly<Rat>::constant(Rat(1));
    if (n == 0) return tm1;
    UniPoly<Rat> t = UniPoly<Rat>::x();
    UniPoly<Rat> two_x(std::vector<Rat>{Rat(0), Rat(2)});
    for (int k = 1; k < n; ++k) {
        UniPoly<Rat> next = two_x * t - tm1;
        tm1 = t;
        t = next;
    }
    return t;
}

UniPoly<Rat> classical_jacobi_R(int n, int alpha, int beta) {
    // 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2); the normalisation R_n(1)=1
    // is built in because every k>=1 term vanishes at x=1.
    UniPoly<Rat> total = UniPoly<Rat>::constant(Rat(1));
    UniPoly<Rat> half_one_minus_x(std::vector<Rat>{make_rat(1, 2), make_rat(-1, 2)});
    UniPoly<Rat> w = UniPoly<Rat>::constant(Rat(1));
    Rat c(1);
    for (int k = 0; k < n; ++k) {
        c *= Rat(-n + k) * Rat(n + alpha + beta + 1 + k);
        c /= Rat(alpha + 1 + k) * Rat(k + 1);
        w = w * half_one_minus_x;
        total += w.scaled(c);
    }
    return total;
}

}  // namespace qaw

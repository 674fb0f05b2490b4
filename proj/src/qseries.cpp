#include "qaw/qseries.hpp"

#include <cmath>

namespace qaw {

double qpoch_inf(double a, double base, double tol) {
    if (std::abs(base) >= 1.0) throw std::domain_error("qpoch_inf needs |base| < 1");
    if (a == 0.0) return 1.0;
    double r = 1.0, p = 1.0;
    for (int k = 0; k < 100000; ++k) {
        double f = a * p;
        if (std::abs(f) < tol) break;
        r *= 1.0 - f;
        p *= base;
    }
    return r;
}

}  // namespace qaw

#pragma once

// Sparse Laurent polynomials in a fixed small set of formal symbols.  The
// three-variable instance over Gaussian rationals is the coefficient ring for
// the whole symbolic layer: v stands for q^(1/2), s for q^sigma, t for q^tau.

#include <algorithm>
#include <array>
#include <complex>
#include <map>
#include <sstream>
#include <string>

#include "qaw/rational.hpp"

namespace qaw {

inline GaussianRational conj_of(const GaussianRational& x) { return x.conj(); }
inline SqrtRational conj_of(const SqrtRational& x) { return x; }

template <class Scalar, int N>
class SparseLaurent {
  public:
    using Exponents = std::array<int, N>;
    using TermMap = std::map<Exponents, Scalar>;

    SparseLaurent() = default;
    SparseLaurent(long v) { emplace(Exponents{}, Scalar(v)); }
    SparseLaurent(const Scalar& v) { emplace(Exponents{}, v); }

    static SparseLaurent monomial(const Scalar& c, const Exponents& e) {
        SparseLaurent r;
        r.emplace(e, c);
        return r;
    }
    static SparseLaurent var(int j, int power = 1) {
        Exponents e{};
        e[j] = power;
        return monomial(Scalar(1), e);
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
    }
    Scalar scalar_value() const {
        if (terms_.empty()) return Scalar(0);
        return terms_.begin()->second;
    }

    SparseLaurent operator-() const {
        SparseLaurent r;
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    SparseLaurent& operator+=(const SparseLaurent& o) {
        for (auto& [e, c] : o.terms_) emplace(e, c);
        return *this;
    }
    SparseLaurent& operator-=(const SparseLaurent& o) {
        for (auto& [e, c] : o.terms_) emplace(e, -c);
        return *this;
    }
    friend SparseLaurent operator+(SparseLaurent a, const SparseLaurent& b) { return a += b; }
    friend SparseLaurent operator-(SparseLaurent a, const SparseLaurent& b) { return a -= b; }
    friend SparseLaurent operator*(const SparseLaurent& a, const SparseLaurent& b) {
        SparseLaurent r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (int j = 0; j < N; ++j) e[j] = ea[j] + eb[j];
                r.emplace(e, ca * cb);
            }
        return r;
    }
    friend bool operator==(const SparseLaurent& a, const SparseLaurent& b) {
        return a.terms_ == b.terms_;
    }

    // inverse of a unit (single term, invertible scalar)
    SparseLaurent inv() const {
        if (terms_.size() != 1)
            throw std::domain_error("SparseLaurent::inv: not a unit (" +
                                    std::to_string(terms_.size()) + " terms)");
        auto& [e, c] = *terms_.begin();
        Exponents me;
        for (int j = 0; j < N; ++j) me[j] = -e[j];
        return monomial(Scalar(1) / c, me);
    }
    friend SparseLaurent operator/(const SparseLaurent& a, const SparseLaurent& b) {
        return a * b.inv();
    }

    SparseLaurent pow(long k) const {
        if (k < 0) return inv().pow(-k);
        SparseLaurent r(1), base = *this;
        while (k) {
            if (k & 1) r = r * base;
            if (k >>= 1) base = base * base;
        }
        return r;
    }

    SparseLaurent conj() const {
        SparseLaurent r;
        for (auto& [e, c] : terms_) r.terms_.emplace(e, conj_of(c));
        return r;
    }

    // substitute variable j by (itself) * var0^mult; realizes sigma -> sigma + k
    // as s -> s * v^(2k) at the exponent level
    SparseLaurent shift_into_var0(int j, int mult) const {
        SparseLaurent r;
        for (auto& [e, c] : terms_) {
            Exponents e2 = e;
            e2[0] += mult * e[j];
            r.emplace(e2, c);
        }
        return r;
    }

    // limit x_j -> 0: keep only terms with nonpositive exponent of variable j
    SparseLaurent drop_positive(int j) const {
        SparseLaurent r;
        for (auto& [e, c] : terms_)
            if (e[j] <= 0) r.terms_.emplace(e, c);
        return r;
    }
    bool has_negative(int j) const {
        for (auto& [e, c] : terms_)
            if (e[j] < 0) return true;
        return false;
    }

    // exact evaluation at positive rationals
    Scalar substitute(const std::array<Rat, N>& vals) const {
        Scalar total(0);
        for (auto& [e, c] : terms_) {
            Scalar m = c;
            for (int j = 0; j < N; ++j)
                if (e[j] != 0) m = m * Scalar(rat_pow(vals[j], e[j]));
            total += m;
        }
        return total;
    }

    std::complex<double> eval(const std::array<double, N>& vals) const {
        std::complex<double> total{0.0, 0.0};
        for (auto& [e, c] : terms_) {
            double m = 1.0;
            for (int j = 0; j < N; ++j)
                if (e[j] != 0) m *= std::pow(vals[j], e[j]);
            total += to_complex_of(c) * m;
        }
        return total;
    }

    std::size_t term_count() const { return terms_.size(); }

  private:
    static std::complex<double> to_complex_of(const GaussianRational& c) { return c.to_complex(); }
    static std::complex<double> to_complex_of(const SqrtRational& c) { return {c.to_double(), 0.0}; }

    void emplace(const Exponents& e, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

// ---------------------------------------------------------------------------
// The coefficient ring of the symbolic layer: exponents (e_v, e_s, e_t).

using Laurent = SparseLaurent<GaussianRational, 3>;

namespace sym {
inline Laurent one() { return Laurent(1); }
inline Laurent im() { return Laurent(GaussianRational::i()); }
inline Laurent v(int k = 1) { return Laurent::var(0, k); }       // q^(k/2)
inline Laurent q(int k = 1) { return Laurent::var(0, 2 * k); }   // q^k
inline Laurent s(int k = 1) { return Laurent::var(1, k); }       // q^(k*sigma)
inline Laurent t(int k = 1) { return Laurent::var(2, k); }       // q^(k*tau)
inline Laurent rat(const Rat& x) { return Laurent(GaussianRational(x)); }

// sigma -> sigma + ks and tau -> tau + kt on a coefficient
inline Laurent shift(const Laurent& c, int kt, int ks) {
    Laurent r = c;
    if (ks) r = r.shift_into_var0(1, 2 * ks);
    if (kt) r = r.shift_into_var0(2, 2 * kt);
    return r;
}

inline GaussianRational substitute(const Laurent& c, const Rat& v0, const Rat& s0, const Rat& t0) {
    return c.substitute({v0, s0, t0});
}
inline std::complex<double> eval(const Laurent& c, double v0, double s0, double t0) {
    return c.eval({v0, s0, t0});
}
}  // namespace sym

std::string laurent_str(const Laurent& c);

// Laurent polynomials in (s, t) with scalars in Q(sqrt q); the coefficient
// field for addition-formula runs at rational q with s, t left symbolic.
using StLaurent = SparseLaurent<SqrtRational, 2>;

std::string st_laurent_str(const StLaurent& c);

}  // namespace qaw

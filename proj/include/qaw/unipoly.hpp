#pragma once

// Dense univariate polynomials over an exact or floating coefficient ring.

#include <complex>
#include <string>
#include <vector>

#include "qaw/laurent.hpp"
#include "qaw/rational.hpp"

namespace qaw {

// is_zero / ring_inv shims so the same templates run over mpq_class,
// SqrtRational, Laurent rings, double and complex<double>.
inline bool is_zero(const Rat& x) { return x == 0; }
inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }
inline bool is_zero(const SqrtRational& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const std::complex<double>& x) { return x == std::complex<double>(0.0); }
template <class S, int N>
bool is_zero(const SparseLaurent<S, N>& x) { return x.is_zero(); }

inline Rat ring_inv(const Rat& x) {
    if (x == 0) throw std::domain_error("division by zero");
    return Rat(1) / x;
}
inline GaussianRational ring_inv(const GaussianRational& x) { return x.inv(); }
inline SqrtRational ring_inv(const SqrtRational& x) { return x.inv(); }
inline double ring_inv(double x) { return 1.0 / x; }
inline std::complex<double> ring_inv(const std::complex<double>& x) { return 1.0 / x; }
template <class S, int N>
SparseLaurent<S, N> ring_inv(const SparseLaurent<S, N>& x) { return x.inv(); }

template <class R>
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const R& v) { return UniPoly(std::vector<R>{v}); }
    static UniPoly x() { return UniPoly(std::vector<R>{R(0), R(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    const std::vector<R>& coeffs() const { return c_; }
    R coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : R(0); }
    const R& leading() const { return c_.back(); }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) { return *this += -o; }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> out(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(out));
    }
    UniPoly scaled(const R& f) const {
        UniPoly r = *this;
        for (auto& v : r.c_) v = v * f;
        r.trim();
        return r;
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    R eval(const R& x) const {
        R acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    template <class F>
    auto map(F&& f) const {
        using R2 = decltype(f(std::declval<R>()));
        std::vector<R2> out;
        out.reserve(c_.size());
        for (auto& v : c_) out.push_back(f(v));
        return UniPoly<R2>(std::move(out));
    }

  private:
    void trim() {
        while (!c_.empty() && qaw::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

inline UniPoly<double> to_double_poly(const UniPoly<Rat>& p) {
    return p.map([](const Rat& c) { return rat_to_double(c); });
}
inline UniPoly<double> to_double_poly(const UniPoly<SqrtRational>& p) {
    return p.map([](const SqrtRational& c) { return c.to_double(); });
}

}  // namespace qaw

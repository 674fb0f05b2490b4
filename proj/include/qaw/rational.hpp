#pragma once

// Exact scalar types: arbitrary-precision rationals (GMP), Gaussian rationals,
// and the quadratic extension Q(sqrt(q0)) used wherever half-integer powers of
// a fixed rational q appear.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "qaw/errors.hpp"

namespace qaw {

using Rat = mpq_class;

Rat make_rat(long num, long den = 1);
Rat parse_rat(const std::string& text);  // "p/q" or "p"; throws parse_error
std::string rat_str(const Rat& x);
double rat_to_double(const Rat& x);
Rat rat_pow(const Rat& x, long e);       // x != 0 when e < 0

// sqrt(x) when x is a perfect rational square
std::optional<Rat> rat_exact_sqrt(const Rat& x);

// ---------------------------------------------------------------------------

struct GaussianRational {
    Rat re{0}, im{0};

    GaussianRational() = default;
    GaussianRational(Rat r) : re(std::move(r)) {}
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r) {}

    static GaussianRational i() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conj() const { return {re, -im}; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRational inv() const;
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inv();
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    std::complex<double> to_complex() const { return {rat_to_double(re), rat_to_double(im)}; }
    std::string str() const;
};

// ---------------------------------------------------------------------------
// a + b*sqrt(base): exact scalars over Q extended by one square root.  When
// base is a perfect rational square the root is folded into the rational part,
// so inversion never divides by zero for base in (0,1) taken from a q-grid.
// base == 0 marks a plain rational (compatible with any bound value).

class SqrtRational {
  public:
    SqrtRational() = default;
    SqrtRational(long v) : a_(v) {}
    SqrtRational(Rat v) : a_(std::move(v)) {}
    SqrtRational(Rat a, Rat b, Rat base);

    // the element sqrt(base)
    static SqrtRational root_of(const Rat& base);

    const Rat& rational_part() const { return a_; }
    const Rat& root_part() const { return b_; }
    const Rat& base() const { return base_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    SqrtRational operator-() const;
    friend SqrtRational operator+(const SqrtRational& x, const SqrtRational& y);
    friend SqrtRational operator-(const SqrtRational& x, const SqrtRational& y);
    friend SqrtRational operator*(const SqrtRational& x, const SqrtRational& y);
    friend SqrtRational operator/(const SqrtRational& x, const SqrtRational& y) { return x * y.inv(); }
    friend bool operator==(const SqrtRational& x, const SqrtRational& y);
    SqrtRational& operator+=(const SqrtRational& o) { return *this = *this + o; }
    SqrtRational& operator-=(const SqrtRational& o) { return *this = *this - o; }
    SqrtRational& operator*=(const SqrtRational& o) { return *this = *this * o; }

    SqrtRational inv() const;
    SqrtRational pow(long e) const;

    double to_double() const;
    std::string str() const;

  private:
    Rat a_{0}, b_{0}, base_{0};
    static Rat merge_base(const SqrtRational& x, const SqrtRational& y);
};

}  // namespace qaw

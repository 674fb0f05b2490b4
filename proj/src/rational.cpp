#include "qaw/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace qaw {

Rat make_rat(long num, long den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& text) {
    std::size_t slash = text.find('/');
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) throw parse_error("not a rational: '" + text + "'", 0);
            return Rat(text);
        }
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) throw parse_error("not a rational: '" + text + "'", slash);
        Rat r{mpz_class(num), mpz_class(den)};
        if (r.get_den() == 0) throw parse_error("zero denominator in '" + text + "'", slash);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("not a rational: '" + text + "'", 0);
    }
}

std::string rat_str(const Rat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

double rat_to_double(const Rat& x) { return x.get_d(); }

Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    bool neg = e < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), k);
    Rat r = neg ? Rat(den, num) : Rat(num, den);
    r.canonicalize();
    return r;
}

std::optional<Rat> rat_exact_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    if (mpz_perfect_square_p(x.get_num().get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(x.get_den().get_mpz_t()) == 0) return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den().get_mpz_t());
    return Rat(n, d);
}

GaussianRational GaussianRational::inv() const {
    Rat n = re * re + im * im;
    if (n == 0) throw std::domain_error("division by zero GaussianRational");
    return {re / n, -im / n};
}

std::string GaussianRational::str() const {
    if (im == 0) return rat_str(re);
    std::ostringstream os;
    if (re != 0) {
        os << re;
        os << (im > 0 ? "+" : "-");
        Rat ai = abs(im);
        if (ai != 1) os << ai << "*";
        os << "i";
    } else {
        if (im == -1)
            os << "-i";
        else if (im == 1)
            os << "i";
        else
            os << im << "*i";
    }
    return os.str();
}

SqrtRational::SqrtRational(Rat a, Rat b, Rat base)
    : a_(std::move(a)), b_(std::move(b)), base_(std::move(base)) {
    if (b_ == 0) {
        base_ = 0;
        return;
    }
    if (auto r = rat_exact_sqrt(base_)) {
        a_ += b_ * *r;
        b_ = 0;
        base_ = 0;
    }
}

SqrtRational SqrtRational::root_of(const Rat& base) {
    if (base < 0) throw std::domain_error("root_of needs a nonnegative base");
    return SqrtRational(Rat(0), Rat(1), base);
}

Rat SqrtRational::merge_base(const SqrtRational& x, const SqrtRational& y) {
    if (x.base_ == 0) return y.base_;
    if (y.base_ == 0 || x.base_ == y.base_) return x.base_;
    throw std::domain_error("mixing SqrtRational values with different root bases");
}

SqrtRational SqrtRational::operator-() const { return SqrtRational(-a_, -b_, base_); }

SqrtRational operator+(const SqrtRational& x, const SqrtRational& y) {
    return SqrtRational(x.a_ + y.a_, x.b_ + y.b_, SqrtRational::merge_base(x, y));
}
SqrtRational operator-(const SqrtRational& x, const SqrtRational& y) {
    return SqrtRational(x.a_ - y.a_, x.b_ - y.b_, SqrtRational::merge_base(x, y));
}
SqrtRational operator*(const SqrtRational& x, const SqrtRational& y) {
    Rat base = SqrtRational::merge_base(x, y);
    return SqrtRational(x.a_ * y.a_ + x.b_ * y.b_ * base, x.a_ * y.b_ + x.b_ * y.a_, base);
}
bool operator==(const SqrtRational& x, const SqrtRational& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
}

SqrtRational SqrtRational::inv() const {
    if (b_ == 0) {
        if (a_ == 0) throw std::domain_error("division by zero SqrtRational");
        return SqrtRational(Rat(1) / a_);
    }
    Rat d = a_ * a_ - b_ * b_ * base_;
    // base_ is not a perfect square here, so d == 0 forces a_ == b_ == 0
    return SqrtRational(a_ / d, -b_ / d, base_);
}

SqrtRational SqrtRational::pow(long e) const {
    SqrtRational base = e < 0 ? inv() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    SqrtRational r(1);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

double SqrtRational::to_double() const {
    double v = rat_to_double(a_);
    if (b_ != 0) v += rat_to_double(b_) * std::sqrt(rat_to_double(base_));
    return v;
}

std::string SqrtRational::str() const {
    if (b_ == 0) return rat_str(a_);
    std::ostringstream os;
    if (a_ != 0) os << a_ << (b_ > 0 ? " + " : " - ") << abs(b_);
    else os << b_;
    os << "*sqrt(" << base_ << ")";
    return os.str();
}

}  // namespace qaw

#pragma once

// The coordinate Hopf *-algebra of quantum SU(2) with generators
// alpha, beta, gamma, delta and relations
//   ab = q ba, ag = q ga, bd = q db, gd = q dg, bg = gb,
//   ad - q bg = da - q^{-1} bg = 1.
// Elements are kept in the PBW normal form spanned by
// alpha^a beta^b gamma^c and delta^d beta^b gamma^c, with coefficients in the
// Laurent ring over (v, s, t); equality is coefficient comparison.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qaw/laurent.hpp"

namespace qaw {

struct NCMonomial {
    // ad > 0: alpha^ad, ad < 0: delta^{-ad}, ad == 0: neither
    int ad = 0;
    int b = 0;
    int c = 0;
    auto operator<=>(const NCMonomial&) const = default;
    int degree() const { return (ad >= 0 ? ad : -ad) + b + c; }
};

class NCElement {
  public:
    using TermMap = std::map<NCMonomial, Laurent>;

    NCElement() = default;
    NCElement(long v) {
        if (v != 0) terms_.emplace(NCMonomial{}, Laurent(v));
    }
    static NCElement term(const NCMonomial& m, Laurent c);
    static NCElement unit() { return NCElement(1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    int max_shift() const;  // max |ad| over monomials: the pi-matrix bandwidth

    NCElement operator-() const;
    NCElement& operator+=(const NCElement& o);
    NCElement& operator-=(const NCElement& o);
    friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
    friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
    NCElement scaled(const Laurent& c) const;
    friend bool operator==(const NCElement& a, const NCElement& b) { return a.terms_ == b.terms_; }

    void add_term(const NCMonomial& m, const Laurent& c);

  private:
    TermMap terms_;
};

NCElement nc_gen_alpha();
NCElement nc_gen_beta();
NCElement nc_gen_gamma();
NCElement nc_gen_delta();

NCElement nc_mul(const NCElement& x, const NCElement& y);
inline NCElement operator*(const NCElement& x, const NCElement& y) { return nc_mul(x, y); }
NCElement nc_pow(const NCElement& x, int k);

// antilinear antihomomorphism of (2.2)-type: alpha* = delta, beta* = -q gamma,
// gamma* = -q^{-1} beta, delta* = alpha
NCElement nc_star(const NCElement& x);

// algebra automorphism scaling the generators by q^{\mp 1/2}
NCElement nc_D(const NCElement& x);

// ---------------------------------------------------------------------------

class TensorElement {
  public:
    using Key = std::pair<NCMonomial, NCMonomial>;
    using TermMap = std::map<Key, Laurent>;

    TensorElement() = default;
    static TensorElement unit();
    static TensorElement of(const NCElement& left, const NCElement& right);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TensorElement operator-() const;
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    TensorElement scaled(const Laurent& c) const;
    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.terms_ == b.terms_;
    }

    friend TensorElement operator*(const TensorElement& x, const TensorElement& y);
    TensorElement pow(int k) const;

    void add_term(const Key& m, const Laurent& c);

  private:
    TermMap terms_;
};

// comultiplication: Delta(alpha) = alpha (x) alpha + beta (x) gamma, ...
TensorElement nc_delta(const NCElement& x);

// ---------------------------------------------------------------------------
// Named elements.  An index slot is either the symbolic parameter (tau or
// sigma) plus an integer shift, or the infinite limit, in which case terms
// carrying positive powers of the vanishing symbol are dropped and the
// rescaled explicit limits are used for rho.

struct ParamIndex {
    bool inf = false;
    int shift = 0;
    static ParamIndex infinite() { return {true, 0}; }
    static ParamIndex shifted(int k) { return {false, k}; }
};

enum class Gen { alpha, beta, gamma, delta };

NCElement build_minor(Gen g, ParamIndex tau, ParamIndex sigma);
NCElement build_rho(ParamIndex tau, ParamIndex sigma);  // at most one slot infinite

// ---------------------------------------------------------------------------
// Generalized matrix elements in factored exact form:
//   value = (cn_num / sqrt(cn_den)) * body / denom,
// keeping the exact layer square-root free; cn_den is 1 whenever the constant
// is rational (in particular for b^l_{0,0}).

struct BElement {
    int l = 0;
    int i = 0, j = 0;
    NCElement body;
    Laurent denom{1};
    Laurent cn_num{1};
    Laurent cn_den{1};
};

// which pair of slots the element lives in
enum class BFamily {
    both_symbolic,  // b^l_{0,0}(tau, sigma)
    sigma_side,     // b^l_{+-n,0}(inf, sigma)
    tau_side        // b^l_{0,+-n}(tau, inf)
};

// supported index patterns: (0,0) with both slots symbolic,
// (+-n, 0) in the (inf, sigma) modes, (0, +-n) in the (tau, inf) modes.
// The family defaults to the one the nonzero index forces; for i = j = 0 it
// selects between the zonal element and the n = 0 members of the limits.
BElement build_b(int l, int i, int j, BFamily family = BFamily::both_symbolic);

// p_l^{(0,0)}(X; t, s | q^2)-style evaluation machinery, exposed for tests:
// numerator polynomial in X and the scalar denominator it was cleared by.
struct ClearedPoly {
    NCElement num;
    Laurent denom;
};
ClearedPoly nc_pjacobi00(int l, const NCElement& X);  // parameters (q^tau, q^sigma | q^2)
ClearedPoly nc_big_qjacobi(int n, int alpha, const NCElement& X, const Laurent& c,
                           const Laurent& d);  // base q^2, c and d monomials

// ---------------------------------------------------------------------------

struct IdentityResult {
    std::string id;
    bool pass = false;
    std::size_t residual_terms = 0;
    std::string lhs;
    std::string rhs;
};

// normal-form difference; passes only when lhs - rhs is exactly zero
IdentityResult identity_check(std::string id, const NCElement& lhs, const NCElement& rhs);
IdentityResult identity_check(std::string id, const TensorElement& lhs, const TensorElement& rhs);

// The symbolic relation suite: the four factorizations, the eight
// rho-commutations, the four star relations, the five 3-sphere relations and
// the four-term coproduct expansion of beta gamma.  All must reduce to zero.
std::vector<IdentityResult> identity_suite();

std::string nc_str(const NCElement& x);
std::string tensor_str(const TensorElement& x);

}  // namespace qaw

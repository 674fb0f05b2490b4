#include "qaw/ncalg.hpp"

#include <functional>
#include <sstream>

#include "qaw/qseries.hpp"
#include "qaw/report.hpp"

namespace qaw {

NCElement NCElement::term(const NCMonomial& m, Laurent c) {
    NCElement r;
    if (!c.is_zero()) r.terms_.emplace(m, std::move(c));
    return r;
}

void NCElement::add_term(const NCMonomial& m, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int NCElement::degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int NCElement::max_shift() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.ad >= 0 ? m.ad : -m.ad);
    return d;
}

NCElement NCElement::operator-() const {
    NCElement r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

NCElement& NCElement::operator+=(const NCElement& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

NCElement& NCElement::operator-=(const NCElement& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

NCElement NCElement::scaled(const Laurent& c) const {
    NCElement r;
    for (auto& [m, cc] : terms_) r.add_term(m, cc * c);
    return r;
}

NCElement nc_gen_alpha() { return NCElement::term({1, 0, 0}, sym::one()); }
NCElement nc_gen_beta() { return NCElement::term({0, 1, 0}, sym::one()); }
NCElement nc_gen_gamma() { return NCElement::term({0, 0, 1}, sym::one()); }
NCElement nc_gen_delta() { return NCElement::term({-1, 0, 0}, sym::one()); }

namespace {

// right-multiply a normal monomial by one generator; the relation set
// ab=q ba, ag=q ga, bd=q db, gd=q dg, bg=gb, ad=1+q bg, da=1+q^{-1} bg
// rewrites every product back into the PBW basis
void mono_mul_gen(const NCMonomial& m, char g, NCElement& out, const Laurent& scale) {
    switch (g) {
        case 'g':
            out.add_term({m.ad, m.b, m.c + 1}, scale);
            return;
        case 'b':
            out.add_term({m.ad, m.b + 1, m.c}, scale);
            return;
        case 'a': {
            Laurent coef = scale * sym::q(-(m.b + m.c));
            if (m.ad >= 0) {
                out.add_term({m.ad + 1, m.b, m.c}, coef);
            } else {
                // delta^d alpha = delta^{d-1} (1 + q^{-1} beta gamma)
                out.add_term({m.ad + 1, m.b, m.c}, coef);
                out.add_term({m.ad + 1, m.b + 1, m.c + 1}, coef * sym::q(-1));
            }
            return;
        }
        case 'd': {
            Laurent coef = scale * sym::q(m.b + m.c);
            if (m.ad <= 0) {
                out.add_term({m.ad - 1, m.b, m.c}, coef);
            } else {
                // alpha^a delta = alpha^{a-1} (1 + q beta gamma)
                out.add_term({m.ad - 1, m.b, m.c}, coef);
                out.add_term({m.ad - 1, m.b + 1, m.c + 1}, coef * sym::q(1));
            }
            return;
        }
    }
}

NCElement elem_mul_gen(const NCElement& x, char g) {
    NCElement r;
    for (auto& [m, c] : x.terms()) mono_mul_gen(m, g, r, c);
    return r;
}

std::string word_of(const NCMonomial& m) {
    std::string w;
    if (m.ad >= 0)
        w.append(m.ad, 'a');
    else
        w.append(-m.ad, 'd');
    w.append(m.b, 'b');
    w.append(m.c, 'g');
    return w;
}

}  // namespace

NCElement nc_mul(const NCElement& x, const NCElement& y) {
    NCElement total;
    for (auto& [my, cy] : y.terms()) {
        NCElement z = x.scaled(cy);
        for (char g : word_of(my)) z = elem_mul_gen(z, g);
        total += z;
    }
    return total;
}

NCElement nc_pow(const NCElement& x, int k) {
    NCElement r = NCElement::unit();
    for (int i = 0; i < k; ++i) r = nc_mul(r, x);
    return r;
}

NCElement nc_star(const NCElement& x) {
    NCElement total;
    for (auto& [m, c] : x.terms()) {
        // star(alpha^a b^b g^c) = (-q^{-1} b)^c (-q g)^b d^a, then normalize;
        // star(delta^d b^b g^c) = (-q^{-1} b)^c (-q g)^b a^d
        Laurent coef = c.conj() * sym::q(m.b - m.c);
        if ((m.b + m.c) % 2) coef = -coef;
        NCElement z = NCElement::term({0, m.c, m.b}, coef);
        char tail = m.ad >= 0 ? 'd' : 'a';
        int reps = m.ad >= 0 ? m.ad : -m.ad;
        for (int i = 0; i < reps; ++i) z = elem_mul_gen(z, tail);
        total += z;
    }
    return total;
}

NCElement nc_D(const NCElement& x) {
    NCElement r;
    for (auto& [m, c] : x.terms()) {
        // alpha, gamma scale by q^{-1/2}; beta, delta by q^{+1/2};
        // alpha^a contributes v^{-a} and delta^d contributes v^{+d} = v^{-ad}
        int e = -m.ad + m.b - m.c;
        r.add_term(m, c * sym::v(e));
    }
    return r;
}

// ---------------------------------------------------------------------------

TensorElement TensorElement::unit() {
    TensorElement r;
    r.terms_.emplace(Key{NCMonomial{}, NCMonomial{}}, sym::one());
    return r;
}

TensorElement TensorElement::of(const NCElement& left, const NCElement& right) {
    TensorElement r;
    for (auto& [ml, cl] : left.terms())
        for (auto& [mr, cr] : right.terms()) r.add_term({ml, mr}, cl * cr);
    return r;
}

void TensorElement::add_term(const Key& m, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator-() const {
    TensorElement r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TensorElement TensorElement::scaled(const Laurent& c) const {
    TensorElement r;
    for (auto& [m, cc] : terms_) r.add_term(m, cc * c);
    return r;
}

TensorElement operator*(const TensorElement& x, const TensorElement& y) {
    TensorElement total;
    for (auto& [mx, cx] : x.terms())
        for (auto& [my, cy] : y.terms()) {
            NCElement left = nc_mul(NCElement::term(mx.first, sym::one()),
                                    NCElement::term(my.first, sym::one()));
            NCElement right = nc_mul(NCElement::term(mx.second, sym::one()),
                                     NCElement::term(my.second, sym::one()));
            Laurent c = cx * cy;
            for (auto& [ml, cl] : left.terms())
                for (auto& [mr, cr] : right.terms()) total.add_term({ml, mr}, c * cl * cr);
        }
    return total;
}

TensorElement TensorElement::pow(int k) const {
    TensorElement r = TensorElement::unit();
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

TensorElement nc_delta(const NCElement& x) {
    static const std::map<char, TensorElement> gen_images = [] {
        auto a = nc_gen_alpha(), b = nc_gen_beta(), g = nc_gen_gamma(), d = nc_gen_delta();
        std::map<char, TensorElement> m;
        m['a'] = TensorElement::of(a, a) + TensorElement::of(b, g);
        m['b'] = TensorElement::of(a, b) + TensorElement::of(b, d);
        m['g'] = TensorElement::of(g, a) + TensorElement::of(d, g);
        m['d'] = TensorElement::of(g, b) + TensorElement::of(d, d);
        return m;
    }();
    TensorElement total;
    for (auto& [m, c] : x.terms()) {
        TensorElement z = TensorElement::unit().scaled(c);
        for (char g : word_of(m)) z = z * gen_images.at(g);
        total += z;
    }
    return total;
}

// ---------------------------------------------------------------------------

namespace {

// shift the symbolic parameters inside a coefficient: tau += kt, sigma += ks
Laurent shifted(const Laurent& c, const ParamIndex& tau, const ParamIndex& sigma) {
    return sym::shift(c, tau.shift, sigma.shift);
}

NCElement apply_modes(NCElement x, const ParamIndex& tau, const ParamIndex& sigma) {
    // infinite limits delete the terms that carry positive powers of the
    // vanishing symbol (q^tau resp. q^sigma tends to zero)
    NCElement r;
    for (auto& [m, c] : x.terms()) {
        Laurent cc = shifted(c, tau, sigma);
        if (tau.inf) cc = cc.drop_positive(2);
        if (sigma.inf) cc = cc.drop_positive(1);
        r.add_term(m, cc);
    }
    return r;
}

}  // namespace

NCElement build_minor(Gen g, ParamIndex tau, ParamIndex sigma) {
    using namespace sym;
    NCElement a = nc_gen_alpha(), b = nc_gen_beta(), gg = nc_gen_gamma(), d = nc_gen_delta();
    NCElement x;
    switch (g) {
        case Gen::alpha:
            x = a.scaled(v(1)) + b.scaled(-(im() * s(1) * v(-1))) + gg.scaled(im() * t(1) * v(1)) +
                d.scaled(s(1) * t(1) * v(-1));
            break;
        case Gen::beta:
            x = a.scaled(-(s(1) * v(1))) + b.scaled(-(im() * v(-1))) +
                gg.scaled(-(im() * s(1) * t(1) * v(1))) + d.scaled(t(1) * v(-1));
            break;
        case Gen::gamma:
            x = a.scaled(-(t(1) * v(1))) + b.scaled(im() * s(1) * t(1) * v(-1)) +
                gg.scaled(im() * v(1)) + d.scaled(s(1) * v(-1));
            break;
        case Gen::delta:
            x = a.scaled(s(1) * t(1) * v(1)) + b.scaled(im() * t(1) * v(-1)) +
                gg.scaled(-(im() * s(1) * v(1))) + d.scaled(v(-1));
            break;
    }
    return apply_modes(std::move(x), tau, sigma);
}

NCElement build_rho(ParamIndex tau, ParamIndex sigma) {
    using namespace sym;
    NCElement a = nc_gen_alpha(), b = nc_gen_beta(), g = nc_gen_gamma(), d = nc_gen_delta();
    if (tau.inf && sigma.inf)
        return nc_mul(b, g).scaled(q(-1));  // rho_{inf,inf} = q^{-1} beta gamma
    if (sigma.inf) {
        // rho_{tau,inf} = i q^{tau-1} (q dg + ba) + q^{-1} (1 - q^{2 tau}) bg
        NCElement x = (nc_mul(d, g).scaled(q(1)) + nc_mul(b, a)).scaled(im() * t(1) * q(-1)) +
                      nc_mul(b, g).scaled(q(-1) * (one() - t(2)));
        return apply_modes(std::move(x), tau, ParamIndex{});
    }
    if (tau.inf) {
        // rho_{inf,sigma} = -i q^{sigma-1} (db + q ga) + q^{-1} (1 - q^{2 sigma}) bg
        NCElement x = (nc_mul(d, b) + nc_mul(g, a).scaled(q(1))).scaled(-(im() * s(1) * q(-1))) +
                      nc_mul(b, g).scaled(q(-1) * (one() - s(2)));
        return apply_modes(std::move(x), ParamIndex{}, sigma);
    }
    Laurent s_diff = s(-1) - s(1);  // q^{-sigma} - q^{sigma}
    Laurent t_diff = t(-1) - t(1);
    NCElement x = nc_mul(a, a) + nc_mul(d, d) + nc_mul(g, g).scaled(q(1)) +
                  nc_mul(b, b).scaled(q(-1));
    x += (nc_mul(d, g).scaled(q(1)) + nc_mul(b, a)).scaled(im() * s_diff);
    x -= (nc_mul(d, b) + nc_mul(g, a).scaled(q(1))).scaled(im() * t_diff);
    x += nc_mul(b, g).scaled(s_diff * t_diff);
    x = x.scaled(rat(make_rat(1, 2)));
    return apply_modes(std::move(x), tau, sigma);
}

// ---------------------------------------------------------------------------

ClearedPoly nc_big_qjacobi(int n, int alpha, const NCElement& X, const Laurent& c,
                           const Laurent& d) {
    // 3phi2(base^-n, base^{n+2 alpha+1}, base^{1+alpha} x / c; base^{alpha+1},
    //       -base^{1+alpha} d / c; base, base) at base = q^2, multiplied through
    // by (base, base^{alpha+1}, -base^{1+alpha} d/c; base)_n
    Laurent base = sym::q(2);
    Laurent c_inv = c.inv();
    Laurent md = -(base.pow(1 + alpha) * d * c_inv);
    NCElement total;
    std::vector<NCElement> xpoch;  // (base^{1+alpha} X / c; base)_k as NC polynomials
    xpoch.push_back(NCElement::unit());
    for (int k = 1; k <= n; ++k) {
        Laurent f = base.pow(alpha + k) * c_inv;  // base^{1+alpha} base^{k-1} / c
        xpoch.push_back(nc_mul(xpoch.back(), NCElement::unit() - X.scaled(f)));
    }
    for (int k = 0; k <= n; ++k) {
        Laurent coeff = qpoch(base.pow(-n), base, k) * qpoch(base.pow(n + 2 * alpha + 1), base, k) *
                        base.pow(k);
        coeff = coeff * qpoch(base.pow(k + 1), base, n - k) *
                qpoch(base.pow(alpha + 1 + k), base, n - k) * qpoch(md * base.pow(k), base, n - k);
        total += xpoch[k].scaled(coeff);
    }
    Laurent denom =
        qpoch(base, base, n) * qpoch(base.pow(alpha + 1), base, n) * qpoch(md, base, n);
    return {std::move(total), std::move(denom)};
}

ClearedPoly nc_pjacobi00(int l, const NCElement& X) {
    // p_l^{(0,0)}(X; q^tau, q^sigma | q^2): Askey-Wilson parameters
    // a = q t/s, b = q s/t, c = -q/(st), d = -q st, base = q^2
    using namespace sym;
    Laurent base = q(2);
    Laurent a = q(1) * t(1) * s(-1);
    Laurent ab = q(2), ac = -(q(2) * s(-2)), ad = -(q(2) * t(2));
    Laurent abcd_bl1 = q(4) * base.pow(l - 1);  // abcd = q^4
    NCElement total;
    std::vector<NCElement> pair;
    pair.push_back(NCElement::unit());
    for (int k = 1; k <= l; ++k) {
        Laurent bj = base.pow(k - 1);
        NCElement quad = NCElement::unit().scaled(one() + a * a * bj * bj) -
                         X.scaled(rat(Rat(2)) * a * bj);
        pair.push_back(nc_mul(pair.back(), quad));
    }
    for (int k = 0; k <= l; ++k) {
        Laurent bk = base.pow(k);
        Laurent coeff = qpoch(base.pow(-l), base, k) * qpoch(abcd_bl1, base, k) * bk;
        coeff = coeff * qpoch(base.pow(k + 1), base, l - k);
        coeff = coeff * qpoch(ab * bk, base, l - k) * qpoch(ac * bk, base, l - k) *
                qpoch(ad * bk, base, l - k);
        total += pair[k].scaled(coeff);
    }
    total = total.scaled(a.pow(-l));
    return {std::move(total), qpoch(base, base, l)};
}

BElement build_b(int l, int i, int j, BFamily family) {
    using namespace sym;
    if (l < 0) throw unsupported_index("build_b: l must be a nonnegative integer");
    if (i != 0 && j != 0) throw unsupported_index("build_b: need i == 0 or j == 0");
    if (i != 0 && family == BFamily::tau_side)
        throw unsupported_index("build_b: nonzero first index lives in the (inf, sigma) family");
    if (j != 0 && family == BFamily::sigma_side)
        throw unsupported_index("build_b: nonzero second index lives in the (tau, inf) family");
    if (i != 0) family = BFamily::sigma_side;
    if (j != 0) family = BFamily::tau_side;
    BElement r;
    r.l = l;
    r.i = i;
    r.j = j;
    Laurent base = q(2);
    if (family == BFamily::both_symbolic) {
        ClearedPoly p = nc_pjacobi00(l, build_rho(ParamIndex{}, ParamIndex{}));
        r.body = std::move(p.num);
        r.denom = q(l) * qpoch(base.pow(l + 1), base, l) * p.denom;
        return r;
    }
    int n = i != 0 ? (i > 0 ? i : -i) : (j > 0 ? j : -j);
    if (n > l) throw unsupported_index("build_b: |index| must be <= l");
    // C_n with q^{sigma} (resp. q^{tau}) written as s (resp. t):
    //   q^{(l-n)(l-n-1)/2} s^{-l} (q^{2n+2}; q^2)_{l-n} (-q^{-2l} s^2; q^2)_{l-n}
    //   / sqrt((q^2, q^{2l+2n+2}; q^2)_{l-n})
    auto cn_parts = [&](const Laurent& sym_param, Laurent& num, Laurent& den) {
        num = q((l - n) * (l - n - 1) / 2) * sym_param.pow(-l) *
              qpoch(base.pow(n + 1), base, l - n) *
              qpoch(-(q(-2 * l) * sym_param * sym_param), base, l - n);
        den = qpoch(base, base, l - n) * qpoch(base.pow(l + n + 1), base, l - n);
    };
    ParamIndex inf = ParamIndex::infinite(), self = ParamIndex{};
    if (family == BFamily::sigma_side) {
        cn_parts(s(1), r.cn_num, r.cn_den);
        NCElement rho = build_rho(inf, self);
        if (i >= 0) {
            NCElement pref =
                nc_mul(build_minor(Gen::delta, inf, ParamIndex::shifted(-1)),
                       build_minor(Gen::gamma, inf, self));
            ClearedPoly p = nc_big_qjacobi(l - n, n, rho, s(2), one());
            r.body = nc_mul(nc_pow(pref, n), p.num);
            r.denom = p.denom;
        } else {
            NCElement pref = nc_mul(build_minor(Gen::beta, inf, ParamIndex::shifted(-1)),
                                    build_minor(Gen::alpha, inf, self));
            ClearedPoly p = nc_big_qjacobi(l - n, n, rho, s(2) * q(2 * n), q(2 * n));
            r.body = nc_mul(nc_pow(pref, n), p.num);
            r.denom = p.denom;
        }
    } else {
        cn_parts(t(1), r.cn_num, r.cn_den);
        NCElement rho = build_rho(self, inf);
        if (j >= 0) {
            NCElement pref = nc_mul(build_minor(Gen::delta, ParamIndex::shifted(-1), inf),
                                    build_minor(Gen::beta, self, inf));
            ClearedPoly p = nc_big_qjacobi(l - n, n, rho, t(2), one());
            r.body = nc_mul(nc_pow(pref, n), p.num);
            r.denom = p.denom;
        } else {
            NCElement pref = nc_mul(build_minor(Gen::gamma, ParamIndex::shifted(-1), inf),
                                    build_minor(Gen::alpha, self, inf));
            ClearedPoly p = nc_big_qjacobi(l - n, n, rho, t(2) * q(2 * n), q(2 * n));
            r.body = nc_mul(nc_pow(pref, n), p.num);
            r.denom = p.denom;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------

IdentityResult identity_check(std::string id, const NCElement& lhs, const NCElement& rhs) {
    NCElement diff = lhs - rhs;
    return {std::move(id), diff.is_zero(), diff.terms().size(), nc_str(lhs), nc_str(rhs)};
}

IdentityResult identity_check(std::string id, const TensorElement& lhs, const TensorElement& rhs) {
    TensorElement diff = lhs - rhs;
    return {std::move(id), diff.is_zero(), diff.terms().size(), tensor_str(lhs), tensor_str(rhs)};
}

std::vector<IdentityResult> identity_suite() {
    using namespace sym;
    // each relation is an independent closure; the pool evaluates them in
    // parallel and the results keep the declaration order
    std::vector<std::pair<std::string, std::function<IdentityResult(const std::string&)>>> checks;
    auto P = [](int k) { return ParamIndex::shifted(k); };
    ParamIndex inf = ParamIndex::infinite(), self = ParamIndex{};

    auto add = [&checks](std::string id, auto thunk) {
        checks.emplace_back(std::move(id), std::move(thunk));
    };

    // factorizations of the quadratic minor products
    add("factor-beta-gamma", [=](const std::string& id) {
        NCElement rho = build_rho(self, self);
        return identity_check(id,
                              nc_mul(build_minor(Gen::beta, P(1), P(-1)), build_minor(Gen::gamma, self, self)),
                              rho.scaled(rat(Rat(2)) * s(1) * t(1)) -
                                  NCElement::unit().scaled(s(2) * q(-1) + t(2) * q(1)));
    });
    add("factor-gamma-beta", [=](const std::string& id) {
        NCElement rho = build_rho(self, self);
        return identity_check(id,
                              nc_mul(build_minor(Gen::gamma, P(-1), P(1)), build_minor(Gen::beta, self, self)),
                              rho.scaled(rat(Rat(2)) * s(1) * t(1)) -
                                  NCElement::unit().scaled(s(2) * q(1) + t(2) * q(-1)));
    });
    add("factor-alpha-delta", [=](const std::string& id) {
        NCElement rho = build_rho(self, self);
        return identity_check(id,
                              nc_mul(build_minor(Gen::alpha, P(1), P(1)), build_minor(Gen::delta, self, self)),
                              rho.scaled(rat(Rat(2)) * s(1) * t(1) * q(1)) +
                                  NCElement::unit().scaled(one() + s(2) * t(2) * q(2)));
    });
    add("factor-delta-alpha", [=](const std::string& id) {
        NCElement rho = build_rho(self, self);
        return identity_check(id,
                              nc_mul(build_minor(Gen::delta, P(-1), P(-1)), build_minor(Gen::alpha, self, self)),
                              rho.scaled(rat(Rat(2)) * s(1) * t(1) * q(-1)) +
                                  NCElement::unit().scaled(one() + s(2) * t(2) * q(-2)));
    });

    // rho commutations, symbolic parameters
    struct Row {
        const char* id;
        Gen g;
        int kt, ks;
    };
    for (auto [id, g, kt, ks] : {Row{"commute-alpha-rho", Gen::alpha, -1, -1},
                                 Row{"commute-beta-rho", Gen::beta, -1, 1},
                                 Row{"commute-gamma-rho", Gen::gamma, 1, -1},
                                 Row{"commute-delta-rho", Gen::delta, 1, 1}}) {
        add(id, [=](const std::string& name) {
            NCElement rho = build_rho(self, self);
            return identity_check(name, nc_mul(build_minor(g, self, self), rho),
                                  nc_mul(build_rho(P(kt), P(ks)), build_minor(g, self, self)));
        });
    }
    // rho commutations in the (inf, sigma) limit
    struct RowI {
        const char* id;
        Gen g;
        int ks, qpow;
    };
    for (auto [id, g, ks, qpow] : {RowI{"commute-alpha-rho-inf", Gen::alpha, -1, 2},
                                   RowI{"commute-beta-rho-inf", Gen::beta, 1, 0},
                                   RowI{"commute-gamma-rho-inf", Gen::gamma, -1, 0},
                                   RowI{"commute-delta-rho-inf", Gen::delta, 1, -2}}) {
        add(id, [=](const std::string& name) {
            NCElement rho_is = build_rho(inf, self);
            return identity_check(
                name, nc_mul(build_minor(g, inf, self), rho_is),
                nc_mul(build_rho(inf, P(ks)), build_minor(g, inf, self)).scaled(q(qpow)));
        });
    }

    // star relations on the minors
    add("star-alpha", [=](const std::string& id) {
        return identity_check(id, nc_star(build_minor(Gen::alpha, self, self)),
                              build_minor(Gen::delta, P(-1), P(-1)).scaled(q(1)));
    });
    add("star-beta", [=](const std::string& id) {
        return identity_check(id, nc_star(build_minor(Gen::beta, self, self)),
                              -build_minor(Gen::gamma, P(-1), P(1)));
    });
    add("star-gamma", [=](const std::string& id) {
        return identity_check(id, nc_star(build_minor(Gen::gamma, self, self)),
                              -build_minor(Gen::beta, P(1), P(-1)));
    });
    add("star-delta", [=](const std::string& id) {
        return identity_check(id, nc_star(build_minor(Gen::delta, self, self)),
                              build_minor(Gen::alpha, P(1), P(1)).scaled(q(-1)));
    });

    // quantum-3-sphere commutations among the minors
    add("sphere-alpha-beta", [=](const std::string& id) {
        return identity_check(
            id, nc_mul(build_minor(Gen::alpha, P(-1), P(1)), build_minor(Gen::beta, self, self)),
            nc_mul(build_minor(Gen::beta, P(-1), P(-1)), build_minor(Gen::alpha, self, self)).scaled(q(1)));
    });
    add("sphere-alpha-gamma", [=](const std::string& id) {
        return identity_check(
            id, nc_mul(build_minor(Gen::alpha, P(1), P(-1)), build_minor(Gen::gamma, self, self)),
            nc_mul(build_minor(Gen::gamma, P(-1), P(-1)), build_minor(Gen::alpha, self, self)).scaled(q(1)));
    });
    add("sphere-gamma-delta", [=](const std::string& id) {
        return identity_check(
            id, nc_mul(build_minor(Gen::gamma, P(1), P(1)), build_minor(Gen::delta, self, self)),
            nc_mul(build_minor(Gen::delta, P(1), P(-1)), build_minor(Gen::gamma, self, self)).scaled(q(1)));
    });
    add("sphere-beta-delta", [=](const std::string& id) {
        return identity_check(
            id, nc_mul(build_minor(Gen::beta, P(1), P(1)), build_minor(Gen::delta, self, self)),
            nc_mul(build_minor(Gen::delta, P(-1), P(1)), build_minor(Gen::beta, self, self)).scaled(q(1)));
    });
    add("sphere-alpha-delta-mixed", [=](const std::string& id) {
        auto mi = [&](Gen g, int ks) { return build_minor(g, inf, P(ks)); };
        NCElement lhs = nc_mul(mi(Gen::alpha, 1), mi(Gen::delta, 0)) -
                        nc_mul(mi(Gen::delta, -1), mi(Gen::alpha, 0));
        NCElement rhs = nc_mul(mi(Gen::beta, -1), mi(Gen::gamma, 0)).scaled(q(1)) -
                        nc_mul(mi(Gen::gamma, 1), mi(Gen::beta, 0)).scaled(q(-1));
        return identity_check(id, lhs, rhs);
    });

    // four-term coproduct expansion of beta_{tau+1,sigma-1} gamma_{tau,sigma}
    add("coproduct-beta-gamma-expansion", [=](const std::string& id) {
        auto Dm = [&](Gen g, int kt) { return nc_D(build_minor(g, P(kt), inf)); };
        auto right = [&](Gen g, int ks) { return build_minor(g, inf, P(ks)); };
        TensorElement lhs =
            nc_delta(nc_mul(build_minor(Gen::beta, P(1), P(-1)), build_minor(Gen::gamma, self, self)));
        TensorElement rhs =
            TensorElement::of(nc_mul(Dm(Gen::alpha, 1), Dm(Gen::gamma, 0)),
                              nc_mul(right(Gen::beta, -1), right(Gen::alpha, 0))) +
            TensorElement::of(nc_mul(Dm(Gen::alpha, 1), Dm(Gen::delta, 0)),
                              nc_mul(right(Gen::beta, -1), right(Gen::gamma, 0))) +
            TensorElement::of(nc_mul(Dm(Gen::beta, 1), Dm(Gen::gamma, 0)),
                              nc_mul(right(Gen::delta, -1), right(Gen::alpha, 0))) +
            TensorElement::of(nc_mul(Dm(Gen::beta, 1), Dm(Gen::delta, 0)),
                              nc_mul(right(Gen::delta, -1), right(Gen::gamma, 0)));
        return identity_check(id, lhs, rhs);
    });

    std::vector<IdentityResult> out(checks.size());
    parallel_for(checks.size(),
                 [&](std::size_t i) { out[i] = checks[i].second(checks[i].first); });
    return out;
}

// ---------------------------------------------------------------------------

std::string nc_str(const NCElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : x.terms()) {
        if (!first) os << " + ";
        first = false;
        std::string word;
        auto app = [&word](char g, int p) {
            if (p == 0) return;
            if (!word.empty()) word += "*";
            word += g;
            if (p > 1) word += "^" + std::to_string(p);
        };
        if (m.ad >= 0)
            app('a', m.ad);
        else
            app('d', -m.ad);
        app('b', m.b);
        app('g', m.c);
        std::string cs = laurent_str(c);
        bool trivial = (cs == "1");
        bool needs_parens = c.terms().size() > 1 || cs.front() == '-';
        if (word.empty())
            os << (needs_parens ? "(" + cs + ")" : cs);
        else if (trivial)
            os << word;
        else
            os << "(" << cs << ")*" << word;
    }
    return os.str();
}

std::string tensor_str(const TensorElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : x.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << laurent_str(c) << ")*[" << nc_str(NCElement::term(m.first, sym::one()))
           << " (x) " << nc_str(NCElement::term(m.second, sym::one())) << "]";
    }
    return os.str();
}

}  // namespace qaw

#include "qaw/ncparse.hpp"

#include <cctype>

#include "qaw/errors.hpp"

namespace qaw {

namespace {

struct Lexer {
    std::string src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw parse_error(std::string("expected '") + c + "'", pos);
    }
    bool peek_ident() {
        skip_ws();
        return pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]));
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) throw parse_error("expected identifier", pos);
        return src.substr(start, pos - start);
    }
    bool peek_digit() {
        skip_ws();
        return pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]));
    }
    long integer() {
        skip_ws();
        bool neg = false;
        if (pos < src.size() && (src[pos] == '-' || src[pos] == '+')) neg = src[pos++] == '-';
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) throw parse_error("expected integer", pos);
        long v = std::stol(src.substr(start, pos - start));
        return neg ? -v : v;
    }
};

struct Value {
    bool is_tensor = false;
    NCElement elem;
    TensorElement tensor;

    static Value scalar(NCElement e) { return {false, std::move(e), {}}; }
    static Value tensorial(TensorElement t) { return {true, {}, std::move(t)}; }
};

// a pure coefficient (multiple of the unit monomial) may scale anything
bool central_coeff(const NCElement& e, Laurent& out) {
    if (e.is_zero()) {
        out = Laurent();
        return true;
    }
    if (e.terms().size() != 1) return false;
    auto& [m, c] = *e.terms().begin();
    if (!(m == NCMonomial{})) return false;
    out = c;
    return true;
}

struct Parser {
    Lexer lx;

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, lx.pos); }

    Value parse_expr() {
        bool neg = false;
        if (lx.accept('-'))
            neg = true;
        else
            lx.accept('+');
        Value v = parse_term();
        if (neg) v = negate(v);
        for (;;) {
            if (lx.accept('+'))
                v = add(v, parse_term(), false);
            else if (lx.accept('-'))
                v = add(v, parse_term(), true);
            else
                break;
        }
        return v;
    }

    Value parse_term() {
        Value v = parse_factor();
        for (;;) {
            if (lx.accept('*')) {
                v = mul(v, parse_factor());
                continue;
            }
            char c = lx.peek();
            if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                std::isdigit(static_cast<unsigned char>(c))) {
                v = mul(v, parse_factor());
                continue;
            }
            break;
        }
        return v;
    }

    Value parse_factor() {
        Value v = parse_atom();
        if (lx.accept('^')) {
            if (v.is_tensor) {
                long e = lx.integer();
                if (e < 0) fail("negative tensor power");
                v = Value::tensorial(v.tensor.pow(static_cast<int>(e)));
            } else {
                Laurent c;
                if (central_coeff(v.elem, c)) {
                    // scalar powers may be negative or half-integral (for q)
                    bool parens = lx.accept('(');
                    long num = lx.integer();
                    long den = 1;
                    if (parens) {
                        if (lx.accept('/')) den = lx.integer();
                        lx.expect(')');
                    }
                    if (den != 1 && den != 2) fail("only halves allowed in exponents");
                    // c must be a single monomial to take fractional/negative powers
                    if (den == 2) {
                        // only q carries half powers: c must be q^k, i.e. v^{2k}
                        if (c.terms().size() != 1) fail("fractional power of a sum");
                        auto& [e, g] = *c.terms().begin();
                        if (!(g == GaussianRational(1)) || e[1] != 0 || e[2] != 0)
                            fail("fractional powers only for q");
                        v = Value::scalar(
                            NCElement::term({}, Laurent::var(0, static_cast<int>(e[0] * num / 2))));
                    } else {
                        v = Value::scalar(NCElement::term({}, c.pow(num)));
                    }
                } else {
                    long e = lx.integer();
                    if (e < 0) fail("negative power of a noncommutative element");
                    v = Value::scalar(nc_pow(v.elem, static_cast<int>(e)));
                }
            }
        }
        return v;
    }

    ParamIndex parse_index() {
        if (lx.peek_digit() || lx.peek() == '-' || lx.peek() == '+') {
            fail("index must be tau, sigma or inf (with optional +k/-k)");
        }
        std::string id = lx.ident();
        if (id == "inf") return ParamIndex::infinite();
        if (id != "tau" && id != "sigma") fail("index must be tau, sigma or inf");
        int shift = 0;
        if (lx.peek() == '+' || lx.peek() == '-') shift = static_cast<int>(lx.integer());
        return ParamIndex::shifted(shift);
    }

    Value parse_named(const std::string& id) {
        lx.expect('[');
        ParamIndex tau = parse_index();
        lx.expect(',');
        ParamIndex sigma = parse_index();
        lx.expect(']');
        if (id == "rho") return Value::scalar(build_rho(tau, sigma));
        Gen g;
        if (id == "alpha") g = Gen::alpha;
        else if (id == "beta") g = Gen::beta;
        else if (id == "gamma") g = Gen::gamma;
        else if (id == "delta") g = Gen::delta;
        else fail("unknown named element '" + id + "'");
        return Value::scalar(build_minor(g, tau, sigma));
    }

    Value parse_atom() {
        if (lx.accept('(')) {
            Value v = parse_expr();
            lx.expect(')');
            return v;
        }
        if (lx.peek_digit()) {
            long num = lx.integer();
            long den = 1;
            if (lx.accept('/')) den = lx.integer();
            if (den == 0) fail("zero denominator");
            return Value::scalar(NCElement::term({}, sym::rat(make_rat(num, den))));
        }
        if (!lx.peek_ident()) fail("expected an atom");
        std::string id = lx.ident();
        if (id == "star" || id == "D" || id == "Delta") {
            lx.expect('(');
            Value v = parse_expr();
            lx.expect(')');
            if (v.is_tensor) fail(id + " applies to algebra elements, not tensors");
            if (id == "star") return Value::scalar(nc_star(v.elem));
            if (id == "D") return Value::scalar(nc_D(v.elem));
            return Value::tensorial(nc_delta(v.elem));
        }
        if (id == "a") return Value::scalar(nc_gen_alpha());
        if (id == "b") return Value::scalar(nc_gen_beta());
        if (id == "g") return Value::scalar(nc_gen_gamma());
        if (id == "d") return Value::scalar(nc_gen_delta());
        if (id == "i") return Value::scalar(NCElement::term({}, sym::im()));
        if (id == "q") return Value::scalar(NCElement::term({}, sym::q(1)));
        if (id == "s") return Value::scalar(NCElement::term({}, sym::s(1)));
        if (id == "t") return Value::scalar(NCElement::term({}, sym::t(1)));
        if (id == "rho" || id == "alpha" || id == "beta" || id == "gamma" || id == "delta")
            return parse_named(id);
        fail("unknown identifier '" + id + "'");
    }

    Value negate(Value v) {
        if (v.is_tensor) return Value::tensorial(-v.tensor);
        return Value::scalar(-v.elem);
    }

    Value add(Value x, Value y, bool subtract) {
        if (x.is_tensor != y.is_tensor) fail("cannot add a tensor to an algebra element");
        if (subtract) y = negate(y);
        if (x.is_tensor) return Value::tensorial(x.tensor + y.tensor);
        return Value::scalar(x.elem + y.elem);
    }

    Value mul(Value x, Value y) {
        if (!x.is_tensor && !y.is_tensor) return Value::scalar(nc_mul(x.elem, y.elem));
        if (x.is_tensor && y.is_tensor) return Value::tensorial(x.tensor * y.tensor);
        Laurent c;
        if (!x.is_tensor && central_coeff(x.elem, c))
            return Value::tensorial(y.tensor.scaled(c));
        if (!y.is_tensor && central_coeff(y.elem, c))
            return Value::tensorial(x.tensor.scaled(c));
        fail("only scalar coefficients may multiply tensor expressions");
    }
};

}  // namespace

ParsedValue parse_nc_value(const std::string& text) {
    Parser p{Lexer{text, 0}};
    Value v = p.parse_expr();
    if (!p.lx.eof()) throw parse_error("trailing input", p.lx.pos);
    return {v.is_tensor, std::move(v.elem), std::move(v.tensor)};
}

NCElement parse_nc(const std::string& text) {
    ParsedValue v = parse_nc_value(text);
    if (v.is_tensor) throw parse_error("expression is a tensor, expected an algebra element", 0);
    return v.elem;
}

std::string print_nc(const NCElement& x) { return nc_str(x); }
std::string print_nc(const TensorElement& x) { return tensor_str(x); }

}  // namespace qaw

#include "qaw/laurent.hpp"

namespace qaw {

namespace {

// renders v^ev as q, q^k, q^(k/2) ...
void append_q_power(std::ostringstream& os, int ev, bool& first) {
    if (ev == 0) return;
    if (!first) os << "*";
    first = false;
    os << "q";
    if (ev == 2) return;
    if (ev % 2 == 0)
        os << "^" << ev / 2;
    else
        os << "^(" << ev << "/2)";
}

void append_var_power(std::ostringstream& os, const char* name, int e, bool& first) {
    if (e == 0) return;
    if (!first) os << "*";
    first = false;
    os << name;
    if (e != 1) os << "^" << e;
}

}  // namespace

std::string laurent_str(const Laurent& c) {
    if (c.is_zero()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (auto& [e, coef] : c.terms()) {
        GaussianRational g = coef;
        std::string body;
        {
            std::ostringstream ob;
            bool first = true;
            append_q_power(ob, e[0], first);
            append_var_power(ob, "s", e[1], first);
            append_var_power(ob, "t", e[2], first);
            body = ob.str();
        }
        bool negated = false;
        if (g.im == 0 && g.re < 0) {
            negated = true;
            g = -g;
        }
        if (first_term)
            os << (negated ? "-" : "");
        else
            os << (negated ? " - " : " + ");
        first_term = false;

        bool coef_is_one = (g.im == 0 && g.re == 1);
        std::string cs = g.str();
        bool needs_parens = g.im != 0 && g.re != 0;
        if (body.empty()) {
            os << (needs_parens ? "(" + cs + ")" : cs);
        } else {
            if (!coef_is_one) os << (needs_parens || g.im != 0 ? "(" + cs + ")" : cs) << "*";
            os << body;
        }
    }
    return os.str();
}

std::string st_laurent_str(const StLaurent& c) {
    if (c.is_zero()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (auto& [e, coef] : c.terms()) {
        if (!first_term) os << " + ";
        first_term = false;
        os << "(" << coef.str() << ")";
        bool first = false;
        append_var_power(os, "s", e[0], first);
        append_var_power(os, "t", e[1], first);
    }
    return os.str();
}

}  // namespace qaw

#pragma once

// Text front end for the algebra: generators a, b, g, d; named elements
// rho[tau,sigma], alpha[tau+1,inf], ...; scalars built from rationals, i,
// q^(k/2), s^k, t^k; operators + - * ^ ( ) and star(...), D(...), Delta(...).
// Parsing normalizes, so parse . print is the identity on normal forms.

#include <string>

#include "qaw/ncalg.hpp"

namespace qaw {

NCElement parse_nc(const std::string& text);

// full expression value: Delta(...) promotes the result to a tensor
struct ParsedValue {
    bool is_tensor = false;
    NCElement elem;
    TensorElement tensor;
};

ParsedValue parse_nc_value(const std::string& text);

std::string print_nc(const NCElement& x);
std::string print_nc(const TensorElement& x);

}  // namespace qaw

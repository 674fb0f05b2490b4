#pragma once

#include <stdexcept>
#include <string>

namespace qaw {

// A q-shifted factorial in a series denominator vanished before the series
// terminated, or a polynomial was requested at a degenerate parameter.
struct pole_error : std::domain_error {
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// Operation requested in a mode that cannot represent the result exactly
// (e.g. an infinite product in exact mode).
struct unsupported_mode : std::invalid_argument {
    explicit unsupported_mode(const std::string& what) : std::invalid_argument(what) {}
};

// Index pattern outside the implemented generalized-matrix-element families.
struct unsupported_index : std::invalid_argument {
    explicit unsupported_index(const std::string& what) : std::invalid_argument(what) {}
};

// Eigenvalue outside the two admissible spectral ladders.
struct spectrum_error : std::domain_error {
    explicit spectrum_error(const std::string& what) : std::domain_error(what) {}
};

struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

}  // namespace qaw

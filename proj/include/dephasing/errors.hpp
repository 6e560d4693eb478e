// errors.hpp — Exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace dephasing {

struct dimension_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct unsupported_layout : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct cutoff_violation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when adaptive quadrature cannot reach the requested tolerance.
struct quadrature_error : std::runtime_error {
    double interval_lo;
    double interval_hi;
    double estimated_error;

    quadrature_error(const std::string& msg, double lo, double hi, double err)
        : std::runtime_error(msg), interval_lo(lo), interval_hi(hi), estimated_error(err) {}
};

}  // namespace dephasing

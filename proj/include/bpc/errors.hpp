#pragma once

#include <stdexcept>
#include <string>

namespace bpc {

// Truncated-series evaluation failed to meet its tail bound within max_terms.
struct series_error : std::runtime_error {
    explicit series_error(const std::string& what) : std::runtime_error(what) {}
};

// An iterative scheme (fixed point, Newton, bootstrap refit) did not converge.
struct convergence_error : std::runtime_error {
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data (CSV parsing and friends).
struct data_error : std::runtime_error {
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bpc

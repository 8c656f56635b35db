#pragma once

#include <stdexcept>
#include <string>

namespace rspline {

// Problems with input data: bad schema, unparseable rows, out-of-range values.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failures: non-finite systems, degenerate fits, non-convergence.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rspline

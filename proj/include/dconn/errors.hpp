#ifndef DCONN_ERRORS_HPP
#define DCONN_ERRORS_HPP

#include <stdexcept>

namespace dconn {

// Invalid parameters, configs, or schema violations.  CLI exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Indeterminate points, singular encounters mid-computation.  CLI exit code 3.
struct singular_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rank-deficient solves, failed residual checks, missing leading structure.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dconn

#endif

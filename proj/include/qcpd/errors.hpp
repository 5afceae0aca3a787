#ifndef QCPD_ERRORS_HPP
#define QCPD_ERRORS_HPP

#include <stdexcept>

namespace qcpd {

/// Numerical failure (non-finite sums, failed factorizations) as opposed to
/// malformed input data; the CLI maps the two to different exit codes.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qcpd

#endif

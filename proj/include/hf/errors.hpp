#pragma once

#include <stdexcept>
#include <string>

namespace hf {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed caller input: mixed monomial lengths, mismatched variable
/// counts, unit ideal where a proper ideal is required, and the like.
struct malformed_input : error {
    using error::error;
};

/// A configured resource ceiling was exceeded (recursion depth, exponent
/// cap, truncation growth, big-integer bit budget).
struct resource_limit : error {
    using error::error;
};

/// A Las Vegas certification failed after all retries (no filter-regular
/// linear form found).  Never silently degraded.
struct certification_failure : error {
    using error::error;
};

}  // namespace hf

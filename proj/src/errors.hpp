#pragma once

#include <stdexcept>

namespace macko {

// Malformed or corrupt encoded data (bad magic, truncated section, decode
// walking past the column bound, ...).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Stream / filesystem failures.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A generator request that no matrix can satisfy.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace macko

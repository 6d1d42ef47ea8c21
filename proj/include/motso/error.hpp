#pragma once

#include <stdexcept>

namespace motso {

// A mathematical consistency check failed (reported as a verification
// failure, never silently accepted).
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural invariant the implementation relies on was violated;
// signals a code bug, not bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace motso

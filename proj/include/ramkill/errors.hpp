#pragma once

#include <stdexcept>

namespace ramkill {

// Violation of an invariant the algorithms are supposed to maintain.
// Reaching this is a bug in the model, not bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace ramkill

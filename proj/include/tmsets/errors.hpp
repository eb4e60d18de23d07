#pragma once

#include <stdexcept>

namespace tmsets {

// A verified property of the underlying mathematics failed. Reaching this
// means either a bug in this library or a falsified theorem; callers should
// treat it as fatal.
struct invariant_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A bounded search that was expected to produce a witness came up empty.
// The message echoes the bound so callers can raise it.
struct not_found_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tmsets

#pragma once

#include <stdexcept>
#include <string>

namespace ybe {

// Exit-code contract: 0 = all pass, 1 = identity failure, 2 = malformed
// input, 3 = resource refusal.
struct MalformedInput : std::runtime_error {
  explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

// A verification that must hold for any input reaching it failed; signals a
// convention or construction bug, not bad user input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// The two cocycle products disagreed; cannot happen for valid brace
// solutions, reported as an identity failure for anything else.
struct AdmissibilityFailure : std::runtime_error {
  explicit AdmissibilityFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ybe

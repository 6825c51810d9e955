#pragma once

#include <stdexcept>
#include <string>

namespace fortlib {

// Caller handed us something that violates an operation's preconditions.
// The CLI maps this to exit code 2.
class invalid_input : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size or candidate-budget guard tripped. CLI exit code 3.
class resource_limit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cross-check that must hold failed (a verified witness did not re-verify,
// a theorem-backed construction produced a non-fort, ...). CLI exit code 4.
class internal_consistency_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fortlib

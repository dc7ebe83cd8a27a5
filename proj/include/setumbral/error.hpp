#pragma once

#include <stdexcept>
#include <string>

namespace setumbral {

// Input violates an operation's precondition (mismatched grounds, h_empty != 0, ...).
class precondition_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed textual input: graph files, rational literals, family specs.
class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size cap guarding exponential enumeration was exceeded.
class cap_exceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw precondition_error(what);
}

inline void require_cap(long long value, long long cap, const std::string& what) {
  if (value > cap) {
    throw cap_exceeded(what + ": " + std::to_string(value) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace detail
}  // namespace setumbral

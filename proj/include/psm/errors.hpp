#pragma once

#include <stdexcept>
#include <string>

namespace psm {

// Precondition violations (bad arguments, empty gcd, no inverse, ...).
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input ("p/q" strings and the like).
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact integer arithmetic left the representable range.
class overflow_error : public std::runtime_error {
public:
  explicit overflow_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured size cap was exceeded (e.g. embedding dimension in the
// permutation search).
class capacity_error : public std::runtime_error {
public:
  explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal identity that should always hold failed; indicates a bug.
class invariant_error : public std::logic_error {
public:
  explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace psm

#pragma once

#include <stdexcept>
#include <string>

namespace qcycle {

// An argument violates an operation's preconditions.
class invalid_parameter : public std::invalid_argument {
 public:
  explicit invalid_parameter(const std::string& what)
      : std::invalid_argument(what) {}
};

// An enumeration or search ran past its work-unit budget or a hard cap.
class resource_limit : public std::runtime_error {
 public:
  explicit resource_limit(const std::string& what)
      : std::runtime_error(what) {}
};

// A structural verification failed; the message names the first failed clause.
class verification_failure : public std::runtime_error {
 public:
  explicit verification_failure(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qcycle

#ifndef WIENER_ERROR_HPP
#define WIENER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wiener {

// Malformed or out-of-contract input (sizes, non-convex sets, bad indices).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Exhaustive search refused because the instance exceeds the configured cap.
class LimitExceeded : public std::runtime_error {
 public:
  explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant, e.g. inconsistent DP choice tables.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace wiener

#endif  // WIENER_ERROR_HPP

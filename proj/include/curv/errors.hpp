#ifndef CURV_ERRORS_HPP
#define CURV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace curv {

/// Raised when a computation would exceed a configured size guard
/// (row limits, enumeration bounds). Maps to CLI exit code 5.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace curv

#endif

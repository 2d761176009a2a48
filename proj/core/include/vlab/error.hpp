#pragma once

#include <stdexcept>
#include <string>

namespace vlab {

/// Raised when an operation is applied outside its domain (bad input shape,
/// violated precondition, non-member of the required set).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace vlab

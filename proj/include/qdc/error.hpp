#pragma once

#include <stdexcept>
#include <string>

namespace qdc {

// Domain error carrying a short machine-readable kind ("H1Violation",
// "NotASource", "NotInRootLattice", ...) plus a human-readable message
// naming the violated invariant.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

} // namespace qdc

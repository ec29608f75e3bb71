#pragma once

#include <stdexcept>
#include <string>

namespace atomforge {

// Every failure surfaced by the library carries a short machine-readable kind
// (LimitExceeded, UncertifiedDistance, ...) next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace atomforge

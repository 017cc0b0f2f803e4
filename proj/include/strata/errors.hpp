#pragma once

#include <stdexcept>
#include <string>

namespace strata {

// Input or precondition problem; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what) : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// A mathematical check that was expected to hold did not; exit code 2.
class MathFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace strata

#pragma once

#include <stdexcept>
#include <string>

namespace greynoise {

// Thrown when a numerical routine cannot deliver its stated tolerance
// (truncation tail too large, quadrature window too small, non-converging
// refinement). Distinct from std::invalid_argument, which signals a
// violated precondition. The CLI maps accuracy_error to exit code 3 and
// invalid arguments to exit code 2.
class accuracy_error : public std::runtime_error {
public:
  explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace greynoise

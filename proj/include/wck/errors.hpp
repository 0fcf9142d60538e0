#pragma once

#include <stdexcept>
#include <string>

namespace wck {

// Numerical failure (e.g. quadrature stall) as opposed to invalid input;
// the CLI maps invalid_argument/domain_error to exit 2 and this to exit 3.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wck

#ifndef DIVSUM_ERRORS_HPP
#define DIVSUM_ERRORS_HPP

#include <stdexcept>

namespace divsum {

// A numeric routine could not certify the requested tolerance.
struct tolerance_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A construction would exceed the configured memory budget.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace divsum

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace fsplit {

// Bad arguments: malformed types, weights outside a precondition, etc.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A term, dimension or enumeration cap was exceeded.  Never silently truncated.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caps shared by the character and polynomial kernels.
struct Limits {
  std::size_t term_cap = 1'000'000;
  std::size_t dim_cap = 1'000'000;
  std::size_t weyl_order_cap = 1152;
  std::size_t enum_cap = 1'000'000;
};

}  // namespace fsplit

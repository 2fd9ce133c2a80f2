// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>

namespace relaxfv {

// Error taxonomy maps onto the CLI exit-code contract:
//   ConfigError -> 1, NumericsError -> 2, IoError -> 3.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace relaxfv

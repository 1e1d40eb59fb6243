#pragma once

#include <stdexcept>
#include <string>

namespace mtn {

struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct build_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mtn

#pragma once

#include <stdexcept>
#include <string>

namespace lprips {

// malformed user data or out-of-contract arguments; the CLI reports these
// with exit code 2
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// a documented resource limit was hit (cell-count guard, permutation search
// order cap); the CLI reports these with exit code 3
struct cap_error : std::runtime_error {
  explicit cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lprips

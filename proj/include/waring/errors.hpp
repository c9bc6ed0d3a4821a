#pragma once

#include <stdexcept>
#include <string>

namespace waring {

// Bad user input or violated precondition. Maps to CLI exit code 1.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A condition that is mathematically impossible if the implementation is
// correct. Maps to CLI exit code 2.
struct InvariantError : std::logic_error {
    explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace waring

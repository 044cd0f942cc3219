#pragma once

#include <stdexcept>
#include <string>

namespace rtw {

/// Raised when an operation's precondition is violated by its caller.
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace rtw

#pragma once

#include <stdexcept>
#include <string>

namespace mmhoi {

/// Single exception type used by the whole library. Messages are stable
/// strings that callers (and tests) may match on.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

}  // namespace mmhoi

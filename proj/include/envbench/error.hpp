#pragma once

#include <stdexcept>
#include <string>

namespace envbench {

// Domain error: malformed input data, invalid configuration, failed I/O.
// The CLI maps these to exit code 1; argument-parse failures exit with 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

}  // namespace envbench

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eglocal {

/// Malformed graph6 record; `offset` is the byte index of the first bad byte.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// An exact search refused its input instead of approximating.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caps for the exponential kernels.
struct SearchLimits {
    int max_n = 20;
    std::size_t closure_cap = 1'000'000;
};

}  // namespace eglocal

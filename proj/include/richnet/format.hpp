#pragma once

#include <charconv>
#include <string>

namespace richnet {

/// Shortest round-trip decimal form of a double; deterministic, locale-free.
inline std::string format_double(double value) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

}  // namespace richnet

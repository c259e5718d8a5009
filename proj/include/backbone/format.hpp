#pragma once

#include <charconv>
#include <string>

namespace backbone {

/// Shortest decimal text that parses back to exactly `value`.
inline std::string formatNumber(double value) {
    char buffer[32];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, end);
}

} // namespace backbone

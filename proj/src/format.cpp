#include "qudit/format.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace qudit {

namespace {

std::string chars(double v, std::chars_format fmt, int precision) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, fmt, precision);
    if (res.ec != std::errc{}) throw std::runtime_error("format: to_chars failed");
    return std::string(buf.data(), res.ptr);
}

}  // namespace

std::string format_g17(double v) { return chars(v, std::chars_format::general, 17); }

std::string format_fixed(double v, int decimals) {
    // Avoid printing "-0.0000" for tiny negatives.
    std::string s = chars(v, std::chars_format::fixed, decimals);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

}  // namespace qudit

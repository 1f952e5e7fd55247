#ifndef QUDIT_FORMAT_HPP
#define QUDIT_FORMAT_HPP

#include <string>

namespace qudit {

/// Locale-independent "%.17g" equivalent.
std::string format_g17(double v);

/// Locale-independent fixed notation with `decimals` digits after the point.
std::string format_fixed(double v, int decimals);

}  // namespace qudit

#endif  // QUDIT_FORMAT_HPP

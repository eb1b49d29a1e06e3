#pragma once

#include <string>

namespace cheb {

// Shortest decimal representation that round-trips to the same double;
// '.' separator, C locale independent.
std::string format_double(double v);

std::string format_int(long long v);

} // namespace cheb

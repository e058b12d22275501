#pragma once

#include <string>

namespace nkteam {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace nkteam

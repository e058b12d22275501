#include "nkteam/format.hpp"

#include <charconv>

namespace nkteam {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;  // cannot fail for doubles with this buffer size
    return std::string(buf, ptr);
}

}  // namespace nkteam

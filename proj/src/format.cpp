#include "riesz/format.hpp"

#include <cmath>
#include <cstdio>

namespace riesz {

std::string fmt12(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    if (std::abs(v) >= 1e16)
        std::snprintf(buf, sizeof buf, "%.12e", v);
    else
        std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

}  // namespace riesz

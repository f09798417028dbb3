#pragma once

#include <string>

namespace riesz {

/// Fixed 12-decimal, locale-independent number formatting used by all CLI and
/// CSV output ("1.000000000000", "-0.785398163397"). Values at or beyond 1e16
/// fall back to scientific notation; NaN prints as "nan".
std::string fmt12(double v);

}  // namespace riesz

#pragma once

#include <string>

namespace dmtree {

/// Shortest decimal text that reads back to the same double; "inf" for
/// positive infinity. Integral values print without a fraction.
std::string format_value(double x);

}  // namespace dmtree

#include "dmtree/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace dmtree {

std::string format_value(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // also folds -0
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) return std::to_string(x);
  return {buf.data(), end};
}

}  // namespace dmtree

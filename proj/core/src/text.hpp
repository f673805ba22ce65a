#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace zdgame::detail {

inline std::string shortest(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, result.ptr);
}

}  // namespace zdgame::detail

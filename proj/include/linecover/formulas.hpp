#pragma once

#include <cmath>
#include <stdexcept>

namespace linecover {

// ceil(lg lg x) computed in integer arithmetic: the least t >= 0 with
// x <= 2^(2^t). Defined for 2 <= x <= 2^32.
inline int ceil_lg_lg(long long x) {
  if (x < 2 || x > (1ll << 32)) throw std::invalid_argument("ceil_lg_lg domain is [2, 2^32]");
  int t = 0;
  unsigned long long tower = 2;  // 2^(2^t)
  while (static_cast<unsigned long long>(x) > tower) {
    ++t;
    tower *= tower;  // caps at 2^64 only if x > 2^32, excluded above
  }
  return t;
}

// Reporting yardstick f(n) = lg lg n + 1/2 lg lg lg n + 1/2 lg pi.
// Needs lg lg n > 0, i.e. n >= 3.
inline double yardstick_f(int n) {
  if (n < 3) throw std::invalid_argument("yardstick_f needs n >= 3");
  const double lgn = std::log2(static_cast<double>(n));
  const double lglgn = std::log2(lgn);
  constexpr double pi = 3.14159265358979323846;
  return lglgn + 0.5 * std::log2(lglgn) + 0.5 * std::log2(pi);
}

}  // namespace linecover

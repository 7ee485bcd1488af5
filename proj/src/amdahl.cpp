#include "sdct/amdahl.hpp"

#include <cmath>
#include <stdexcept>

namespace sdct {

double amdahl_speedup(double p, double s) {
  if (std::isnan(p) || p < 0.0 || p > 1.0)
    throw std::invalid_argument("amdahl_speedup: p must be in [0, 1]");
  if (std::isnan(s) || s <= 0.0)
    throw std::invalid_argument("amdahl_speedup: s must be positive");
  return 1.0 / ((1.0 - p) + p / s);
}

}  // namespace sdct

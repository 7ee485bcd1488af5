/// @file amdahl.hpp
/// @brief Theoretical speedup of accelerating a fraction p of a workload by
///        a factor s: 1 / ((1 - p) + p/s).
#pragma once

namespace sdct {

/// Throws std::invalid_argument unless 0 <= p <= 1 and s > 0.
double amdahl_speedup(double p, double s);

}  // namespace sdct

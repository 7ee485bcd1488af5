/// @file oracle.hpp
/// @brief Brute-force cosine-sum references used as ground truth by the test
///        suites and the verify command. Every oracle is a direct evaluation
///        of its defining sum with compensated (Kahan) accumulation; none of
///        them touches the FFT backend, so an FFT bug cannot hide here.
#pragma once

#include <cstdint>

#include "sdct/tensor.hpp"

namespace sdct::oracle {

/// Direct-sum output together with the number of multiply-add terms the
/// evaluation accumulated — quadratic in N by construction, which the tests
/// assert to document that these references never take a fast path.
struct OracleResult {
  RealTensor values;
  std::uint64_t op_count = 0;
};

/// Forward 1D DCT: y(k) = sum_n x(n) * cos(pi/N * (n + 1/2) * k).
RealTensor dct_oracle_1d(const RealTensor& x);
OracleResult dct_oracle_1d_counted(const RealTensor& x);

/// Inverse 1D DCT: y(k) = x(0)/2 + sum_{n>=1} x(n) * cos(pi/N * n * (k + 1/2)).
RealTensor idct_oracle_1d(const RealTensor& x);
OracleResult idct_oracle_1d_counted(const RealTensor& x);

/// Forward 2D DCT by the quadruple sum
/// y(k1,k2) = sum_{n1,n2} x(n1,n2) cos(pi/N1 (n1+1/2) k1) cos(pi/N2 (n2+1/2) k2).
RealTensor dct_oracle_2d(const RealTensor& x);

/// IDXST: y(k) = (-1)^k * idct_oracle_1d(x')(k) with x'(n) = x(N-n), x(N) := 0.
RealTensor idxst_oracle_1d(const RealTensor& x);

}  // namespace sdct::oracle

/// @file dct1d.hpp
/// @brief The four 1D DCT schemes (4N, mirrored 2N, zero-padded 2N, N-point)
///        and the N-point IDCT, each as preprocess -> real FFT -> postprocess.
///
/// All postprocess formulas carry their literal source scale; evaluated that
/// way every scheme yields exactly twice the cosine-sum definition, so dct_1d
/// folds a compensating 1/2 into the postprocess store and returns
///   dct_1d(x)(k) = sum_n x(n) cos(pi/N (n+1/2) k),
///   idct_1d(x)(k) = x(0)/2 + sum_{n>=1} x(n) cos(pi/N n (k+1/2)),
/// which also fixes the round trip at idct_1d(dct_1d(x)) = (N/2) x.
#pragma once

#include <complex>
#include <vector>

#include "sdct/exec.hpp"
#include "sdct/rfft.hpp"
#include "sdct/tensor.hpp"

namespace sdct {

enum class Dct1dVariant {
  FourN,         // 4N-point FFT of the odd-slot embedding
  MirroredTwoN,  // 2N-point FFT of [x, reverse(x)]
  PaddedTwoN,    // 2N-point FFT of [x, zeros(N)]
  NPoint         // N-point FFT of the even/odd parity reorder
};

/// e^{-j pi k/(2N)}, k < N — the quarter-wave table every postprocess stage
/// draws from (conjugates are formed at use, never stored).
std::vector<std::complex<double>> quarter_wave_table(std::size_t n);

/// Cached per-length state: the FFT workspace for the variant's transform
/// length and the quarter-wave twiddles e^{-j pi n/(2N)}, n < N.
class Plan1d {
 public:
  explicit Plan1d(std::size_t n, Dct1dVariant variant = Dct1dVariant::NPoint);

  std::size_t n() const { return n_; }
  Dct1dVariant variant() const { return variant_; }
  std::size_t fft_length() const { return fft_length_; }
  const FftWorkspace& workspace() const { return ws_; }
  const std::vector<std::complex<double>>& twiddle() const { return twiddle_; }

 private:
  std::size_t n_;
  Dct1dVariant variant_;
  std::size_t fft_length_;
  FftWorkspace ws_;
  std::vector<std::complex<double>> twiddle_;
};

/// x'(n), n in [0,4N): x((n-1)/2) for odd n < 2N, x((4N-n-1)/2) for odd
/// n >= 2N, zero at even slots.
RealTensor preprocess_4n(const RealTensor& x);

/// [x, reverse(x)], length 2N.
RealTensor preprocess_2n_mirrored(const RealTensor& x);

/// [x, zeros(N)], length 2N.
RealTensor preprocess_2n_padded(const RealTensor& x);

/// Parity reorder, length N: x'(n) = x(2n) for n <= floor((N-1)/2),
/// x(2N-2n-1) for n >= floor((N+1)/2).
RealTensor preprocess_n(const RealTensor& x);

/// Read index of the forward parity reorder: slot m takes x(2m) from the
/// front half, x(2N-2m-1) from the reversed tail. The multi-dimensional
/// forward gathers apply this map independently per axis.
inline std::size_t parity_embed(std::size_t m, std::size_t n) {
  return (m <= (n - 1) / 2) ? 2 * m : 2 * n - 2 * m - 1;
}

/// Inverse of parity_embed, viewed from the output side: output m reads
/// reordered slot m/2 when m is even, slot N-(m+1)/2 when odd. The inverse
/// transforms' final gathers use this map.
inline std::size_t parity_source(std::size_t m, std::size_t n) {
  return (m % 2 == 0) ? m / 2 : n - (m + 1) / 2;
}

/// One-sided N-point postprocess:
///   y(n) = scale * Re(e^{-j pi n/2N} X(n))            for n <= ceil((N-1)/2)
///   y(n) = scale * Re(e^{-j pi n/2N} conj(X(N-n)))    for n >= ceil((N+1)/2)
/// consuming only the stored half. The default scale 2 is the literal source
/// formula; dct_1d passes 1 so its output matches the cosine-sum definition.
RealTensor postprocess_n(const HalfSpectrum& spectrum, const Plan1d& plan, double scale = 2.0);

/// Forward 1D DCT through the plan's scheme. Three full-tensor stages
/// (preprocess, FFT, postprocess) are charged to `counters` when given.
RealTensor dct_1d(const RealTensor& x, const Plan1d& plan, const ExecConfig& cfg = {},
                  StageCounters* counters = nullptr);
RealTensor dct_1d(const RealTensor& x, Dct1dVariant variant = Dct1dVariant::NPoint,
                  const ExecConfig& cfg = {});

/// Inverse 1D DCT (N-point scheme only): conjugate-twiddle preprocess into a
/// Hermitian half spectrum, inverse real FFT, inverse parity reorder.
RealTensor idct_1d(const RealTensor& x, const Plan1d& plan, const ExecConfig& cfg = {},
                   StageCounters* counters = nullptr);
RealTensor idct_1d(const RealTensor& x, const ExecConfig& cfg = {});

}  // namespace sdct

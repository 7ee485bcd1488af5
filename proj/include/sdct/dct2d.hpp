/// @file dct2d.hpp
/// @brief Fused three-stage 2D DCT/IDCT (parity reorder -> one real 2D FFT ->
///        symmetry-merged twiddle stage) plus the row-column baseline.
///
/// The fused postprocess evaluates the exact identity
///   y(n1,n2) = 1/2 * Re( b(n2) * ( a(n1) X(n1,n2) + conj(a(n1)) X((N1-n1)%N1, n2) ) ),
/// a(n) = e^{-j pi n/(2 N1)}, b(n) = e^{-j pi n/(2 N2)}, X the 2D FFT of the
/// reordered input. Each merged work item covers the four mirror outputs
///   y(n1,n2) = Re(s)/2,  y(N1-n1,n2) = -Im(t)/2,
///   y(n1,N2-n2) = -Im(s)/2, y(N1-n1,N2-n2) = -Re(t)/2,
/// with s = b(aX1 + conj(a)X2), t = b(aX1 - conj(a)X2), reading X2 from the
/// stored one-sided half. Degenerate rows (n1 = 0, or the Nyquist row for
/// even N1) reuse X1 for X2 rather than substituting zero, which keeps the
/// output an exact match of the quadruple cosine sum on every row; the
/// store-time 1/2 is charged as arithmetic on neither the merged nor the
/// naive kernel. The inverse pipeline uses the conjugated twiddles
/// e^{+j pi n/(2N)} — that choice makes the preprocess output Hermitian, so
/// the complex-to-real inverse FFT is lossless — and folds a global 1/4 into
/// the final parity gather, giving idct_2d(dct_2d(x)) = (N1 N2 / 4) x.
#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "sdct/dct1d.hpp"
#include "sdct/exec.hpp"
#include "sdct/rfft.hpp"
#include "sdct/tensor.hpp"

namespace sdct {

enum class Orientation { Direct, Transposed };

/// Pick the pipeline orientation for an N1 x N2 input: transpose only when
/// the row count dominates (N2 < N1 and N1/N2 >= 4), otherwise run direct.
Orientation maybe_transpose_strategy(std::size_t n1, std::size_t n2);

/// Cached per-shape state: quarter-wave twiddle tables for both axes (unit
/// modulus; conjugates are formed at use, never stored) and the FFT
/// workspaces for the oriented pipeline. Immutable after construction apart
/// from the explicit test-only mutation hook.
class Plan2d {
 public:
  Plan2d(std::size_t n1, std::size_t n2,
         std::optional<Orientation> force_orientation = std::nullopt);

  std::size_t n1() const { return n1_; }
  std::size_t n2() const { return n2_; }
  Orientation orientation() const { return orientation_; }

  /// e^{-j pi k/(2 N1)}, k < N1.
  const std::vector<std::complex<double>>& twiddle_a() const { return twiddle_a_; }
  /// e^{-j pi k/(2 N2)}, k < N2.
  const std::vector<std::complex<double>>& twiddle_b() const { return twiddle_b_; }

  const FftPlanNd& fft_plan() const { return fft_plan_; }
  const FftWorkspace& length_workspace(std::size_t length) const;

  /// Test-only fault injection: flips the sign of one axis-2 twiddle entry so
  /// verification suites can prove they would catch a corrupted table.
  void corrupt_twiddle_for_testing(std::size_t index);

 private:
  std::size_t n1_;
  std::size_t n2_;
  Orientation orientation_;
  std::vector<std::complex<double>> twiddle_a_;
  std::vector<std::complex<double>> twiddle_b_;
  FftPlanNd fft_plan_;
};

/// Parity-quadrant reorder: x'(n1,n2) = x(p1(n1), p2(n2)) with the 1D parity
/// map along each axis (even indices from the front, odd from the back).
RealTensor dct2d_preprocess(const RealTensor& x, const ExecConfig& cfg = {},
                            StageCounters* counters = nullptr);

/// Symmetry-merged postprocess over the one-sided spectrum of the reordered
/// input. One full-tensor stage; reads exactly N1*(floor(N2/2)+1) complex
/// entries and writes exactly N1*N2 reals, each output once.
RealTensor dct2d_postprocess_fused(const HalfSpectrum& spectrum, const Plan2d& plan,
                                   const ExecConfig& cfg = {}, StageCounters* counters = nullptr);

/// Reference postprocess: one thread per output over the symmetry-expanded
/// spectrum (two reads, ten real multiplies, seven real adds per output).
RealTensor dct2d_postprocess_naive(const HalfSpectrum& spectrum, const Plan2d& plan,
                                   const ExecConfig& cfg = {}, StageCounters* counters = nullptr);

/// Merged inverse preprocess, computed one-sided (n2 <= floor(N2/2)): each
/// work item reads four real inputs and writes the two complex entries
///   x'(n1,n2)    = conj(a)conj(b) [ (p - q) - j (r + s) ]
///   x'(N1-n1,n2) = conj(a')conj(b) [ (r - s) - j (p + q) ]
/// with p = x(n1,n2), q = x(N1-n1,N2-n2), r = x(N1-n1,n2), s = x(n1,N2-n2)
/// and out-of-range indices (N1 or N2) reading zero.
HalfSpectrum idct2d_preprocess(const RealTensor& x, const Plan2d& plan,
                               const ExecConfig& cfg = {}, StageCounters* counters = nullptr);

/// Inverse parity gather (pure permutation): composing it with
/// dct2d_preprocess is the identity.
RealTensor idct2d_postprocess(const RealTensor& z, const ExecConfig& cfg = {},
                              StageCounters* counters = nullptr);

/// Fused forward transform: three full-tensor stages (reorder, one 2D real
/// FFT, merged postprocess). Matches the quadruple cosine sum exactly.
RealTensor dct_2d(const RealTensor& x, const Plan2d& plan, const ExecConfig& cfg = {},
                  StageCounters* counters = nullptr);
RealTensor dct_2d(const RealTensor& x, const ExecConfig& cfg = {});

/// Row-column baseline: a full 1D pass per axis plus two transposes
/// (3 + 1 + 3 + 1 = 8 full-tensor stages). Same output as dct_2d.
RealTensor dct_2d_rowcol(const RealTensor& x, const Plan2d& plan, const ExecConfig& cfg = {},
                         StageCounters* counters = nullptr);

/// Fused inverse transform (three stages); idct_2d(dct_2d(x)) = (N1 N2/4) x.
RealTensor idct_2d(const RealTensor& x, const Plan2d& plan, const ExecConfig& cfg = {},
                   StageCounters* counters = nullptr);
RealTensor idct_2d(const RealTensor& x, const ExecConfig& cfg = {});

namespace detail {

/// Which axis the inverse-family preprocess reads reversed (x(n) -> x(N-n),
/// x(N) := 0); the final gather then applies (-1)^k along that axis. None is
/// the plain IDCT; the reversed modes realize the IDXST-composite fusions.
enum class ReverseAxis { None, Axis0, Axis1 };

RealTensor idct_family_2d(const RealTensor& x, const Plan2d& plan, ReverseAxis mode,
                          const ExecConfig& cfg, StageCounters* counters);

}  // namespace detail

}  // namespace sdct

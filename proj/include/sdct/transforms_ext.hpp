/// @file transforms_ext.hpp
/// @brief IDXST and the fused composite inverse transforms, 3D DCT/IDCT, and
///        the rank-4 factorization into two rounds of fused 2D transforms.
///
/// IDXST is defined from the IDCT by index reversal and alternating signs:
///   idxst(x)(k) = (-1)^k * idct(y)(k),  y(n) = x(N-n), x(N) := 0,
/// equivalently idxst(x)(k) = sum_{n>=1} x(n) sin(pi/N n (k+1/2)); x(0) never
/// enters. The composites apply the inverse cosine transform along one axis
/// and the inverse sine transform along the other:
///   idct_idxst_2d: IDCT along axis 0, IDXST along axis 1,
///   idxst_idct_2d: IDXST along axis 0, IDCT along axis 1.
/// Their fused forms absorb the reversal into the 2D inverse preprocess reads
/// and the (-1)^k sign into the final gather, so they keep the three-stage
/// structure; the row-column forms here are the 8-stage reference they are
/// validated against.
#pragma once

#include "sdct/dct1d.hpp"
#include "sdct/dct2d.hpp"
#include "sdct/exec.hpp"
#include "sdct/rfft.hpp"
#include "sdct/tensor.hpp"

namespace sdct {

enum class CompositeKind { IdctIdxst, IdxstIdct };

/// Fused 1D IDXST (three stages, N-point plan).
RealTensor idxst_1d(const RealTensor& x, const Plan1d& plan, const ExecConfig& cfg = {},
                    StageCounters* counters = nullptr);
RealTensor idxst_1d(const RealTensor& x, const ExecConfig& cfg = {});

/// Fused composites (three stages each).
RealTensor idct_idxst_2d(const RealTensor& x, const Plan2d& plan, const ExecConfig& cfg = {},
                         StageCounters* counters = nullptr);
RealTensor idxst_idct_2d(const RealTensor& x, const Plan2d& plan, const ExecConfig& cfg = {},
                         StageCounters* counters = nullptr);
RealTensor composite_2d(const RealTensor& x, const Plan2d& plan, CompositeKind kind,
                        const ExecConfig& cfg = {}, StageCounters* counters = nullptr);

/// Row-column composites (two full 1D passes plus two transposes, 8 stages):
/// the reference the fused forms are tested against.
RealTensor idct_idxst_2d_rowcol(const RealTensor& x, const Plan2d& plan,
                                const ExecConfig& cfg = {}, StageCounters* counters = nullptr);
RealTensor idxst_idct_2d_rowcol(const RealTensor& x, const Plan2d& plan,
                                const ExecConfig& cfg = {}, StageCounters* counters = nullptr);
RealTensor composite_2d_rowcol(const RealTensor& x, const Plan2d& plan, CompositeKind kind,
                               const ExecConfig& cfg = {}, StageCounters* counters = nullptr);

/// Twiddle tables and FFT workspaces for one 3D shape.
class Plan3d {
 public:
  Plan3d(std::size_t n1, std::size_t n2, std::size_t n3);

  std::size_t n1() const { return n1_; }
  std::size_t n2() const { return n2_; }
  std::size_t n3() const { return n3_; }
  const std::vector<std::complex<double>>& twiddle_a() const { return twiddle_a_; }
  const std::vector<std::complex<double>>& twiddle_b() const { return twiddle_b_; }
  const std::vector<std::complex<double>>& twiddle_c() const { return twiddle_c_; }
  const FftPlanNd& fft_plan() const { return fft_plan_; }

 private:
  std::size_t n1_;
  std::size_t n2_;
  std::size_t n3_;
  std::vector<std::complex<double>> twiddle_a_;
  std::vector<std::complex<double>> twiddle_b_;
  std::vector<std::complex<double>> twiddle_c_;
  FftPlanNd fft_plan_;
};

/// Fused 3D DCT: parity reorder, one 3D real FFT, then a merged postprocess
/// whose work items read four one-sided spectrum entries (each stored entry
/// exactly once) and write the eight mirror outputs. Equals the separable
/// composition of the 1D cosine sums along the three axes.
RealTensor dct_3d(const RealTensor& x, const Plan3d& plan, const ExecConfig& cfg = {},
                  StageCounters* counters = nullptr);
RealTensor dct_3d(const RealTensor& x, const ExecConfig& cfg = {});

/// Fused 3D IDCT; idct_3d(dct_3d(x)) = (N1 N2 N3 / 8) x.
RealTensor idct_3d(const RealTensor& x, const Plan3d& plan, const ExecConfig& cfg = {},
                   StageCounters* counters = nullptr);
RealTensor idct_3d(const RealTensor& x, const ExecConfig& cfg = {});

/// Rank-4 DCT factorized into two rounds of fused 2D transforms, grouping
/// axes (0,1) first and (2,3) second. Equals the 4-axis separable 1D
/// composition; the grouping itself is arbitrary.
RealTensor dct_nd_factorized(const RealTensor& x, const ExecConfig& cfg = {});

}  // namespace sdct

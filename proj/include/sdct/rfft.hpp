/// @file rfft.hpp
/// @brief Real-input FFT backend: iterative radix-2 for power-of-two lengths,
///        Bluestein chirp-z for everything else. All transforms are
///        unnormalized (irfft_nd(rfft_nd(x)) = numel(x) * x) and the forward
///        kernel is e^{-j2*pi*nk/N}. One-sided spectra follow the Hermitian
///        convention X(n) = X*(N-n) with floor(N/2)+1 stored entries.
#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <vector>

#include "sdct/exec.hpp"
#include "sdct/tensor.hpp"

namespace sdct {

/// Precomputed state for one transform length. Immutable after construction,
/// so a single workspace may be shared by any number of concurrent calls.
class FftWorkspace {
 public:
  explicit FftWorkspace(std::size_t n);

  std::size_t length() const { return n_; }
  bool uses_bluestein() const { return !chirp_.empty(); }

  /// In-place unnormalized complex DFT of data[0..n), kernel e^{-j2*pi*nk/N}.
  void forward(std::complex<double>* data) const { transform(data, false); }
  /// In-place unnormalized inverse DFT, kernel e^{+j2*pi*nk/N}, no 1/N.
  void inverse(std::complex<double>* data) const { transform(data, true); }

 private:
  void transform(std::complex<double>* data, bool inverse) const;
  void pow2_fft(std::complex<double>* data, std::size_t n, bool inverse) const;

  std::size_t n_ = 0;
  std::size_t fft_n_ = 0;                          // power-of-two size actually run
  std::vector<std::size_t> bitrev_;                // bit-reversal table for fft_n_
  std::vector<std::complex<double>> twiddle_;      // e^{-j2*pi*k/fft_n_}, k < fft_n_/2
  std::vector<std::complex<double>> chirp_;        // e^{-j*pi*n^2/N} (Bluestein only)
  std::vector<std::complex<double>> chirp_spectrum_;  // FFT of the padded chirp filter
};

/// O(N^2) direct-sum DFT, the backend's own reference. Unnormalized in both
/// directions, matching FftWorkspace::forward / ::inverse.
std::vector<std::complex<double>> dft_naive(const std::vector<std::complex<double>>& x,
                                            bool inverse = false);

/// Per-shape cache of the axis workspaces a rank-1..4 real transform needs.
class FftPlanNd {
 public:
  explicit FftPlanNd(Shape dims);
  const Shape& dims() const { return dims_; }
  const FftWorkspace& axis_workspace(std::size_t axis) const;
  /// Workspace keyed by transform length; throws PlanError when the plan's
  /// shape has no axis of that extent.
  const FftWorkspace& length_workspace(std::size_t length) const;

 private:
  Shape dims_;
  std::map<std::size_t, FftWorkspace> by_length_;
};

/// Forward real-input FFT over every axis; one-sided along the last axis.
HalfSpectrum rfft_nd(const RealTensor& x, const FftPlanNd& plan, const ExecConfig& cfg = {});
/// Inverse of rfft_nd up to the factor numel(x). The stored half is
/// authoritative; missing entries are filled by the Hermitian rule.
RealTensor irfft_nd(const HalfSpectrum& spectrum, const FftPlanNd& plan,
                    const ExecConfig& cfg = {});

/// Conveniences that build the plan on the fly.
HalfSpectrum rfft_1d(const RealTensor& x, const ExecConfig& cfg = {});
RealTensor irfft_1d(const HalfSpectrum& spectrum, const ExecConfig& cfg = {});
HalfSpectrum rfft_2d(const RealTensor& x, const ExecConfig& cfg = {});
RealTensor irfft_2d(const HalfSpectrum& spectrum, const ExecConfig& cfg = {});
HalfSpectrum rfft_3d(const RealTensor& x, const ExecConfig& cfg = {});
RealTensor irfft_3d(const HalfSpectrum& spectrum, const ExecConfig& cfg = {});

/// Single-line helpers used by the transform pipelines. `out` holds n/2+1
/// entries for rfft_row; irfft_row fills n reals from the stored half.
void rfft_row(const double* in, std::size_t n, const FftWorkspace& ws,
              std::complex<double>* out);
void irfft_row(const std::complex<double>* in, std::size_t n, const FftWorkspace& ws,
               double* out);

/// Expand a one-sided spectrum to the full complex tensor via the Hermitian
/// rule X(n1,..,nd) = X*((N1-n1)%N1, .., Nd-nd) for entries beyond the stored
/// half of the last axis.
ComplexTensor expand_spectrum(const HalfSpectrum& spectrum);

}  // namespace sdct

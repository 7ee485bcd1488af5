#include "sdct/rfft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sdct {

namespace {

constexpr double kPi = std::numbers::pi;
using cd = std::complex<double>;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

FftWorkspace::FftWorkspace(std::size_t n) : n_(n) {
  if (n == 0) throw ShapeError("FFT length must be positive");
  fft_n_ = is_pow2(n) ? n : next_pow2(2 * n - 1);

  bitrev_.resize(fft_n_);
  std::size_t log2n = 0;
  while ((std::size_t{1} << log2n) < fft_n_) ++log2n;
  for (std::size_t i = 0; i < fft_n_; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < log2n; ++b) r |= ((i >> b) & 1u) << (log2n - 1 - b);
    bitrev_[i] = r;
  }

  twiddle_.resize(fft_n_ / 2);
  for (std::size_t k = 0; k < twiddle_.size(); ++k) {
    const double phase = -2.0 * kPi * static_cast<double>(k) / static_cast<double>(fft_n_);
    twiddle_[k] = {std::cos(phase), std::sin(phase)};
  }

  if (!is_pow2(n)) {
    // Bluestein chirp w(m) = e^{-j*pi*m^2/N}; the quadratic phase is reduced
    // mod 2N so large m lose no precision.
    chirp_.resize(n);
    for (std::size_t m = 0; m < n; ++m) {
      const std::size_t sq = (m * m) % (2 * n);
      const double phase = -kPi * static_cast<double>(sq) / static_cast<double>(n);
      chirp_[m] = {std::cos(phase), std::sin(phase)};
    }
    // Circular filter b(m) = conj(w(m)) embedded symmetrically in the padded
    // length, then transformed once up front.
    chirp_spectrum_.assign(fft_n_, cd{0.0, 0.0});
    chirp_spectrum_[0] = std::conj(chirp_[0]);
    for (std::size_t m = 1; m < n; ++m) {
      const cd b = std::conj(chirp_[m]);
      chirp_spectrum_[m] = b;
      chirp_spectrum_[fft_n_ - m] = b;
    }
    pow2_fft(chirp_spectrum_.data(), fft_n_, false);
  }
}

void FftWorkspace::pow2_fft(cd* data, std::size_t n, bool inverse) const {
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = bitrev_[i];
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const cd w = twiddle_[k * stride];
        const double wre = w.real();
        const double wim = inverse ? -w.imag() : w.imag();
        cd& lo = data[start + k];
        cd& hi = data[start + k + half];
        const double vre = hi.real() * wre - hi.imag() * wim;
        const double vim = hi.real() * wim + hi.imag() * wre;
        const double ure = lo.real();
        const double uim = lo.imag();
        lo = {ure + vre, uim + vim};
        hi = {ure - vre, uim - vim};
      }
    }
  }
}

void FftWorkspace::transform(cd* data, bool inverse) const {
  if (n_ == 1) return;
  if (!uses_bluestein()) {
    pow2_fft(data, n_, inverse);
    return;
  }
  if (inverse) {
    // Unnormalized inverse via conjugation: IDFT(x) = conj(DFT(conj(x))).
    for (std::size_t i = 0; i < n_; ++i) data[i] = std::conj(data[i]);
    transform(data, false);
    for (std::size_t i = 0; i < n_; ++i) data[i] = std::conj(data[i]);
    return;
  }
  std::vector<cd> work(fft_n_, cd{0.0, 0.0});
  for (std::size_t m = 0; m < n_; ++m) work[m] = data[m] * chirp_[m];
  pow2_fft(work.data(), fft_n_, false);
  for (std::size_t m = 0; m < fft_n_; ++m) work[m] *= chirp_spectrum_[m];
  pow2_fft(work.data(), fft_n_, true);
  const double inv_m = 1.0 / static_cast<double>(fft_n_);
  for (std::size_t k = 0; k < n_; ++k) data[k] = chirp_[k] * work[k] * inv_m;
}

std::vector<cd> dft_naive(const std::vector<cd>& x, bool inverse) {
  const std::size_t n = x.size();
  std::vector<cd> out(n, cd{0.0, 0.0});
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    cd acc{0.0, 0.0};
    for (std::size_t m = 0; m < n; ++m) {
      const double phase =
          sign * 2.0 * kPi * static_cast<double>((k * m) % n) / static_cast<double>(n);
      acc += x[m] * cd{std::cos(phase), std::sin(phase)};
    }
    out[k] = acc;
  }
  return out;
}

FftPlanNd::FftPlanNd(Shape dims) : dims_(std::move(dims)) {
  if (dims_.empty() || dims_.size() > 4)
    throw ShapeError("FFT plans cover rank 1..4, got rank " + std::to_string(dims_.size()));
  for (std::size_t d : dims_) by_length_.try_emplace(d, d);
}

const FftWorkspace& FftPlanNd::axis_workspace(std::size_t axis) const {
  return by_length_.at(dims_.at(axis));
}

const FftWorkspace& FftPlanNd::length_workspace(std::size_t length) const {
  auto it = by_length_.find(length);
  if (it == by_length_.end())
    throw PlanError("FFT plan for " + shape_to_string(dims_) + " has no axis of length " +
                    std::to_string(length));
  return it->second;
}

namespace {

// Apply the in-place complex transform along `axis` of a stored tensor.
// Lines are gathered into a contiguous scratch buffer, transformed, and
// scattered back; each line is owned by exactly one worker.
void cfft_axis(ComplexTensor& data, std::size_t axis, const FftWorkspace& ws, bool inverse,
               const ExecConfig& cfg) {
  const Shape& dims = data.dims();
  const std::size_t n = dims[axis];
  std::size_t inner = 1;
  for (std::size_t a = axis + 1; a < dims.size(); ++a) inner *= dims[a];
  std::size_t outer = 1;
  for (std::size_t a = 0; a < axis; ++a) outer *= dims[a];
  const std::size_t lines = outer * inner;
  if (n == 1) return;

  cd* base = data.data();
  parallel_for(lines, cfg, [&](std::size_t begin, std::size_t end) {
    std::vector<cd> scratch(n);
    for (std::size_t line = begin; line < end; ++line) {
      const std::size_t o = line / inner;
      const std::size_t i = line % inner;
      cd* p = base + o * n * inner + i;
      for (std::size_t k = 0; k < n; ++k) scratch[k] = p[k * inner];
      if (inverse)
        ws.inverse(scratch.data());
      else
        ws.forward(scratch.data());
      for (std::size_t k = 0; k < n; ++k) p[k * inner] = scratch[k];
    }
  });
}

}  // namespace

HalfSpectrum rfft_nd(const RealTensor& x, const FftPlanNd& plan, const ExecConfig& cfg) {
  if (x.dims() != plan.dims())
    throw PlanError("rfft plan built for " + shape_to_string(plan.dims()) + ", input is " +
                    shape_to_string(x.dims()));
  const Shape& dims = x.dims();
  const std::size_t rank = dims.size();
  const std::size_t n_last = dims.back();
  const std::size_t h = n_last / 2 + 1;
  HalfSpectrum spectrum(dims);

  const std::size_t rows = x.size() / n_last;
  const FftWorkspace& ws_last = plan.axis_workspace(rank - 1);
  const double* in = x.data();
  cd* out = spectrum.data.data();
  parallel_for(rows, cfg, [&](std::size_t begin, std::size_t end) {
    std::vector<cd> scratch(n_last);
    for (std::size_t r = begin; r < end; ++r) {
      const double* src = in + r * n_last;
      for (std::size_t k = 0; k < n_last; ++k) scratch[k] = cd{src[k], 0.0};
      ws_last.forward(scratch.data());
      std::copy(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(h),
                out + r * h);
    }
  });

  for (std::size_t axis = rank - 1; axis-- > 0;)
    cfft_axis(spectrum.data, axis, plan.axis_workspace(axis), false, cfg);
  return spectrum;
}

RealTensor irfft_nd(const HalfSpectrum& spectrum, const FftPlanNd& plan, const ExecConfig& cfg) {
  if (spectrum.logical_dims != plan.dims())
    throw PlanError("irfft plan built for " + shape_to_string(plan.dims()) + ", input is " +
                    shape_to_string(spectrum.logical_dims));
  const Shape& dims = spectrum.logical_dims;
  const std::size_t rank = dims.size();
  const std::size_t n_last = dims.back();
  const std::size_t h = n_last / 2 + 1;
  if (spectrum.data.dims().back() != h)
    throw ShapeError("half spectrum stores " + std::to_string(spectrum.data.dims().back()) +
                     " entries on the last axis, expected " + std::to_string(h));

  ComplexTensor work = spectrum.data;
  for (std::size_t axis = rank - 1; axis-- > 0;)
    cfft_axis(work, axis, plan.axis_workspace(axis), true, cfg);

  RealTensor out(dims);
  const std::size_t rows = out.size() / n_last;
  const FftWorkspace& ws_last = plan.axis_workspace(rank - 1);
  const cd* in = work.data();
  double* dst = out.data();
  parallel_for(rows, cfg, [&](std::size_t begin, std::size_t end) {
    std::vector<cd> scratch(n_last);
    for (std::size_t r = begin; r < end; ++r) {
      const cd* src = in + r * h;
      for (std::size_t k = 0; k < h; ++k) scratch[k] = src[k];
      for (std::size_t k = h; k < n_last; ++k) scratch[k] = std::conj(src[n_last - k]);
      ws_last.inverse(scratch.data());
      double* row = dst + r * n_last;
      for (std::size_t k = 0; k < n_last; ++k) row[k] = scratch[k].real();
    }
  });
  return out;
}

namespace {

HalfSpectrum rfft_fixed_rank(const RealTensor& x, std::size_t rank, const ExecConfig& cfg) {
  if (x.rank() != rank)
    throw ShapeError("expected a rank-" + std::to_string(rank) + " tensor, got " +
                     shape_to_string(x.dims()));
  FftPlanNd plan(x.dims());
  return rfft_nd(x, plan, cfg);
}

RealTensor irfft_fixed_rank(const HalfSpectrum& s, std::size_t rank, const ExecConfig& cfg) {
  if (s.logical_dims.size() != rank)
    throw ShapeError("expected a rank-" + std::to_string(rank) + " spectrum, got " +
                     shape_to_string(s.logical_dims));
  FftPlanNd plan(s.logical_dims);
  return irfft_nd(s, plan, cfg);
}

}  // namespace

HalfSpectrum rfft_1d(const RealTensor& x, const ExecConfig& cfg) { return rfft_fixed_rank(x, 1, cfg); }
RealTensor irfft_1d(const HalfSpectrum& s, const ExecConfig& cfg) { return irfft_fixed_rank(s, 1, cfg); }
HalfSpectrum rfft_2d(const RealTensor& x, const ExecConfig& cfg) { return rfft_fixed_rank(x, 2, cfg); }
RealTensor irfft_2d(const HalfSpectrum& s, const ExecConfig& cfg) { return irfft_fixed_rank(s, 2, cfg); }
HalfSpectrum rfft_3d(const RealTensor& x, const ExecConfig& cfg) { return rfft_fixed_rank(x, 3, cfg); }
RealTensor irfft_3d(const HalfSpectrum& s, const ExecConfig& cfg) { return irfft_fixed_rank(s, 3, cfg); }

void rfft_row(const double* in, std::size_t n, const FftWorkspace& ws, cd* out) {
  if (ws.length() != n) throw PlanError("rfft_row workspace length mismatch");
  std::vector<cd> scratch(n);
  for (std::size_t k = 0; k < n; ++k) scratch[k] = cd{in[k], 0.0};
  ws.forward(scratch.data());
  std::copy(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(n / 2 + 1), out);
}

void irfft_row(const cd* in, std::size_t n, const FftWorkspace& ws, double* out) {
  if (ws.length() != n) throw PlanError("irfft_row workspace length mismatch");
  const std::size_t h = n / 2 + 1;
  std::vector<cd> scratch(n);
  for (std::size_t k = 0; k < h; ++k) scratch[k] = in[k];
  for (std::size_t k = h; k < n; ++k) scratch[k] = std::conj(in[n - k]);
  ws.inverse(scratch.data());
  for (std::size_t k = 0; k < n; ++k) out[k] = scratch[k].real();
}

ComplexTensor expand_spectrum(const HalfSpectrum& spectrum) {
  const Shape& dims = spectrum.logical_dims;
  const std::size_t h = spectrum.data.dims().back();
  ComplexTensor full(dims);
  std::size_t flat = 0;
  for_each_index(dims, [&](const Index& idx) {
    if (idx.back() < h) {
      full[flat++] = spectrum.data[offset(spectrum.data.dims(), idx)];
    } else {
      Index mirror(idx.size());
      for (std::size_t a = 0; a + 1 < idx.size(); ++a)
        mirror[a] = (dims[a] - idx[a]) % dims[a];
      mirror.back() = dims.back() - idx.back();
      full[flat++] = std::conj(spectrum.data[offset(spectrum.data.dims(), mirror)]);
    }
  });
  return full;
}

}  // namespace sdct

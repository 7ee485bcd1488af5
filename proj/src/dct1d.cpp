#include "sdct/dct1d.hpp"

#include <cmath>
#include <numbers>

namespace sdct {

namespace {

constexpr double kPi = std::numbers::pi;
using cd = std::complex<double>;

std::size_t variant_fft_length(std::size_t n, Dct1dVariant variant) {
  switch (variant) {
    case Dct1dVariant::FourN:
      return 4 * n;
    case Dct1dVariant::MirroredTwoN:
    case Dct1dVariant::PaddedTwoN:
      return 2 * n;
    case Dct1dVariant::NPoint:
      return n;
  }
  throw ShapeError("unknown 1D DCT variant");
}

void require_vector(const RealTensor& x, const char* name) {
  if (x.rank() != 1)
    throw ShapeError(std::string(name) + " expects a rank-1 tensor, got " +
                     shape_to_string(x.dims()));
}

void require_plan(const RealTensor& x, const Plan1d& plan, const char* name) {
  require_vector(x, name);
  if (x.dim(0) != plan.n())
    throw PlanError(std::string(name) + ": plan built for length " + std::to_string(plan.n()) +
                    ", input has length " + std::to_string(x.dim(0)));
}

}  // namespace

std::vector<cd> quarter_wave_table(std::size_t n) {
  std::vector<cd> tw(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double phase = -kPi * static_cast<double>(k) / (2.0 * static_cast<double>(n));
    tw[k] = {std::cos(phase), std::sin(phase)};
  }
  return tw;
}

Plan1d::Plan1d(std::size_t n, Dct1dVariant variant)
    : n_(n), variant_(variant), fft_length_(variant_fft_length(n, variant)), ws_(fft_length_) {
  if (n == 0) throw ShapeError("transform length must be positive");
  twiddle_ = quarter_wave_table(n);
}

RealTensor preprocess_4n(const RealTensor& x) {
  require_vector(x, "preprocess_4n");
  const std::size_t n = x.dim(0);
  RealTensor out(Shape{4 * n}, 0.0);
  for (std::size_t m = 1; m < 4 * n; m += 2)
    out[m] = (m < 2 * n) ? x[(m - 1) / 2] : x[(4 * n - m - 1) / 2];
  return out;
}

RealTensor preprocess_2n_mirrored(const RealTensor& x) {
  require_vector(x, "preprocess_2n_mirrored");
  const std::size_t n = x.dim(0);
  RealTensor out(Shape{2 * n});
  for (std::size_t m = 0; m < n; ++m) {
    out[m] = x[m];
    out[2 * n - 1 - m] = x[m];
  }
  return out;
}

RealTensor preprocess_2n_padded(const RealTensor& x) {
  require_vector(x, "preprocess_2n_padded");
  const std::size_t n = x.dim(0);
  RealTensor out(Shape{2 * n}, 0.0);
  for (std::size_t m = 0; m < n; ++m) out[m] = x[m];
  return out;
}

RealTensor preprocess_n(const RealTensor& x) {
  require_vector(x, "preprocess_n");
  const std::size_t n = x.dim(0);
  RealTensor out(Shape{n});
  for (std::size_t m = 0; m < n; ++m) out[m] = x[parity_embed(m, n)];
  return out;
}

RealTensor postprocess_n(const HalfSpectrum& spectrum, const Plan1d& plan, double scale) {
  const std::size_t n = plan.n();
  if (spectrum.logical_dims != Shape{n})
    throw PlanError("postprocess_n: spectrum shape does not match the plan length");
  const std::size_t h = spectrum.stored_last();
  const cd* in = spectrum.data.data();
  const auto& tw = plan.twiddle();
  RealTensor out(Shape{n});
  for (std::size_t k = 0; k < n; ++k) {
    // Stored entries cover k <= floor(N/2); the upper half reads the
    // conjugate mirror, which leaves the real part of the product unchanged
    // except through the twiddle.
    const cd value = (k < h) ? in[k] : std::conj(in[n - k]);
    out[k] = scale * (tw[k].real() * value.real() - tw[k].imag() * value.imag());
  }
  return out;
}

namespace {

// Shared forward pipeline: reorder/embed, one real FFT, twiddle-and-store.
RealTensor dct_1d_impl(const RealTensor& x, const Plan1d& plan, double post_scale,
                       const ExecConfig& cfg, StageCounters* counters) {
  const std::size_t n = plan.n();
  const std::size_t fft_len = plan.fft_length();
  const std::size_t h = fft_len / 2 + 1;
  const auto& tw = plan.twiddle();

  count_stage(counters);
  RealTensor embedded = [&] {
    switch (plan.variant()) {
      case Dct1dVariant::FourN:
        return preprocess_4n(x);
      case Dct1dVariant::MirroredTwoN:
        return preprocess_2n_mirrored(x);
      case Dct1dVariant::PaddedTwoN:
        return preprocess_2n_padded(x);
      case Dct1dVariant::NPoint:
        return preprocess_n(x);
    }
    throw ShapeError("unknown 1D DCT variant");
  }();

  count_stage(counters);
  std::vector<cd> spectrum(h);
  rfft_row(embedded.data(), fft_len, plan.workspace(), spectrum.data());

  count_stage(counters);
  RealTensor out(Shape{n});
  double* dst = out.data();
  const cd* src = spectrum.data();
  parallel_for(n, cfg, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      switch (plan.variant()) {
        case Dct1dVariant::FourN:
          dst[k] = post_scale * src[k].real();
          break;
        case Dct1dVariant::MirroredTwoN:
        case Dct1dVariant::PaddedTwoN:
          dst[k] = post_scale * (tw[k].real() * src[k].real() - tw[k].imag() * src[k].imag());
          break;
        case Dct1dVariant::NPoint: {
          const cd value = (k < h) ? src[k] : std::conj(src[n - k]);
          dst[k] = post_scale * (tw[k].real() * value.real() - tw[k].imag() * value.imag());
          break;
        }
      }
    }
  });
  return out;
}

}  // namespace

RealTensor dct_1d(const RealTensor& x, const Plan1d& plan, const ExecConfig& cfg,
                  StageCounters* counters) {
  require_plan(x, plan, "dct_1d");
  // The literal scheme formulas evaluate to 2x the cosine-sum definition:
  // the 4N and padded-2N posts already carry an explicit 2 (folded to 1 here),
  // the mirrored and N-point embeddings contribute the doubling structurally.
  const double scale = (plan.variant() == Dct1dVariant::FourN ||
                        plan.variant() == Dct1dVariant::MirroredTwoN)
                           ? 0.5
                           : 1.0;
  return dct_1d_impl(x, plan, scale, cfg, counters);
}

RealTensor dct_1d(const RealTensor& x, Dct1dVariant variant, const ExecConfig& cfg) {
  require_vector(x, "dct_1d");
  Plan1d plan(x.dim(0), variant);
  return dct_1d(x, plan, cfg);
}

RealTensor idct_1d(const RealTensor& x, const Plan1d& plan, const ExecConfig& cfg,
                   StageCounters* counters) {
  require_plan(x, plan, "idct_1d");
  if (plan.variant() != Dct1dVariant::NPoint)
    throw PlanError("idct_1d runs on the N-point scheme; build the plan with NPoint");
  const std::size_t n = plan.n();
  const std::size_t h = n / 2 + 1;
  const auto& tw = plan.twiddle();

  // Conjugate-twiddle preprocess; the output is Hermitian by construction
  // (boundary entries real), so the complex-to-real inverse FFT is lossless.
  count_stage(counters);
  HalfSpectrum spectrum(Shape{n});
  cd* buf = spectrum.data.data();
  const double* in = x.data();
  parallel_for(h, cfg, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const double mirrored = (k == 0) ? 0.0 : in[n - k];  // x(N) := 0
      const cd bracket{in[k], -mirrored};
      buf[k] = std::conj(tw[k]) * bracket;
    }
  });

  count_stage(counters);
  std::vector<double> time(n);
  irfft_row(buf, n, plan.workspace(), time.data());

  // Inverse parity reorder with the 1/2 that makes the round trip (N/2) x.
  count_stage(counters);
  RealTensor out(Shape{n});
  double* dst = out.data();
  parallel_for(n, cfg, [&](std::size_t begin, std::size_t end) {
    for (std::size_t m = begin; m < end; ++m) dst[m] = 0.5 * time[parity_source(m, n)];
  });
  return out;
}

RealTensor idct_1d(const RealTensor& x, const ExecConfig& cfg) {
  require_vector(x, "idct_1d");
  Plan1d plan(x.dim(0), Dct1dVariant::NPoint);
  return idct_1d(x, plan, cfg);
}

}  // namespace sdct

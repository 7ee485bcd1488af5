#include "sdct/dct2d.hpp"

#include <utility>

namespace sdct {

namespace {

using cd = std::complex<double>;

std::size_t checked_extent(std::size_t n) {
  if (n == 0) throw ShapeError("transform extents must be positive");
  return n;
}

Shape oriented_dims(std::size_t n1, std::size_t n2, Orientation orientation) {
  return orientation == Orientation::Direct ? Shape{n1, n2} : Shape{n2, n1};
}

void require_matrix(const RealTensor& x, const char* name) {
  if (x.rank() != 2)
    throw ShapeError(std::string(name) + " expects a rank-2 tensor, got " +
                     shape_to_string(x.dims()));
}

void require_plan(const RealTensor& x, const Plan2d& plan, const char* name) {
  require_matrix(x, name);
  if (x.dim(0) != plan.n1() || x.dim(1) != plan.n2())
    throw PlanError(std::string(name) + ": plan built for " + std::to_string(plan.n1()) + "x" +
                    std::to_string(plan.n2()) + ", input is " + shape_to_string(x.dims()));
}

void require_spectrum(const HalfSpectrum& spectrum, const Plan2d& plan, const char* name) {
  if (spectrum.logical_dims != Shape{plan.n1(), plan.n2()})
    throw PlanError(std::string(name) + ": spectrum covers " +
                    shape_to_string(spectrum.logical_dims) + ", plan is " +
                    std::to_string(plan.n1()) + "x" + std::to_string(plan.n2()));
}

// ---------------------------------------------------------------------------
// Stage kernels. Each runs one pass; the `transposed` flag folds the
// transposed pipeline orientation into the kernel's index arithmetic so a
// transpose never costs a separate pass.
// ---------------------------------------------------------------------------

// Parity gather into the oriented layout (m1 x m2). With `transposed` set the
// source is read as its own transpose, i.e. m1 == x.dim(1).
template <bool Counted>
RealTensor parity_gather_impl(const RealTensor& x, bool transposed, const ExecConfig& cfg,
                              StageCounters* counters) {
  const std::size_t cols = x.dim(1);
  const std::size_t m1 = transposed ? x.dim(1) : x.dim(0);
  const std::size_t m2 = transposed ? x.dim(0) : x.dim(1);
  RealTensor out(Shape{m1, m2});
  const double* src = x.data();
  double* dst = out.data();
  parallel_for(m1 * m2, cfg, counters,
               [&](std::size_t begin, std::size_t end, StageCounters& sink) {
                 ComplexOps<Counted> ops;
                 for (std::size_t item = begin; item < end; ++item) {
                   const std::size_t i = item / m2, j = item % m2;
                   const std::size_t pi = parity_embed(i, m1);
                   const std::size_t pj = parity_embed(j, m2);
                   const std::size_t at = transposed ? pj * cols + pi : pi * cols + pj;
                   ops.store(dst[item], ops.load(src[at]));
                 }
                 ops.flush(sink);
               });
  return out;
}

RealTensor parity_gather(const RealTensor& x, bool transposed, const ExecConfig& cfg,
                         StageCounters* counters) {
  return counters ? parity_gather_impl<true>(x, transposed, cfg, counters)
                  : parity_gather_impl<false>(x, transposed, cfg, nullptr);
}

// Merged forward postprocess. Work item (q1, q2), q1 <= floor(m1/2),
// q2 <= floor(m2/2), forms s = b(a X1 + conj(a) X2), t = b(a X1 - conj(a) X2)
// and stores the mirror quadruple; degenerate rows/columns reuse X1 and skip
// the coincident writes, so every output is written exactly once.
template <bool Counted>
void fused_post_impl(const cd* spec, std::size_t m1, std::size_t m2, std::size_t h2,
                     const std::vector<cd>& tw_a, const std::vector<cd>& tw_b, double* out,
                     bool transposed, const ExecConfig& cfg, StageCounters* counters) {
  const std::size_t rows_half = m1 / 2 + 1;
  parallel_for(
      rows_half * h2, cfg, counters, [&](std::size_t begin, std::size_t end, StageCounters& sink) {
        ComplexOps<Counted> ops;
        auto put = [&](std::size_t r, std::size_t c, double v) {
          ops.store(out[transposed ? c * m1 + r : r * m2 + c], v);
        };
        for (std::size_t item = begin; item < end; ++item) {
          const std::size_t q1 = item / h2, q2 = item % h2;
          const std::size_t r1 = (m1 - q1) % m1;
          const std::size_t r2 = (m2 - q2) % m2;
          const bool deg1 = (r1 == q1), deg2 = (r2 == q2);
          const cd a = tw_a[q1];
          const cd b = tw_b[q2];
          const cd x1 = ops.load(spec[q1 * h2 + q2]);
          const cd x2 = deg1 ? x1 : ops.load(spec[r1 * h2 + q2]);
          const cd ax1 = ops.mul(a, x1);
          const cd ax2 = ops.mul(std::conj(a), x2);
          const cd s = ops.mul(b, ops.add(ax1, ax2));
          put(q1, q2, 0.5 * s.real());
          if (!deg2) put(q1, r2, -0.5 * s.imag());
          if (!deg1) {
            const cd t = ops.mul(b, ops.sub(ax1, ax2));
            put(r1, q2, -0.5 * t.imag());
            if (!deg2) put(r1, r2, -0.5 * t.real());
          }
        }
        ops.flush(sink);
      });
}

void fused_post(const cd* spec, std::size_t m1, std::size_t m2, std::size_t h2,
                const std::vector<cd>& tw_a, const std::vector<cd>& tw_b, double* out,
                bool transposed, const ExecConfig& cfg, StageCounters* counters) {
  if (counters)
    fused_post_impl<true>(spec, m1, m2, h2, tw_a, tw_b, out, transposed, cfg, counters);
  else
    fused_post_impl<false>(spec, m1, m2, h2, tw_a, tw_b, out, transposed, cfg, nullptr);
}

// Reference postprocess: one independent work item per output, reading the
// two spectrum entries it needs (Hermitian-expanding on the fly).
template <bool Counted>
void naive_post_impl(const cd* spec, std::size_t m1, std::size_t m2, std::size_t h2,
                     const std::vector<cd>& tw_a, const std::vector<cd>& tw_b, double* out,
                     const ExecConfig& cfg, StageCounters* counters) {
  parallel_for(
      m1 * m2, cfg, counters, [&](std::size_t begin, std::size_t end, StageCounters& sink) {
        ComplexOps<Counted> ops;
        auto fetch = [&](std::size_t i, std::size_t j) -> cd {
          if (j < h2) return ops.load(spec[i * h2 + j]);
          return std::conj(ops.load(spec[((m1 - i) % m1) * h2 + (m2 - j)]));
        };
        for (std::size_t item = begin; item < end; ++item) {
          const std::size_t k1 = item / m2, k2 = item % m2;
          const cd a = tw_a[k1];
          const cd b = tw_b[k2];
          const cd x1 = fetch(k1, k2);
          const cd x2 = fetch((m1 - k1) % m1, k2);
          const cd u = ops.add(ops.mul(a, x1), ops.mul(std::conj(a), x2));
          // Only the real part of b*u is needed: two multiplies, one add.
          if constexpr (Counted) {
            ops.mults += 2;
            ops.adds += 1;
          }
          ops.store(out[item], 0.5 * (b.real() * u.real() - b.imag() * u.imag()));
        }
        ops.flush(sink);
      });
}

// Merged inverse preprocess over the one-sided output grid. Work item
// (q1, n2) shares four input reads between the two rows it writes. `mode`
// (already expressed in oriented coordinates) reads one axis reversed with a
// zero first slot — the in-place IDXST embedding.
template <bool Counted>
void idct_pre_impl(const double* src, std::size_t src_cols, std::size_t m1, std::size_t m2,
                   std::size_t h2, const std::vector<cd>& tw_a, const std::vector<cd>& tw_b,
                   detail::ReverseAxis mode, bool transposed, cd* out, const ExecConfig& cfg,
                   StageCounters* counters) {
  const std::size_t rows_half = m1 / 2 + 1;
  parallel_for(
      rows_half * h2, cfg, counters, [&](std::size_t begin, std::size_t end, StageCounters& sink) {
        ComplexOps<Counted> ops;
        auto fetch = [&](std::size_t i, std::size_t j) -> double {
          if (i == m1 || j == m2) return 0.0;  // x(N) := 0 on both axes
          if (mode == detail::ReverseAxis::Axis0) {
            if (i == 0) return 0.0;
            i = m1 - i;
          } else if (mode == detail::ReverseAxis::Axis1) {
            if (j == 0) return 0.0;
            j = m2 - j;
          }
          return ops.load(src[transposed ? j * src_cols + i : i * src_cols + j]);
        };
        for (std::size_t item = begin; item < end; ++item) {
          const std::size_t q1 = item / h2, n2 = item % h2;
          const double p = fetch(q1, n2);
          const double q = fetch(m1 - q1, m2 - n2);
          const double r = fetch(m1 - q1, n2);
          const double s = fetch(q1, m2 - n2);
          const cd wb = std::conj(tw_b[n2]);
          const cd w1b = ops.mul(std::conj(tw_a[q1]), wb);
          ops.store(out[q1 * h2 + n2], ops.mul(w1b, cd{ops.sub(p, q), -ops.add(r, s)}));
          const std::size_t r1 = (m1 - q1) % m1;
          if (r1 != q1) {
            const cd w2b = ops.mul(std::conj(tw_a[r1]), wb);
            ops.store(out[r1 * h2 + n2], ops.mul(w2b, cd{ops.sub(r, s), -ops.add(p, q)}));
          }
        }
        ops.flush(sink);
      });
}

void idct_pre(const double* src, std::size_t src_cols, std::size_t m1, std::size_t m2,
              std::size_t h2, const std::vector<cd>& tw_a, const std::vector<cd>& tw_b,
              detail::ReverseAxis mode, bool transposed, cd* out, const ExecConfig& cfg,
              StageCounters* counters) {
  if (counters)
    idct_pre_impl<true>(src, src_cols, m1, m2, h2, tw_a, tw_b, mode, transposed, out, cfg,
                        counters);
  else
    idct_pre_impl<false>(src, src_cols, m1, m2, h2, tw_a, tw_b, mode, transposed, out, cfg,
                         nullptr);
}

// Inverse parity gather with store-time scale and optional alternating sign
// along one (natural) output axis. sign_axis < 0 disables the sign.
template <bool Counted>
RealTensor inverse_gather_impl(const RealTensor& z, bool transposed, double scale, int sign_axis,
                               const ExecConfig& cfg, StageCounters* counters) {
  const std::size_t m1 = z.dim(0), m2 = z.dim(1);
  const std::size_t n1 = transposed ? m2 : m1;
  const std::size_t n2 = transposed ? m1 : m2;
  RealTensor out(Shape{n1, n2});
  const double* src = z.data();
  double* dst = out.data();
  parallel_for(n1 * n2, cfg, counters,
               [&](std::size_t begin, std::size_t end, StageCounters& sink) {
                 ComplexOps<Counted> ops;
                 for (std::size_t item = begin; item < end; ++item) {
                   const std::size_t k1 = item / n2, k2 = item % n2;
                   const std::size_t i = parity_source(transposed ? k2 : k1, m1);
                   const std::size_t j = parity_source(transposed ? k1 : k2, m2);
                   double v = scale * ops.load(src[i * m2 + j]);
                   if (sign_axis == 0 && (k1 & 1u)) v = -v;
                   if (sign_axis == 1 && (k2 & 1u)) v = -v;
                   ops.store(dst[item], v);
                 }
                 ops.flush(sink);
               });
  return out;
}

RealTensor inverse_gather(const RealTensor& z, bool transposed, double scale, int sign_axis,
                          const ExecConfig& cfg, StageCounters* counters) {
  return counters ? inverse_gather_impl<true>(z, transposed, scale, sign_axis, cfg, counters)
                  : inverse_gather_impl<false>(z, transposed, scale, sign_axis, cfg, nullptr);
}

// One full 1D N-point pass over every row of `mat` (three full-tensor
// stages); building block of the row-column baseline.
RealTensor dct_rows(const RealTensor& mat, const FftWorkspace& ws, const std::vector<cd>& tw,
                    const ExecConfig& cfg, StageCounters* counters) {
  const std::size_t rows = mat.dim(0), n = mat.dim(1);
  const std::size_t h = n / 2 + 1;

  count_stage(counters);
  RealTensor reordered(Shape{rows, n});
  {
    const double* src = mat.data();
    double* dst = reordered.data();
    parallel_for(rows * n, cfg, [&](std::size_t begin, std::size_t end) {
      for (std::size_t item = begin; item < end; ++item) {
        const std::size_t r = item / n, m = item % n;
        dst[item] = src[r * n + parity_embed(m, n)];
      }
    });
  }

  count_stage(counters);
  ComplexTensor spec(Shape{rows, h});
  {
    const double* src = reordered.data();
    cd* dst = spec.data();
    parallel_for(rows, cfg, [&](std::size_t begin, std::size_t end) {
      for (std::size_t r = begin; r < end; ++r) rfft_row(src + r * n, n, ws, dst + r * h);
    });
  }

  count_stage(counters);
  RealTensor out(Shape{rows, n});
  {
    const cd* src = spec.data();
    double* dst = out.data();
    parallel_for(rows * n, cfg, [&](std::size_t begin, std::size_t end) {
      for (std::size_t item = begin; item < end; ++item) {
        const std::size_t r = item / n, k = item % n;
        const cd value = (k < h) ? src[r * h + k] : std::conj(src[r * h + (n - k)]);
        dst[item] = tw[k].real() * value.real() - tw[k].imag() * value.imag();
      }
    });
  }
  return out;
}

}  // namespace

Orientation maybe_transpose_strategy(std::size_t n1, std::size_t n2) {
  // Transposing pays off only when rows dominate columns by a wide margin;
  // the 4x threshold keeps square and mildly rectangular shapes direct.
  return (n2 < n1 && n1 >= 4 * n2) ? Orientation::Transposed : Orientation::Direct;
}

Plan2d::Plan2d(std::size_t n1, std::size_t n2, std::optional<Orientation> force_orientation)
    : n1_(checked_extent(n1)),
      n2_(checked_extent(n2)),
      orientation_(force_orientation.value_or(maybe_transpose_strategy(n1, n2))),
      twiddle_a_(quarter_wave_table(n1)),
      twiddle_b_(quarter_wave_table(n2)),
      fft_plan_(oriented_dims(n1, n2, orientation_)) {}

const FftWorkspace& Plan2d::length_workspace(std::size_t length) const {
  return fft_plan_.length_workspace(length);
}

void Plan2d::corrupt_twiddle_for_testing(std::size_t index) {
  if (index >= twiddle_b_.size())
    throw BoundsError("corrupt_twiddle_for_testing: index " + std::to_string(index) +
                      " out of range for table of size " + std::to_string(twiddle_b_.size()));
  twiddle_b_[index] = -twiddle_b_[index];
}

RealTensor dct2d_preprocess(const RealTensor& x, const ExecConfig& cfg, StageCounters* counters) {
  require_matrix(x, "dct2d_preprocess");
  count_stage(counters);
  return parity_gather(x, /*transposed=*/false, cfg, counters);
}

RealTensor dct2d_postprocess_fused(const HalfSpectrum& spectrum, const Plan2d& plan,
                                   const ExecConfig& cfg, StageCounters* counters) {
  require_spectrum(spectrum, plan, "dct2d_postprocess_fused");
  count_stage(counters);
  RealTensor out(Shape{plan.n1(), plan.n2()});
  fused_post(spectrum.data.data(), plan.n1(), plan.n2(), spectrum.stored_last(), plan.twiddle_a(),
             plan.twiddle_b(), out.data(), /*transposed=*/false, cfg, counters);
  return out;
}

RealTensor dct2d_postprocess_naive(const HalfSpectrum& spectrum, const Plan2d& plan,
                                   const ExecConfig& cfg, StageCounters* counters) {
  require_spectrum(spectrum, plan, "dct2d_postprocess_naive");
  count_stage(counters);
  RealTensor out(Shape{plan.n1(), plan.n2()});
  if (counters)
    naive_post_impl<true>(spectrum.data.data(), plan.n1(), plan.n2(), spectrum.stored_last(),
                          plan.twiddle_a(), plan.twiddle_b(), out.data(), cfg, counters);
  else
    naive_post_impl<false>(spectrum.data.data(), plan.n1(), plan.n2(), spectrum.stored_last(),
                           plan.twiddle_a(), plan.twiddle_b(), out.data(), cfg, nullptr);
  return out;
}

HalfSpectrum idct2d_preprocess(const RealTensor& x, const Plan2d& plan, const ExecConfig& cfg,
                               StageCounters* counters) {
  require_plan(x, plan, "idct2d_preprocess");
  count_stage(counters);
  HalfSpectrum spectrum(Shape{plan.n1(), plan.n2()});
  idct_pre(x.data(), plan.n2(), plan.n1(), plan.n2(), spectrum.stored_last(), plan.twiddle_a(),
           plan.twiddle_b(), detail::ReverseAxis::None, /*transposed=*/false,
           spectrum.data.data(), cfg, counters);
  return spectrum;
}

RealTensor idct2d_postprocess(const RealTensor& z, const ExecConfig& cfg,
                              StageCounters* counters) {
  require_matrix(z, "idct2d_postprocess");
  count_stage(counters);
  return inverse_gather(z, /*transposed=*/false, 1.0, /*sign_axis=*/-1, cfg, counters);
}

RealTensor dct_2d(const RealTensor& x, const Plan2d& plan, const ExecConfig& cfg,
                  StageCounters* counters) {
  require_plan(x, plan, "dct_2d");
  const bool transposed = plan.orientation() == Orientation::Transposed;
  const std::size_t m1 = transposed ? plan.n2() : plan.n1();
  const std::size_t m2 = transposed ? plan.n1() : plan.n2();
  const auto& tw_a = transposed ? plan.twiddle_b() : plan.twiddle_a();
  const auto& tw_b = transposed ? plan.twiddle_a() : plan.twiddle_b();

  count_stage(counters);
  RealTensor reordered = parity_gather(x, transposed, cfg, counters);

  count_stage(counters);
  HalfSpectrum spectrum = rfft_nd(reordered, plan.fft_plan(), cfg);

  count_stage(counters);
  RealTensor out(Shape{plan.n1(), plan.n2()});
  fused_post(spectrum.data.data(), m1, m2, spectrum.stored_last(), tw_a, tw_b, out.data(),
             transposed, cfg, counters);
  return out;
}

RealTensor dct_2d(const RealTensor& x, const ExecConfig& cfg) {
  require_matrix(x, "dct_2d");
  Plan2d plan(x.dim(0), x.dim(1));
  return dct_2d(x, plan, cfg);
}

RealTensor dct_2d_rowcol(const RealTensor& x, const Plan2d& plan, const ExecConfig& cfg,
                         StageCounters* counters) {
  require_plan(x, plan, "dct_2d_rowcol");
  // Axis 1 pass, transpose, axis 0 pass, transpose back: 3 + 1 + 3 + 1.
  RealTensor rows = dct_rows(x, plan.length_workspace(plan.n2()), plan.twiddle_b(), cfg, counters);
  count_stage(counters);
  RealTensor flipped = transpose_2d(rows);
  RealTensor cols =
      dct_rows(flipped, plan.length_workspace(plan.n1()), plan.twiddle_a(), cfg, counters);
  count_stage(counters);
  return transpose_2d(cols);
}

namespace detail {

RealTensor idct_family_2d(const RealTensor& x, const Plan2d& plan, ReverseAxis mode,
                          const ExecConfig& cfg, StageCounters* counters) {
  require_plan(x, plan, "idct_family_2d");
  const bool transposed = plan.orientation() == Orientation::Transposed;
  const std::size_t m1 = transposed ? plan.n2() : plan.n1();
  const std::size_t m2 = transposed ? plan.n1() : plan.n2();
  const auto& tw_a = transposed ? plan.twiddle_b() : plan.twiddle_a();
  const auto& tw_b = transposed ? plan.twiddle_a() : plan.twiddle_b();
  // The reversal axis is named in natural coordinates; the transposed
  // pipeline sees it swapped. The alternating sign stays on the natural axis.
  ReverseAxis oriented_mode = mode;
  if (transposed && mode == ReverseAxis::Axis0) oriented_mode = ReverseAxis::Axis1;
  if (transposed && mode == ReverseAxis::Axis1) oriented_mode = ReverseAxis::Axis0;
  const int sign_axis = mode == ReverseAxis::Axis0 ? 0 : mode == ReverseAxis::Axis1 ? 1 : -1;

  count_stage(counters);
  HalfSpectrum spectrum(Shape{m1, m2});
  idct_pre(x.data(), plan.n2(), m1, m2, spectrum.stored_last(), tw_a, tw_b, oriented_mode,
           transposed, spectrum.data.data(), cfg, counters);

  count_stage(counters);
  RealTensor time = irfft_nd(spectrum, plan.fft_plan(), cfg);

  count_stage(counters);
  // The global 1/4 rides on the final gather, keeping the public
  // idct2d_postprocess a pure permutation.
  return inverse_gather(time, transposed, 0.25, sign_axis, cfg, counters);
}

}  // namespace detail

RealTensor idct_2d(const RealTensor& x, const Plan2d& plan, const ExecConfig& cfg,
                   StageCounters* counters) {
  return detail::idct_family_2d(x, plan, detail::ReverseAxis::None, cfg, counters);
}

RealTensor idct_2d(const RealTensor& x, const ExecConfig& cfg) {
  require_matrix(x, "idct_2d");
  Plan2d plan(x.dim(0), x.dim(1));
  return idct_2d(x, plan, cfg);
}

}  // namespace sdct

#include "sdct/transforms_ext.hpp"

#include <algorithm>
#include <vector>

namespace sdct {

namespace {

using cd = std::complex<double>;

std::size_t checked_extent(std::size_t n) {
  if (n == 0) throw ShapeError("transform extents must be positive");
  return n;
}

void require_plan2(const RealTensor& x, const Plan2d& plan, const char* name) {
  if (x.rank() != 2)
    throw ShapeError(std::string(name) + " expects a rank-2 tensor, got " +
                     shape_to_string(x.dims()));
  if (x.dim(0) != plan.n1() || x.dim(1) != plan.n2())
    throw PlanError(std::string(name) + ": plan built for " + std::to_string(plan.n1()) + "x" +
                    std::to_string(plan.n2()) + ", input is " + shape_to_string(x.dims()));
}

void require_plan3(const RealTensor& x, const Plan3d& plan, const char* name) {
  if (x.rank() != 3)
    throw ShapeError(std::string(name) + " expects a rank-3 tensor, got " +
                     shape_to_string(x.dims()));
  if (x.dims() != Shape{plan.n1(), plan.n2(), plan.n3()})
    throw PlanError(std::string(name) + ": plan built for " + std::to_string(plan.n1()) + "x" +
                    std::to_string(plan.n2()) + "x" + std::to_string(plan.n3()) + ", input is " +
                    shape_to_string(x.dims()));
}

// Batched 1D inverse pass over every row: conjugate-twiddle embedding
// (cosine when sine == false, the reversed sine embedding otherwise), row
// inverse FFTs, and the inverse parity gather with the 1/2 — three
// full-tensor stages, the building block of the row-column composites.
RealTensor inverse_rows(const RealTensor& mat, const FftWorkspace& ws, const std::vector<cd>& tw,
                        bool sine, const ExecConfig& cfg, StageCounters* counters) {
  const std::size_t rows = mat.dim(0), n = mat.dim(1);
  const std::size_t h = n / 2 + 1;

  count_stage(counters);
  ComplexTensor spec(Shape{rows, h});
  {
    const double* src = mat.data();
    cd* dst = spec.data();
    parallel_for(rows * h, cfg, [&](std::size_t begin, std::size_t end) {
      for (std::size_t item = begin; item < end; ++item) {
        const std::size_t r = item / h, k = item % h;
        const double* x = src + r * n;
        cd v;
        if (sine)
          v = (k == 0) ? cd{0.0, 0.0} : cd{x[n - k], -x[k]};
        else
          v = cd{x[k], -(k == 0 ? 0.0 : x[n - k])};
        dst[item] = std::conj(tw[k]) * v;
      }
    });
  }

  count_stage(counters);
  RealTensor time(Shape{rows, n});
  {
    const cd* src = spec.data();
    double* dst = time.data();
    parallel_for(rows, cfg, [&](std::size_t begin, std::size_t end) {
      for (std::size_t r = begin; r < end; ++r) irfft_row(src + r * h, n, ws, dst + r * n);
    });
  }

  count_stage(counters);
  RealTensor out(Shape{rows, n});
  {
    const double* src = time.data();
    double* dst = out.data();
    parallel_for(rows * n, cfg, [&](std::size_t begin, std::size_t end) {
      for (std::size_t item = begin; item < end; ++item) {
        const std::size_t r = item / n, m = item % n;
        const double v = 0.5 * src[r * n + parity_source(m, n)];
        dst[item] = (sine && (m & 1u)) ? -v : v;
      }
    });
  }
  return out;
}

// Merged 3D postprocess. Work item (q1, q2, q3) reads the four one-sided
// entries F1..F4 (mirrors across the first two axes; the third axis mirror
// is reached through conjugation, not storage), combines them as
//   T1 = ab F1, T2 = conj(a)b F2, T3 = a conj(b) F3, T4 = conj(a)conj(b) F4,
//   u00 = (T1+T2)+(T3+T4), u01 = (T1+T2)-(T3+T4),
//   u10 = (T1-T2)+(T3-T4), u11 = (T1-T2)-(T3-T4),
// and stores the eight mirror outputs from Re/Im of c*u; degenerate axes
// reuse the already-loaded entries and skip the coincident writes, so every
// stored spectrum element is read exactly once overall.
template <bool Counted>
void fused_post3_impl(const cd* spec, std::size_t n1, std::size_t n2, std::size_t n3,
                      std::size_t h3, const std::vector<cd>& tw_a, const std::vector<cd>& tw_b,
                      const std::vector<cd>& tw_c, double* out, const ExecConfig& cfg,
                      StageCounters* counters) {
  const std::size_t r1h = n1 / 2 + 1;
  const std::size_t r2h = n2 / 2 + 1;
  parallel_for(
      r1h * r2h * h3, cfg, counters,
      [&](std::size_t begin, std::size_t end, StageCounters& sink) {
        ComplexOps<Counted> ops;
        auto put = [&](std::size_t i, std::size_t j, std::size_t k, double v) {
          ops.store(out[(i * n2 + j) * n3 + k], v);
        };
        for (std::size_t item = begin; item < end; ++item) {
          const std::size_t q1 = item / (r2h * h3);
          const std::size_t rem = item % (r2h * h3);
          const std::size_t q2 = rem / h3;
          const std::size_t q3 = rem % h3;
          const std::size_t m1 = (n1 - q1) % n1;
          const std::size_t m2 = (n2 - q2) % n2;
          const std::size_t m3 = (n3 - q3) % n3;
          const bool deg1 = (m1 == q1), deg2 = (m2 == q2), deg3 = (m3 == q3);

          const cd f1 = ops.load(spec[(q1 * n2 + q2) * h3 + q3]);
          const cd f2 = deg1 ? f1 : ops.load(spec[(m1 * n2 + q2) * h3 + q3]);
          const cd f3 = deg2 ? f1 : ops.load(spec[(q1 * n2 + m2) * h3 + q3]);
          const cd f4 = deg1 ? f3 : (deg2 ? f2 : ops.load(spec[(m1 * n2 + m2) * h3 + q3]));

          const cd a = tw_a[q1], b = tw_b[q2], c = tw_c[q3];
          const cd ab = ops.mul(a, b);
          const cd cb = ops.mul(std::conj(a), b);
          const cd t1 = ops.mul(ab, f1);
          const cd t2 = ops.mul(cb, f2);
          const cd t3 = ops.mul(std::conj(cb), f3);
          const cd t4 = ops.mul(std::conj(ab), f4);
          const cd sum12 = ops.add(t1, t2);
          const cd sum34 = ops.add(t3, t4);

          const cd cu00 = ops.mul(c, ops.add(sum12, sum34));
          put(q1, q2, q3, 0.25 * cu00.real());
          if (!deg3) put(q1, q2, m3, -0.25 * cu00.imag());
          if (!deg2) {
            const cd cu01 = ops.mul(c, ops.sub(sum12, sum34));
            put(q1, m2, q3, -0.25 * cu01.imag());
            if (!deg3) put(q1, m2, m3, -0.25 * cu01.real());
          }
          if (!deg1) {
            const cd dif12 = ops.sub(t1, t2);
            const cd dif34 = ops.sub(t3, t4);
            const cd cu10 = ops.mul(c, ops.add(dif12, dif34));
            put(m1, q2, q3, -0.25 * cu10.imag());
            if (!deg3) put(m1, q2, m3, -0.25 * cu10.real());
            if (!deg2) {
              const cd cu11 = ops.mul(c, ops.sub(dif12, dif34));
              put(m1, m2, q3, -0.25 * cu11.real());
              if (!deg3) put(m1, m2, m3, 0.25 * cu11.imag());
            }
          }
        }
        ops.flush(sink);
      });
}

// Elementwise 3D parity permutation; `inverse` selects gather direction and
// `scale` rides on the store (1 for the forward reorder, 1/8 for the inverse).
template <bool Counted>
void parity_pass3_impl(const double* src, std::size_t n1, std::size_t n2, std::size_t n3,
                       bool inverse, double scale, double* dst, const ExecConfig& cfg,
                       StageCounters* counters) {
  parallel_for(n1 * n2 * n3, cfg, counters,
               [&](std::size_t begin, std::size_t end, StageCounters& sink) {
                 ComplexOps<Counted> ops;
                 for (std::size_t item = begin; item < end; ++item) {
                   const std::size_t i = item / (n2 * n3);
                   const std::size_t rem = item % (n2 * n3);
                   const std::size_t j = rem / n3, k = rem % n3;
                   const std::size_t pi = inverse ? parity_source(i, n1) : parity_embed(i, n1);
                   const std::size_t pj = inverse ? parity_source(j, n2) : parity_embed(j, n2);
                   const std::size_t pk = inverse ? parity_source(k, n3) : parity_embed(k, n3);
                   ops.store(dst[item], scale * ops.load(src[(pi * n2 + pj) * n3 + pk]));
                 }
                 ops.flush(sink);
               });
}

// One-sided 3D inverse preprocess: the literal eight-term bracket per stored
// entry, conjugate twiddles on all three axes, out-of-range reads zero.
template <bool Counted>
void idct_pre3_impl(const double* src, std::size_t n1, std::size_t n2, std::size_t n3,
                    std::size_t h3, const std::vector<cd>& tw_a, const std::vector<cd>& tw_b,
                    const std::vector<cd>& tw_c, cd* out, const ExecConfig& cfg,
                    StageCounters* counters) {
  parallel_for(
      n1 * n2 * h3, cfg, counters, [&](std::size_t begin, std::size_t end, StageCounters& sink) {
        ComplexOps<Counted> ops;
        auto fetch = [&](std::size_t i, std::size_t j, std::size_t k) -> double {
          if (i == n1 || j == n2 || k == n3) return 0.0;  // x(N) := 0 per axis
          return ops.load(src[(i * n2 + j) * n3 + k]);
        };
        for (std::size_t item = begin; item < end; ++item) {
          const std::size_t i = item / (n2 * h3);
          const std::size_t rem = item % (n2 * h3);
          const std::size_t j = rem / h3;
          const std::size_t k = rem % h3;
          const std::size_t r1 = n1 - i, r2 = n2 - j, r3 = n3 - k;
          const double re = ops.sub(ops.sub(fetch(i, j, k), fetch(r1, r2, k)),
                                    ops.add(fetch(r1, j, r3), fetch(i, r2, r3)));
          const double im = ops.sub(fetch(r1, r2, r3),
                                    ops.add(ops.add(fetch(r1, j, k), fetch(i, r2, k)),
                                            fetch(i, j, r3)));
          const cd w = ops.mul(ops.mul(std::conj(tw_a[i]), std::conj(tw_b[j])),
                               std::conj(tw_c[k]));
          ops.store(out[(i * n2 + j) * h3 + k], ops.mul(w, cd{re, im}));
        }
        ops.flush(sink);
      });
}

}  // namespace

RealTensor idxst_1d(const RealTensor& x, const Plan1d& plan, const ExecConfig& cfg,
                    StageCounters* counters) {
  if (x.rank() != 1)
    throw ShapeError("idxst_1d expects a rank-1 tensor, got " + shape_to_string(x.dims()));
  if (x.dim(0) != plan.n())
    throw PlanError("idxst_1d: plan built for length " + std::to_string(plan.n()) +
                    ", input has length " + std::to_string(x.dim(0)));
  if (plan.variant() != Dct1dVariant::NPoint)
    throw PlanError("idxst_1d runs on the N-point scheme; build the plan with NPoint");
  const std::size_t n = plan.n();
  const std::size_t h = n / 2 + 1;
  const auto& tw = plan.twiddle();

  // The reversed-with-shift embedding folded into the inverse preprocess:
  // X'(0) = 0 (the shift rule drops x(0) entirely), and for k >= 1
  // X'(k) = conj(tw(k)) * (x(N-k) - j x(k)).
  count_stage(counters);
  HalfSpectrum spectrum(Shape{n});
  cd* buf = spectrum.data.data();
  const double* in = x.data();
  parallel_for(h, cfg, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k)
      buf[k] = (k == 0) ? cd{0.0, 0.0} : std::conj(tw[k]) * cd{in[n - k], -in[k]};
  });

  count_stage(counters);
  std::vector<double> time(n);
  irfft_row(buf, n, plan.workspace(), time.data());

  // Inverse parity gather, 1/2, and the alternating sign.
  count_stage(counters);
  RealTensor out(Shape{n});
  double* dst = out.data();
  parallel_for(n, cfg, [&](std::size_t begin, std::size_t end) {
    for (std::size_t m = begin; m < end; ++m) {
      const double v = 0.5 * time[parity_source(m, n)];
      dst[m] = (m & 1u) ? -v : v;
    }
  });
  return out;
}

RealTensor idxst_1d(const RealTensor& x, const ExecConfig& cfg) {
  if (x.rank() != 1)
    throw ShapeError("idxst_1d expects a rank-1 tensor, got " + shape_to_string(x.dims()));
  Plan1d plan(x.dim(0), Dct1dVariant::NPoint);
  return idxst_1d(x, plan, cfg);
}

RealTensor idct_idxst_2d(const RealTensor& x, const Plan2d& plan, const ExecConfig& cfg,
                         StageCounters* counters) {
  require_plan2(x, plan, "idct_idxst_2d");
  return detail::idct_family_2d(x, plan, detail::ReverseAxis::Axis1, cfg, counters);
}

RealTensor idxst_idct_2d(const RealTensor& x, const Plan2d& plan, const ExecConfig& cfg,
                         StageCounters* counters) {
  require_plan2(x, plan, "idxst_idct_2d");
  return detail::idct_family_2d(x, plan, detail::ReverseAxis::Axis0, cfg, counters);
}

RealTensor composite_2d(const RealTensor& x, const Plan2d& plan, CompositeKind kind,
                        const ExecConfig& cfg, StageCounters* counters) {
  return kind == CompositeKind::IdctIdxst ? idct_idxst_2d(x, plan, cfg, counters)
                                          : idxst_idct_2d(x, plan, cfg, counters);
}

RealTensor composite_2d_rowcol(const RealTensor& x, const Plan2d& plan, CompositeKind kind,
                               const ExecConfig& cfg, StageCounters* counters) {
  require_plan2(x, plan, "composite_2d_rowcol");
  // The sine transform rides on axis 1 for IdctIdxst, axis 0 for IdxstIdct;
  // pass axis 1 first, transpose, pass axis 0, transpose back.
  const bool sine_on_rows = (kind == CompositeKind::IdctIdxst);
  RealTensor rows = inverse_rows(x, plan.length_workspace(plan.n2()), plan.twiddle_b(),
                                 sine_on_rows, cfg, counters);
  count_stage(counters);
  RealTensor flipped = transpose_2d(rows);
  RealTensor cols = inverse_rows(flipped, plan.length_workspace(plan.n1()), plan.twiddle_a(),
                                 !sine_on_rows, cfg, counters);
  count_stage(counters);
  return transpose_2d(cols);
}

RealTensor idct_idxst_2d_rowcol(const RealTensor& x, const Plan2d& plan, const ExecConfig& cfg,
                                StageCounters* counters) {
  return composite_2d_rowcol(x, plan, CompositeKind::IdctIdxst, cfg, counters);
}

RealTensor idxst_idct_2d_rowcol(const RealTensor& x, const Plan2d& plan, const ExecConfig& cfg,
                                StageCounters* counters) {
  return composite_2d_rowcol(x, plan, CompositeKind::IdxstIdct, cfg, counters);
}

Plan3d::Plan3d(std::size_t n1, std::size_t n2, std::size_t n3)
    : n1_(checked_extent(n1)),
      n2_(checked_extent(n2)),
      n3_(checked_extent(n3)),
      twiddle_a_(quarter_wave_table(n1)),
      twiddle_b_(quarter_wave_table(n2)),
      twiddle_c_(quarter_wave_table(n3)),
      fft_plan_(Shape{n1, n2, n3}) {}

RealTensor dct_3d(const RealTensor& x, const Plan3d& plan, const ExecConfig& cfg,
                  StageCounters* counters) {
  require_plan3(x, plan, "dct_3d");
  const std::size_t n1 = plan.n1(), n2 = plan.n2(), n3 = plan.n3();

  count_stage(counters);
  RealTensor reordered(Shape{n1, n2, n3});
  if (counters)
    parity_pass3_impl<true>(x.data(), n1, n2, n3, /*inverse=*/false, 1.0, reordered.data(), cfg,
                            counters);
  else
    parity_pass3_impl<false>(x.data(), n1, n2, n3, /*inverse=*/false, 1.0, reordered.data(), cfg,
                             nullptr);

  count_stage(counters);
  HalfSpectrum spectrum = rfft_nd(reordered, plan.fft_plan(), cfg);

  count_stage(counters);
  RealTensor out(Shape{n1, n2, n3});
  if (counters)
    fused_post3_impl<true>(spectrum.data.data(), n1, n2, n3, spectrum.stored_last(),
                           plan.twiddle_a(), plan.twiddle_b(), plan.twiddle_c(), out.data(), cfg,
                           counters);
  else
    fused_post3_impl<false>(spectrum.data.data(), n1, n2, n3, spectrum.stored_last(),
                            plan.twiddle_a(), plan.twiddle_b(), plan.twiddle_c(), out.data(), cfg,
                            nullptr);
  return out;
}

RealTensor dct_3d(const RealTensor& x, const ExecConfig& cfg) {
  if (x.rank() != 3)
    throw ShapeError("dct_3d expects a rank-3 tensor, got " + shape_to_string(x.dims()));
  Plan3d plan(x.dim(0), x.dim(1), x.dim(2));
  return dct_3d(x, plan, cfg);
}

RealTensor idct_3d(const RealTensor& x, const Plan3d& plan, const ExecConfig& cfg,
                   StageCounters* counters) {
  require_plan3(x, plan, "idct_3d");
  const std::size_t n1 = plan.n1(), n2 = plan.n2(), n3 = plan.n3();

  count_stage(counters);
  HalfSpectrum spectrum(Shape{n1, n2, n3});
  if (counters)
    idct_pre3_impl<true>(x.data(), n1, n2, n3, spectrum.stored_last(), plan.twiddle_a(),
                         plan.twiddle_b(), plan.twiddle_c(), spectrum.data.data(), cfg, counters);
  else
    idct_pre3_impl<false>(x.data(), n1, n2, n3, spectrum.stored_last(), plan.twiddle_a(),
                          plan.twiddle_b(), plan.twiddle_c(), spectrum.data.data(), cfg, nullptr);

  count_stage(counters);
  RealTensor time = irfft_nd(spectrum, plan.fft_plan(), cfg);

  // Inverse parity gather with the global 1/8 (one 1/2 per axis), fixing the
  // round trip at (N1 N2 N3 / 8) x.
  count_stage(counters);
  RealTensor out(Shape{n1, n2, n3});
  if (counters)
    parity_pass3_impl<true>(time.data(), n1, n2, n3, /*inverse=*/true, 0.125, out.data(), cfg,
                            counters);
  else
    parity_pass3_impl<false>(time.data(), n1, n2, n3, /*inverse=*/true, 0.125, out.data(), cfg,
                             nullptr);
  return out;
}

RealTensor idct_3d(const RealTensor& x, const ExecConfig& cfg) {
  if (x.rank() != 3)
    throw ShapeError("idct_3d expects a rank-3 tensor, got " + shape_to_string(x.dims()));
  Plan3d plan(x.dim(0), x.dim(1), x.dim(2));
  return idct_3d(x, plan, cfg);
}

RealTensor dct_nd_factorized(const RealTensor& x, const ExecConfig& cfg) {
  if (x.rank() != 4)
    throw ShapeError("dct_nd_factorized expects a rank-4 tensor, got " +
                     shape_to_string(x.dims()));
  const std::size_t d0 = x.dim(0), d1 = x.dim(1), d2 = x.dim(2), d3 = x.dim(3);

  // Round one, axes (0,1): viewed as a (d0 d1) x (d2 d3) matrix the row-major
  // tensor puts the (0,1) block on the row index, so transpose, transform
  // every row as a d0 x d1 matrix, and transpose back.
  RealTensor big(Shape{d0 * d1, d2 * d3}, x.storage());
  RealTensor flipped = transpose_2d(big);
  Plan2d plan01(d0, d1);
  for (std::size_t r = 0; r < d2 * d3; ++r) {
    double* row = flipped.data() + r * d0 * d1;
    RealTensor slice(Shape{d0, d1}, std::vector<double>(row, row + d0 * d1));
    RealTensor y = dct_2d(slice, plan01, cfg);
    std::copy(y.data(), y.data() + d0 * d1, row);
  }
  RealTensor round_one = transpose_2d(flipped);

  // Round two, axes (2,3): contiguous inner matrices.
  Plan2d plan23(d2, d3);
  for (std::size_t s = 0; s < d0 * d1; ++s) {
    double* block = round_one.data() + s * d2 * d3;
    RealTensor slice(Shape{d2, d3}, std::vector<double>(block, block + d2 * d3));
    RealTensor y = dct_2d(slice, plan23, cfg);
    std::copy(y.data(), y.data() + d2 * d3, block);
  }
  return RealTensor(Shape{d0, d1, d2, d3}, std::move(round_one.storage()));
}

}  // namespace sdct

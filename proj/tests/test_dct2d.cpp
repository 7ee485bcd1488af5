#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "sdct/dct1d.hpp"
#include "sdct/dct2d.hpp"
#include "sdct/oracle.hpp"
#include "sdct/rfft.hpp"
#include "sdct/tensor.hpp"

using namespace sdct;

namespace {

RealTensor random_real(const Shape& dims, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  RealTensor out(dims);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = dist(rng);
  return out;
}

double rel_err(const RealTensor& got, const RealTensor& want) {
  REQUIRE(got.dims() == want.dims());
  double err = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    err = std::max(err, std::abs(got[i] - want[i]));
    scale = std::max(scale, std::abs(want[i]));
  }
  return scale > 1e-12 ? err / scale : err;
}

// Work-item class populations of the merged postprocess for even extents.
struct ItemClasses {
  double interior, row_degenerate, col_degenerate, both;
};

ItemClasses classes_for(std::size_t m1, std::size_t m2) {
  const double ri = static_cast<double>(m1 / 2 - 1);
  const double ci = static_cast<double>(m2 / 2 - 1);
  return {ri * ci, 2.0 * ci, ri * 2.0, 4.0};
}

// Solve the 4x4 system (Gaussian elimination, partial pivot) relating class
// populations to counter totals, recovering the per-class cost.
std::array<double, 4> solve4(std::array<std::array<double, 5>, 4> m) {
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < 4; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    std::swap(m[col], m[pivot]);
    REQUIRE(std::abs(m[col][col]) > 1e-9);
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < 5; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return {m[0][4] / m[0][0], m[1][4] / m[1][1], m[2][4] / m[2][2], m[3][4] / m[3][3]};
}

}  // namespace

TEST_CASE("transpose strategy engages only for strongly row-dominant shapes") {
  CHECK(maybe_transpose_strategy(8, 8) == Orientation::Direct);
  CHECK(maybe_transpose_strategy(8, 3) == Orientation::Direct);   // 8 < 4*3
  CHECK(maybe_transpose_strategy(8, 2) == Orientation::Transposed);
  CHECK(maybe_transpose_strategy(100, 25) == Orientation::Transposed);
  CHECK(maybe_transpose_strategy(25, 100) == Orientation::Direct);
  CHECK(maybe_transpose_strategy(1, 1) == Orientation::Direct);
}

TEST_CASE("plan caches the per-axis quarter-wave tables") {
  Plan2d plan(6, 10);
  CHECK(plan.n1() == 6);
  CHECK(plan.n2() == 10);
  CHECK(plan.twiddle_a().size() == 6);
  CHECK(plan.twiddle_b().size() == 10);
  CHECK(plan.orientation() == Orientation::Direct);
  CHECK(plan.fft_plan().dims() == Shape{6, 10});

  Plan2d forced(6, 10, Orientation::Transposed);
  CHECK(forced.orientation() == Orientation::Transposed);
  CHECK(forced.fft_plan().dims() == Shape{10, 6});

  CHECK_THROWS_AS(Plan2d(0, 4), ShapeError);
}

TEST_CASE("2D preprocess applies the parity reorder per axis") {
  RealTensor x(Shape{4, 5});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 5; ++j) x(i, j) = static_cast<double>(10 * i + j);
  RealTensor y = dct2d_preprocess(x);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      CHECK(y(i, j) == x(parity_embed(i, 4), parity_embed(j, 5)));
}

TEST_CASE("inverse parity gather undoes the preprocess") {
  RealTensor x = random_real(Shape{6, 7}, 100);
  RealTensor back = idct2d_postprocess(dct2d_preprocess(x));
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(back[i] == x[i]);
}

TEST_CASE("fused transform matches the quadruple-sum oracle") {
  for (std::size_t n1 : {1, 2, 3, 4, 5, 8}) {
    for (std::size_t n2 : {1, 2, 3, 6, 7, 8}) {
      RealTensor x = random_real(Shape{n1, n2}, static_cast<std::uint32_t>(200 + 10 * n1 + n2));
      CAPTURE(n1);
      CAPTURE(n2);
      CHECK(rel_err(dct_2d(x), oracle::dct_oracle_2d(x)) < 1e-10);
    }
  }
  RealTensor x = random_real(Shape{16, 12}, 300);
  CHECK(rel_err(dct_2d(x), oracle::dct_oracle_2d(x)) < 1e-10);
}

TEST_CASE("merged and per-output postprocess kernels agree on one spectrum") {
  for (auto [n1, n2] : {std::pair<std::size_t, std::size_t>{8, 8}, {7, 9}, {1, 6}, {5, 1}}) {
    // The standalone stage helpers run in the natural frame; force the
    // direct orientation so the plan's FFT layout matches (5x1 would
    // otherwise auto-transpose).
    Plan2d plan(n1, n2, Orientation::Direct);
    RealTensor x = random_real(Shape{n1, n2}, static_cast<std::uint32_t>(400 + 10 * n1 + n2));
    HalfSpectrum spectrum = rfft_nd(dct2d_preprocess(x), plan.fft_plan());
    RealTensor fused = dct2d_postprocess_fused(spectrum, plan);
    RealTensor naive = dct2d_postprocess_naive(spectrum, plan);
    CAPTURE(n1);
    CAPTURE(n2);
    CHECK(rel_err(fused, naive) < 1e-13);
  }
}

TEST_CASE("row-column baseline computes the same transform") {
  for (auto [n1, n2] : {std::pair<std::size_t, std::size_t>{5, 7}, {16, 12}, {31, 17}}) {
    Plan2d plan(n1, n2);
    RealTensor x = random_real(Shape{n1, n2}, static_cast<std::uint32_t>(500 + 10 * n1 + n2));
    CHECK(rel_err(dct_2d_rowcol(x, plan), dct_2d(x, plan)) < 1e-10);
  }
}

TEST_CASE("both orientations produce the oracle transform") {
  RealTensor x = random_real(Shape{16, 3}, 600);
  RealTensor want = oracle::dct_oracle_2d(x);
  Plan2d direct(16, 3, Orientation::Direct);
  Plan2d transposed(16, 3, Orientation::Transposed);
  CHECK(rel_err(dct_2d(x, direct), want) < 1e-10);
  CHECK(rel_err(dct_2d(x, transposed), want) < 1e-10);

  RealTensor back_d = idct_2d(dct_2d(x, direct), direct);
  RealTensor back_t = idct_2d(dct_2d(x, transposed), transposed);
  RealTensor scaled(Shape{16, 3});
  for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = (16.0 * 3.0 / 4.0) * x[i];
  CHECK(rel_err(back_d, scaled) < 1e-10);
  CHECK(rel_err(back_t, scaled) < 1e-10);
}

TEST_CASE("inverse transform closes the round trip at N1 N2 / 4") {
  for (auto [n1, n2] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 2}, {9, 14}, {8, 8}}) {
    Plan2d plan(n1, n2);
    RealTensor x = random_real(Shape{n1, n2}, static_cast<std::uint32_t>(700 + 10 * n1 + n2));
    RealTensor back = idct_2d(dct_2d(x, plan), plan);
    RealTensor want(Shape{n1, n2});
    for (std::size_t i = 0; i < x.size(); ++i)
      want[i] = (static_cast<double>(n1 * n2) / 4.0) * x[i];
    CAPTURE(n1);
    CAPTURE(n2);
    CHECK(rel_err(back, want) < 1e-10);
  }
}

TEST_CASE("inverse transform equals the separable inverse oracle") {
  const std::size_t n1 = 5, n2 = 6;
  RealTensor x = random_real(Shape{n1, n2}, 800);
  // idct along axis 1, then axis 0, through the 1D oracle.
  RealTensor rows(Shape{n1, n2});
  for (std::size_t i = 0; i < n1; ++i) {
    RealTensor row(Shape{n2});
    for (std::size_t j = 0; j < n2; ++j) row[j] = x(i, j);
    RealTensor t = oracle::idct_oracle_1d(row);
    for (std::size_t j = 0; j < n2; ++j) rows(i, j) = t[j];
  }
  RealTensor want(Shape{n1, n2});
  for (std::size_t j = 0; j < n2; ++j) {
    RealTensor col(Shape{n1});
    for (std::size_t i = 0; i < n1; ++i) col[i] = rows(i, j);
    RealTensor t = oracle::idct_oracle_1d(col);
    for (std::size_t i = 0; i < n1; ++i) want(i, j) = t[i];
  }
  CHECK(rel_err(idct_2d(x), want) < 1e-10);
}

TEST_CASE("fused pipeline runs 3 stages, the row-column baseline 8") {
  RealTensor x = random_real(Shape{8, 8}, 900);
  Plan2d plan(8, 8);
  StageCounters fused;
  dct_2d(x, plan, {}, &fused);
  CHECK(fused.full_tensor_stages == 3);
  StageCounters rowcol;
  dct_2d_rowcol(x, plan, {}, &rowcol);
  CHECK(rowcol.full_tensor_stages == 8);
}

TEST_CASE("merged postprocess touches each element exactly once") {
  for (auto [n1, n2] : {std::pair<std::size_t, std::size_t>{8, 8}, {7, 9}, {8, 7}, {7, 8}}) {
    Plan2d plan(n1, n2);
    RealTensor x = random_real(Shape{n1, n2}, static_cast<std::uint32_t>(1000 + 10 * n1 + n2));
    HalfSpectrum spectrum = rfft_nd(dct2d_preprocess(x), plan.fft_plan());
    StageCounters counters;
    dct2d_postprocess_fused(spectrum, plan, {}, &counters);
    CAPTURE(n1);
    CAPTURE(n2);
    CHECK(counters.element_reads == n1 * (n2 / 2 + 1));
    CHECK(counters.element_writes == n1 * n2);
  }
}

TEST_CASE("interior work items cost 16 multiplications and 12 additions") {
  // Counter totals at four even shapes pin down the per-class costs: the
  // class-population matrix (interior, row-degenerate, column-degenerate,
  // corner) is full rank over these shapes.
  const std::pair<std::size_t, std::size_t> shapes[] = {{8, 8}, {12, 8}, {8, 12}, {12, 12}};
  std::array<std::array<double, 5>, 4> mult_rows{};
  std::array<std::array<double, 5>, 4> add_rows{};
  for (std::size_t s = 0; s < 4; ++s) {
    const auto [n1, n2] = shapes[s];
    Plan2d plan(n1, n2);
    RealTensor x = random_real(Shape{n1, n2}, static_cast<std::uint32_t>(1100 + s));
    HalfSpectrum spectrum = rfft_nd(dct2d_preprocess(x), plan.fft_plan());
    StageCounters counters;
    dct2d_postprocess_fused(spectrum, plan, {}, &counters);
    const ItemClasses cls = classes_for(n1, n2);
    mult_rows[s] = {cls.interior, cls.row_degenerate, cls.col_degenerate, cls.both,
                    static_cast<double>(counters.real_mults)};
    add_rows[s] = {cls.interior, cls.row_degenerate, cls.col_degenerate, cls.both,
                   static_cast<double>(counters.real_adds)};
  }
  const std::array<double, 4> mults = solve4(mult_rows);
  const std::array<double, 4> adds = solve4(add_rows);
  CHECK(mults[0] == doctest::Approx(16.0).epsilon(1e-9));
  CHECK(adds[0] == doctest::Approx(12.0).epsilon(1e-9));
}

TEST_CASE("8x8 arithmetic totals decompose over the item classes") {
  Plan2d plan(8, 8);
  RealTensor x = random_real(Shape{8, 8}, 1200);
  HalfSpectrum spectrum = rfft_nd(dct2d_preprocess(x), plan.fft_plan());
  StageCounters counters;
  dct2d_postprocess_fused(spectrum, plan, {}, &counters);
  // 9 interior items at (16, 12), 6 + 4 degenerate-row items at (12, 8),
  // 6 degenerate-column items at (16, 12).
  CHECK(counters.real_mults == 9 * 16 + 6 * 12 + 6 * 16 + 4 * 12);
  CHECK(counters.real_adds == 9 * 12 + 6 * 8 + 6 * 12 + 4 * 8);
  CHECK(counters.real_mults == 360);
  CHECK(counters.real_adds == 260);
}

TEST_CASE("per-output reference kernel costs are uniform") {
  Plan2d plan(8, 8);
  RealTensor x = random_real(Shape{8, 8}, 1300);
  HalfSpectrum spectrum = rfft_nd(dct2d_preprocess(x), plan.fft_plan());
  StageCounters counters;
  dct2d_postprocess_naive(spectrum, plan, {}, &counters);
  CHECK(counters.element_reads == 2 * 64);
  CHECK(counters.element_writes == 64);
  CHECK(counters.real_mults == 10 * 64);
  CHECK(counters.real_adds == 7 * 64);
}

TEST_CASE("a corrupted twiddle table is caught by the oracle comparison") {
  Plan2d plan(8, 8);
  plan.corrupt_twiddle_for_testing(3);
  RealTensor x = random_real(Shape{8, 8}, 1400);
  CHECK(rel_err(dct_2d(x, plan), oracle::dct_oracle_2d(x)) > 1e-6);
  Plan2d clean(8, 8);
  CHECK_THROWS_AS(clean.corrupt_twiddle_for_testing(8), BoundsError);
}

TEST_CASE("plans reject mismatched inputs as shape errors") {
  Plan2d plan(4, 6);
  RealTensor wrong = random_real(Shape{6, 4}, 1500);
  CHECK_THROWS_AS(dct_2d(wrong, plan), PlanError);
  CHECK_THROWS_AS(dct_2d(wrong, plan), ShapeError);  // PlanError is-a ShapeError
  CHECK_THROWS_AS(idct_2d(wrong, plan), PlanError);
  CHECK_THROWS_AS(dct_2d_rowcol(wrong, plan), PlanError);
  RealTensor vec = random_real(Shape{4}, 1501);
  CHECK_THROWS_AS(dct_2d(vec, plan), ShapeError);

  HalfSpectrum spectrum(Shape{5, 5});
  CHECK_THROWS_AS(dct2d_postprocess_fused(spectrum, plan), PlanError);
}

TEST_CASE("fused 2D results are bitwise identical across degrees") {
  RealTensor x = random_real(Shape{33, 17}, 1600);
  Plan2d plan(33, 17);
  ExecConfig base{1, 64};
  RealTensor want_f = dct_2d(x, plan, base);
  RealTensor want_i = idct_2d(x, plan, base);
  for (unsigned degree : {2u, 4u, 8u}) {
    ExecConfig cfg{degree, 64};
    RealTensor f = dct_2d(x, plan, cfg);
    RealTensor inv = idct_2d(x, plan, cfg);
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK(f[i] == want_f[i]);
      CHECK(inv[i] == want_i[i]);
    }
  }
}

#include "sdct/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <limits>
#include <random>
#include <sstream>

#include "sdct/dct1d.hpp"
#include "sdct/dct2d.hpp"
#include "sdct/oracle.hpp"
#include "sdct/rfft.hpp"
#include "sdct/tensor.hpp"
#include "sdct/transforms_ext.hpp"

namespace sdct {

namespace {

using cd = std::complex<double>;

RealTensor random_tensor(const Shape& dims, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  RealTensor out(dims);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = dist(rng);
  return out;
}

double max_abs(const RealTensor& x) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

// Max elementwise difference scaled by the reference magnitude (absolute when
// the reference is essentially zero).
double rel_error(const RealTensor& got, const RealTensor& want) {
  if (got.dims() != want.dims()) return std::numeric_limits<double>::infinity();
  double diff = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) diff = std::max(diff, std::abs(got[i] - want[i]));
  const double scale = max_abs(want);
  return scale > 1e-12 ? diff / scale : diff;
}

std::string err_string(double e) {
  std::ostringstream os;
  os.precision(2);
  os << std::scientific << e;
  return os.str();
}

// Tracks the worst error across a suite's checks and the first failure.
class Suite {
 public:
  explicit Suite(std::string name) : entry_{std::move(name), true, ""} {}

  void check(double err, double tol, const std::string& what) {
    worst_ = std::max(worst_, err);
    if (err > tol && entry_.passed) {
      entry_.passed = false;
      entry_.detail = what + ": error " + err_string(err) + " exceeds " + err_string(tol);
    }
  }
  void expect(bool ok, const std::string& what) {
    if (!ok && entry_.passed) {
      entry_.passed = false;
      entry_.detail = what;
    }
  }

  VerifyEntry finish() {
    if (entry_.passed) entry_.detail = "worst error " + err_string(worst_);
    return entry_;
  }

 private:
  VerifyEntry entry_;
  double worst_ = 0.0;
};

VerifyEntry suite_oracle_self_consistency() {
  Suite suite("oracle-self-consistency");
  for (std::size_t n = 1; n <= 16; ++n) {
    const RealTensor x = random_tensor(Shape{n}, 100 + static_cast<std::uint32_t>(n));
    RealTensor back = oracle::idct_oracle_1d(oracle::dct_oracle_1d(x));
    RealTensor want(Shape{n});
    for (std::size_t i = 0; i < n; ++i) want[i] = 0.5 * static_cast<double>(n) * x[i];
    suite.check(rel_error(back, want), 1e-10, "round trip N=" + std::to_string(n));
  }
  return suite.finish();
}

VerifyEntry suite_dct1d_schemes(const ExecConfig& cfg) {
  Suite suite("dct1d-schemes-vs-oracle");
  const Dct1dVariant variants[] = {Dct1dVariant::FourN, Dct1dVariant::MirroredTwoN,
                                   Dct1dVariant::PaddedTwoN, Dct1dVariant::NPoint};
  for (std::size_t n : {1, 2, 3, 4, 5, 6, 7, 8, 12, 16, 27, 100}) {
    const RealTensor x = random_tensor(Shape{n}, 200 + static_cast<std::uint32_t>(n));
    const RealTensor want = oracle::dct_oracle_1d(x);
    for (Dct1dVariant v : variants) {
      Plan1d plan(n, v);
      suite.check(rel_error(dct_1d(x, plan, cfg), want), 1e-10,
                  "scheme " + std::to_string(static_cast<int>(v)) + " N=" + std::to_string(n));
    }
  }
  return suite.finish();
}

VerifyEntry suite_postprocess_oracle(const ExecConfig& cfg, bool corrupt) {
  Suite suite("postprocess-oracle-agreement");
  for (std::size_t n1 : {1, 2, 3, 5, 8}) {
    for (std::size_t n2 : {1, 2, 4, 7, 8}) {
      Plan2d plan(n1, n2);
      // The standalone stage kernels below work in the natural frame, so the
      // shared-spectrum comparison needs a direct-orientation plan.
      Plan2d direct(n1, n2, Orientation::Direct);
      if (corrupt) {
        plan.corrupt_twiddle_for_testing(n2 > 3 ? 3 : n2 - 1);
        direct.corrupt_twiddle_for_testing(n2 > 3 ? 3 : n2 - 1);
      }
      const RealTensor x =
          random_tensor(Shape{n1, n2}, static_cast<std::uint32_t>(300 + 10 * n1 + n2));
      const RealTensor want = oracle::dct_oracle_2d(x);
      suite.check(rel_error(dct_2d(x, plan, cfg), want), 1e-10,
                  "fused " + shape_to_string(x.dims()));
      // The merged and per-output postprocess kernels must agree exactly on
      // the same spectrum.
      HalfSpectrum spectrum = rfft_nd(dct2d_preprocess(x, cfg), direct.fft_plan(), cfg);
      suite.check(rel_error(dct2d_postprocess_fused(spectrum, direct, cfg),
                            dct2d_postprocess_naive(spectrum, direct, cfg)),
                  1e-12, "fused-vs-naive " + shape_to_string(x.dims()));
    }
  }
  return suite.finish();
}

VerifyEntry suite_rowcol_agreement(const ExecConfig& cfg) {
  Suite suite("rowcol-agreement");
  for (auto [n1, n2] : {std::pair<std::size_t, std::size_t>{4, 4}, {5, 7}, {16, 12}, {31, 17}}) {
    Plan2d plan(n1, n2);
    const RealTensor x =
        random_tensor(Shape{n1, n2}, static_cast<std::uint32_t>(400 + 10 * n1 + n2));
    suite.check(rel_error(dct_2d_rowcol(x, plan, cfg), dct_2d(x, plan, cfg)), 1e-10,
                "rowcol " + shape_to_string(x.dims()));
  }
  return suite.finish();
}

VerifyEntry suite_round_trips(const ExecConfig& cfg) {
  Suite suite("round-trips");
  {
    const std::size_t n = 12;
    const RealTensor x = random_tensor(Shape{n}, 500);
    Plan1d plan(n);
    RealTensor back = idct_1d(dct_1d(x, plan, cfg), plan, cfg);
    RealTensor want(Shape{n});
    for (std::size_t i = 0; i < n; ++i) want[i] = 0.5 * static_cast<double>(n) * x[i];
    suite.check(rel_error(back, want), 1e-10, "1D (N/2)x");
  }
  {
    Plan2d plan(9, 14);
    const RealTensor x = random_tensor(Shape{9, 14}, 501);
    RealTensor back = idct_2d(dct_2d(x, plan, cfg), plan, cfg);
    RealTensor want(Shape{9, 14});
    for (std::size_t i = 0; i < x.size(); ++i) want[i] = (9.0 * 14.0 / 4.0) * x[i];
    suite.check(rel_error(back, want), 1e-10, "2D (N1 N2/4)x");
  }
  {
    Plan3d plan(3, 4, 5);
    const RealTensor x = random_tensor(Shape{3, 4, 5}, 502);
    RealTensor back = idct_3d(dct_3d(x, plan, cfg), plan, cfg);
    RealTensor want(Shape{3, 4, 5});
    for (std::size_t i = 0; i < x.size(); ++i) want[i] = (3.0 * 4.0 * 5.0 / 8.0) * x[i];
    suite.check(rel_error(back, want), 1e-10, "3D (N1 N2 N3/8)x");
  }
  return suite.finish();
}

VerifyEntry suite_hermitian(const ExecConfig& cfg) {
  Suite suite("hermitian-symmetry");
  for (std::size_t n = 1; n <= 17; ++n) {
    const RealTensor x = random_tensor(Shape{n}, 600 + static_cast<std::uint32_t>(n));
    ComplexTensor full = expand_spectrum(rfft_1d(x, cfg));
    std::vector<cd> data(x.data(), x.data() + n);
    const std::vector<cd> want = dft_naive(data);
    double err = 0.0;
    double scale = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      err = std::max(err, std::abs(full[k] - want[k]));
      scale = std::max(scale, std::abs(want[k]));
    }
    suite.check(scale > 0 ? err / scale : err, 1e-10, "expand N=" + std::to_string(n));
  }
  {
    // N = 5: the one-sided store implies X(1) = X*(4), X(2) = X*(3).
    const RealTensor x = random_tensor(Shape{5}, 700);
    ComplexTensor full = expand_spectrum(rfft_1d(x, cfg));
    suite.check(std::abs(full[1] - std::conj(full[4])), 1e-12, "X(1)=X*(4)");
    suite.check(std::abs(full[2] - std::conj(full[3])), 1e-12, "X(2)=X*(3)");
  }
  return suite.finish();
}

VerifyEntry suite_idxst(const ExecConfig& cfg) {
  Suite suite("idxst-and-composites");
  for (std::size_t n = 1; n <= 12; ++n) {
    const RealTensor x = random_tensor(Shape{n}, 800 + static_cast<std::uint32_t>(n));
    suite.check(rel_error(idxst_1d(x, cfg), oracle::idxst_oracle_1d(x)), 1e-10,
                "idxst N=" + std::to_string(n));
  }
  for (auto [n1, n2] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 3}, {4, 4}, {6, 5}}) {
    Plan2d plan(n1, n2);
    const RealTensor x =
        random_tensor(Shape{n1, n2}, static_cast<std::uint32_t>(900 + 10 * n1 + n2));
    suite.check(rel_error(idct_idxst_2d(x, plan, cfg), idct_idxst_2d_rowcol(x, plan, cfg)),
                1e-10, "idct-idxst " + shape_to_string(x.dims()));
    suite.check(rel_error(idxst_idct_2d(x, plan, cfg), idxst_idct_2d_rowcol(x, plan, cfg)),
                1e-10, "idxst-idct " + shape_to_string(x.dims()));
  }
  return suite.finish();
}

VerifyEntry suite_counters(const ExecConfig& cfg) {
  Suite suite("stage-and-touch-counters");
  Plan2d plan(8, 8);
  const RealTensor x = random_tensor(Shape{8, 8}, 1000);
  {
    StageCounters c;
    dct_2d(x, plan, cfg, &c);
    suite.expect(c.full_tensor_stages == 3,
                 "fused stages = " + std::to_string(c.full_tensor_stages) + ", want 3");
  }
  {
    StageCounters c;
    dct_2d_rowcol(x, plan, cfg, &c);
    suite.expect(c.full_tensor_stages == 8,
                 "rowcol stages = " + std::to_string(c.full_tensor_stages) + ", want 8");
  }
  for (auto [n1, n2] : {std::pair<std::size_t, std::size_t>{8, 8}, {7, 9}}) {
    Plan2d p(n1, n2);
    const RealTensor y =
        random_tensor(Shape{n1, n2}, static_cast<std::uint32_t>(1100 + 10 * n1 + n2));
    HalfSpectrum spectrum = rfft_nd(dct2d_preprocess(y, cfg), p.fft_plan(), cfg);
    StageCounters c;
    dct2d_postprocess_fused(spectrum, p, cfg, &c);
    suite.expect(c.element_reads == n1 * (n2 / 2 + 1),
                 "single-touch reads " + shape_to_string(y.dims()));
    suite.expect(c.element_writes == n1 * n2, "single-touch writes " + shape_to_string(y.dims()));
  }
  {
    // 8x8 arithmetic totals decompose as 9 interior items of (16, 12) plus
    // the degenerate boundary items.
    HalfSpectrum spectrum = rfft_nd(dct2d_preprocess(x, cfg), plan.fft_plan(), cfg);
    StageCounters c;
    dct2d_postprocess_fused(spectrum, plan, cfg, &c);
    suite.expect(c.real_mults == 360, "8x8 mults = " + std::to_string(c.real_mults));
    suite.expect(c.real_adds == 260, "8x8 adds = " + std::to_string(c.real_adds));
  }
  return suite.finish();
}

VerifyEntry suite_determinism() {
  Suite suite("determinism-across-degrees");
  Plan2d plan(33, 17);
  const RealTensor x = random_tensor(Shape{33, 17}, 1200);
  ExecConfig base{1, 64};
  const RealTensor want_f = dct_2d(x, plan, base);
  const RealTensor want_i = idct_2d(x, plan, base);
  for (unsigned degree : {2u, 4u, 8u}) {
    ExecConfig cfg{degree, 64};
    const RealTensor f = dct_2d(x, plan, cfg);
    const RealTensor inv = idct_2d(x, plan, cfg);
    suite.expect(std::memcmp(f.data(), want_f.data(), f.size() * sizeof(double)) == 0,
                 "dct_2d differs at degree " + std::to_string(degree));
    suite.expect(std::memcmp(inv.data(), want_i.data(), inv.size() * sizeof(double)) == 0,
                 "idct_2d differs at degree " + std::to_string(degree));
  }
  return suite.finish();
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  ExecConfig cfg;
  cfg.parallelism_degree = options.threads;

  VerifyReport report;
  report.entries.push_back(suite_oracle_self_consistency());
  report.entries.push_back(suite_dct1d_schemes(cfg));
  report.entries.push_back(suite_postprocess_oracle(cfg, options.corrupt_twiddle));
  report.entries.push_back(suite_rowcol_agreement(cfg));
  report.entries.push_back(suite_round_trips(cfg));
  report.entries.push_back(suite_hermitian(cfg));
  report.entries.push_back(suite_idxst(cfg));
  report.entries.push_back(suite_counters(cfg));
  report.entries.push_back(suite_determinism());
  return report;
}

std::string format_verify_report(const VerifyReport& report) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& e : report.entries) {
    os << (e.passed ? "PASS" : "FAIL") << ' ' << e.name;
    if (!e.detail.empty()) os << " — " << e.detail;
    os << '\n';
    if (!e.passed) ++failed;
  }
  os << (failed == 0 ? "all suites passed"
                     : std::to_string(failed) + " of " + std::to_string(report.entries.size()) +
                           " suites failed")
     << '\n';
  return os.str();
}

}  // namespace sdct

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "sdct/amdahl.hpp"
#include "sdct/bench.hpp"
#include "sdct/compress.hpp"
#include "sdct/dct2d.hpp"
#include "sdct/errors.hpp"
#include "sdct/force.hpp"
#include "sdct/transforms_ext.hpp"
#include "sdct/verify.hpp"

using namespace sdct;

namespace {

GrayImage checker_image(std::size_t width, std::size_t height) {
  GrayImage image;
  image.width = width;
  image.height = height;
  image.samples.resize(width * height);
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dist(0, 255);
  for (auto& s : image.samples) s = static_cast<std::uint8_t>(dist(rng));
  return image;
}

}  // namespace

TEST_CASE("compress at epsilon 0 reproduces the input exactly") {
  GrayImage input = checker_image(16, 12);
  CompressResult result = compress_image(input, 0.0);
  CHECK(result.image.samples == input.samples);
  CHECK(result.stats.total_coefficients == 16 * 12);
  // |B| < 0 never holds, so nothing is zeroed — not even exact-zero bins.
  CHECK(result.stats.zeroed_coefficients == 0);
  CHECK(result.stats.zeroed_fraction == 0.0);
  CHECK(std::isinf(result.stats.psnr_db));
  CHECK(result.stats.psnr_db > 0.0);
}

TEST_CASE("compress at epsilon infinity zeroes the whole spectrum") {
  GrayImage input = checker_image(8, 8);
  CompressResult result =
      compress_image(input, std::numeric_limits<double>::infinity());
  CHECK(result.stats.zeroed_coefficients == 64);
  CHECK(result.stats.zeroed_fraction == 1.0);
  for (auto s : result.image.samples) CHECK(s == 0);
  CHECK(result.stats.psnr_db < std::numeric_limits<double>::infinity());
}

TEST_CASE("zeroed fraction grows monotonically with the threshold") {
  GrayImage input = checker_image(24, 24);
  double previous = -1.0;
  for (double epsilon : {0.0, 1.0, 10.0, 100.0, 1000.0, 100000.0}) {
    CompressResult result = compress_image(input, epsilon);
    CHECK(result.stats.zeroed_fraction >= previous);
    previous = result.stats.zeroed_fraction;
  }
  CHECK(previous == 1.0);  // the final threshold exceeds every coefficient
}

TEST_CASE("compress rejects invalid thresholds") {
  GrayImage input = checker_image(4, 4);
  CHECK_THROWS_AS(compress_image(input, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(compress_image(input, std::nan("")), std::invalid_argument);
}

TEST_CASE("psnr matches a hand-computed MSE and is infinite for equal images") {
  GrayImage a, b;
  a.width = b.width = 2;
  a.height = b.height = 1;
  a.samples = {0, 0};
  b.samples = {10, 0};
  // MSE = 100 / 2 = 50.
  CHECK(psnr(a, b) == doctest::Approx(10.0 * std::log10(255.0 * 255.0 / 50.0))
                          .epsilon(1e-12));
  CHECK(std::isinf(psnr(a, a)));
  GrayImage c = a;
  c.width = 1;
  c.samples = {0};
  CHECK_THROWS_AS(psnr(a, c), ShapeError);
}

TEST_CASE("amdahl_speedup reference points") {
  CHECK(std::abs(amdahl_speedup(1.0, 2.0) - 2.0) <= 1e-15);
  CHECK(std::abs(amdahl_speedup(0.0, 10.0) - 1.0) <= 1e-15);
  CHECK(std::abs(amdahl_speedup(0.5, 2.0) - 4.0 / 3.0) <= 1e-15);
}

TEST_CASE("amdahl_speedup rejects out-of-domain arguments") {
  CHECK_THROWS_AS(amdahl_speedup(-0.1, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(amdahl_speedup(1.1, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(amdahl_speedup(0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(amdahl_speedup(0.5, -3.0), std::invalid_argument);
  CHECK_THROWS_AS(amdahl_speedup(std::nan(""), 2.0), std::invalid_argument);
  CHECK_THROWS_AS(amdahl_speedup(0.5, std::nan("")), std::invalid_argument);
}

TEST_CASE("run_bench resolves baselines and counter snapshots") {
  RealTensor x(Shape{32, 32});
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<double>(i % 7);
  Plan2d plan(32, 32);

  std::vector<BenchCase> cases;
  cases.push_back({"fused", {32, 32}, [&] { dct_2d(x, plan); },
                   [&] {
                     StageCounters c;
                     dct_2d(x, plan, {}, &c);
                     return c;
                   },
                   ""});
  cases.push_back({"rowcol", {32, 32}, [&] { dct_2d_rowcol(x, plan); }, nullptr,
                   "fused"});

  auto results = run_bench(cases, 3);
  REQUIRE(results.size() == 2);
  CHECK(results[0].name == "fused");
  CHECK(results[0].runs == 3);
  CHECK(results[0].mean_ms >= 0.0);
  CHECK(results[0].stddev_ms >= 0.0);
  CHECK(results[0].has_counters);
  CHECK(results[0].counters.full_tensor_stages == 3);
  CHECK(results[0].speedup_vs_baseline == 0.0);  // names no baseline
  CHECK(results[1].name == "rowcol");
  CHECK_FALSE(results[1].has_counters);
  CHECK(results[1].speedup_vs_baseline > 0.0);

  std::string table = format_bench_table(results, true);
  CHECK(table.find("fused") != std::string::npos);
  CHECK(table.find("rowcol") != std::string::npos);
  std::string csv = format_bench_csv(results);
  CHECK(csv.find("fused") != std::string::npos);
  CHECK(csv.find(',') != std::string::npos);

  CHECK_THROWS_AS(run_bench(cases, 1), std::invalid_argument);
}

TEST_CASE("run_verify passes clean and is reproducible") {
  VerifyReport report = run_verify();
  CHECK(report.all_passed());
  CHECK(report.entries.size() >= 8);
  std::string rendered = format_verify_report(report);
  CHECK(rendered.find("PASS") != std::string::npos);
  CHECK(rendered.find("FAIL") == std::string::npos);

  VerifyReport again = run_verify();
  CHECK(format_verify_report(again) == rendered);
}

TEST_CASE("run_verify catches an injected twiddle sign error") {
  VerifyOptions options;
  options.corrupt_twiddle = true;
  VerifyReport report = run_verify(options);
  CHECK_FALSE(report.all_passed());
  for (const auto& entry : report.entries) {
    if (entry.name == "postprocess-oracle-agreement")
      CHECK_FALSE(entry.passed);
    else
      CHECK(entry.passed);  // the corruption is local to that suite's plan
  }
}

TEST_CASE("force demo fields vanish for flat density") {
  ForceFields zero = force_demo_fields(RealTensor(Shape{6, 6}));
  for (std::size_t i = 0; i < zero.xi1.size(); ++i) {
    CHECK(zero.xi1[i] == 0.0);
    CHECK(zero.xi2[i] == 0.0);
  }

  RealTensor flat(Shape{5, 8});
  for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = 3.25;
  ForceFields constant = force_demo_fields(flat);
  for (std::size_t i = 0; i < constant.xi1.size(); ++i) {
    CHECK(std::abs(constant.xi1[i]) < 1e-10);
    CHECK(std::abs(constant.xi2[i]) < 1e-10);
  }
}

TEST_CASE("force demo matches a manual spectral composition") {
  const std::size_t n1 = 8, n2 = 8;
  RealTensor density(Shape{n1, n2});
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (std::size_t i = 0; i < density.size(); ++i) density[i] = dist(rng);

  Plan2d plan(n1, n2);
  RealTensor a = dct_2d(density, plan);
  RealTensor a1(Shape{n1, n2}), a2(Shape{n1, n2});
  for (std::size_t k1 = 0; k1 < n1; ++k1)
    for (std::size_t k2 = 0; k2 < n2; ++k2) {
      const double w1 = std::numbers::pi * static_cast<double>(k1) / n1;
      const double w2 = std::numbers::pi * static_cast<double>(k2) / n2;
      const double denom = w1 * w1 + w2 * w2;
      a1(k1, k2) = denom > 0.0 ? a(k1, k2) * w1 / denom : 0.0;
      a2(k1, k2) = denom > 0.0 ? a(k1, k2) * w2 / denom : 0.0;
    }
  RealTensor want1 = idct_idxst_2d_rowcol(a1, plan);
  RealTensor want2 = idxst_idct_2d_rowcol(a2, plan);

  ForceFields got = force_demo_fields(density);
  REQUIRE(got.xi1.dims() == Shape{n1, n2});
  for (std::size_t i = 0; i < want1.size(); ++i) {
    CHECK(got.xi1[i] == doctest::Approx(want1[i]).epsilon(1e-10));
    CHECK(got.xi2[i] == doctest::Approx(want2[i]).epsilon(1e-10));
  }
}

TEST_CASE("force demo validates rank") {
  CHECK_THROWS_AS(force_demo_fields(RealTensor(Shape{4})), ShapeError);
  CHECK_THROWS_AS(force_demo_fields(RealTensor(Shape{2, 2, 2})), ShapeError);
}

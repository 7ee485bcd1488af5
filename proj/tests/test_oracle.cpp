#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sdct/errors.hpp"
#include "sdct/oracle.hpp"
#include "sdct/tensor.hpp"

using namespace sdct;
using oracle::dct_oracle_1d;
using oracle::dct_oracle_1d_counted;
using oracle::dct_oracle_2d;
using oracle::idct_oracle_1d;
using oracle::idct_oracle_1d_counted;
using oracle::idxst_oracle_1d;

namespace {

RealTensor random_real(const Shape& dims, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  RealTensor out(dims);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = dist(rng);
  return out;
}

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("constant input concentrates in the DC bin") {
  RealTensor x(Shape{4}, 1.0);
  RealTensor y = dct_oracle_1d(x);
  CHECK(y[0] == doctest::Approx(4.0).epsilon(1e-14));
  for (std::size_t k = 1; k < 4; ++k) CHECK(std::abs(y[k]) < 1e-13);
}

TEST_CASE("unit impulse spreads as sampled cosines") {
  RealTensor x(Shape{4});
  x[0] = 1.0;
  RealTensor y = dct_oracle_1d(x);
  for (std::size_t k = 0; k < 4; ++k)
    CHECK(y[k] == doctest::Approx(std::cos(kPi * static_cast<double>(k) / 8.0)).epsilon(1e-14));
}

TEST_CASE("inverse oracle of a DC impulse is flat at one half") {
  RealTensor x(Shape{5});
  x[0] = 1.0;
  RealTensor y = idct_oracle_1d(x);
  for (std::size_t k = 0; k < 5; ++k) CHECK(y[k] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("oracle round trip is N/2 times the identity") {
  for (std::size_t n : {1, 2, 3, 7, 12}) {
    RealTensor x = random_real(Shape{n}, 10 + static_cast<std::uint32_t>(n));
    RealTensor back = idct_oracle_1d(dct_oracle_1d(x));
    for (std::size_t i = 0; i < n; ++i)
      CHECK(back[i] == doctest::Approx(0.5 * static_cast<double>(n) * x[i]).epsilon(1e-10));
  }
}

TEST_CASE("2D oracle equals the separable composition of 1D oracles") {
  const std::size_t n1 = 5, n2 = 6;
  RealTensor x = random_real(Shape{n1, n2}, 20);

  // Axis-1 pass then axis-0 pass, both through the 1D oracle.
  RealTensor rows(Shape{n1, n2});
  for (std::size_t i = 0; i < n1; ++i) {
    RealTensor row(Shape{n2});
    for (std::size_t j = 0; j < n2; ++j) row[j] = x(i, j);
    RealTensor t = dct_oracle_1d(row);
    for (std::size_t j = 0; j < n2; ++j) rows(i, j) = t[j];
  }
  RealTensor want(Shape{n1, n2});
  for (std::size_t j = 0; j < n2; ++j) {
    RealTensor col(Shape{n1});
    for (std::size_t i = 0; i < n1; ++i) col[i] = rows(i, j);
    RealTensor t = dct_oracle_1d(col);
    for (std::size_t i = 0; i < n1; ++i) want(i, j) = t[i];
  }

  RealTensor got = dct_oracle_2d(x);
  for (std::size_t i = 0; i < x.size(); ++i)
    CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
}

TEST_CASE("idxst oracle matches its direct sine sum") {
  for (std::size_t n : {1, 2, 3, 8, 11}) {
    RealTensor x = random_real(Shape{n}, 30 + static_cast<std::uint32_t>(n));
    RealTensor got = idxst_oracle_1d(x);
    for (std::size_t k = 0; k < n; ++k) {
      double want = 0.0;
      for (std::size_t m = 1; m < n; ++m)
        want += x[m] * std::sin(kPi / static_cast<double>(n) * static_cast<double>(m) *
                                (static_cast<double>(k) + 0.5));
      CHECK(got[k] == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("idxst never reads x(0)") {
  RealTensor x = random_real(Shape{9}, 40);
  RealTensor y1 = idxst_oracle_1d(x);
  x[0] += 1000.0;
  RealTensor y2 = idxst_oracle_1d(x);
  for (std::size_t k = 0; k < 9; ++k) CHECK(y1[k] == y2[k]);
}

TEST_CASE("oracles accumulate a quadratic number of terms") {
  RealTensor x8 = random_real(Shape{8}, 50);
  RealTensor x16 = random_real(Shape{16}, 51);
  CHECK(dct_oracle_1d_counted(x8).op_count == 64);
  CHECK(dct_oracle_1d_counted(x16).op_count == 256);
  CHECK(idct_oracle_1d_counted(x8).op_count == 64);
  CHECK(idct_oracle_1d_counted(x16).op_count == 256);
}

TEST_CASE("oracles reject wrong ranks") {
  RealTensor matrix(Shape{2, 2}, 1.0);
  CHECK_THROWS_AS(dct_oracle_1d(matrix), ShapeError);
  CHECK_THROWS_AS(idct_oracle_1d(matrix), ShapeError);
  CHECK_THROWS_AS(idxst_oracle_1d(matrix), ShapeError);
  RealTensor vec(Shape{4}, 1.0);
  CHECK_THROWS_AS(dct_oracle_2d(vec), ShapeError);
}

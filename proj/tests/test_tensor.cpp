#include <doctest.h>

#include <vector>

#include "sdct/errors.hpp"
#include "sdct/tensor.hpp"

using namespace sdct;

TEST_CASE("offset computes row-major strides") {
  CHECK(offset({3, 4, 5}, {0, 0, 0}) == 0);
  CHECK(offset({3, 4, 5}, {1, 2, 3}) == 1 * 20 + 2 * 5 + 3);
  CHECK(offset({3, 4, 5}, {2, 3, 4}) == 59);
  CHECK(offset({7}, {6}) == 6);
}

TEST_CASE("offset rejects bad indices") {
  CHECK_THROWS_AS(offset({3, 4}, {3, 0}), BoundsError);
  CHECK_THROWS_AS(offset({3, 4}, {0, 4}), BoundsError);
  CHECK_THROWS_AS(offset({3, 4}, {0}), BoundsError);
  CHECK_THROWS_AS(offset({3, 4}, {0, 0, 0}), BoundsError);
}

TEST_CASE("numel") {
  CHECK(numel({}) == 0);
  CHECK(numel({5}) == 5);
  CHECK(numel({3, 4, 5}) == 60);
}

TEST_CASE("tensor construction validates extents and payload") {
  CHECK_THROWS_AS(RealTensor(Shape{0}), ShapeError);
  CHECK_THROWS_AS(RealTensor(Shape{2, 0, 3}), ShapeError);
  CHECK_THROWS_AS(RealTensor(Shape{2, 3}, std::vector<double>(5)), ShapeError);
  RealTensor t(Shape{2, 3}, 1.5);
  CHECK(t.size() == 6);
  CHECK(t.rank() == 2);
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(t[i] == 1.5);
}

TEST_CASE("checked and unchecked access agree") {
  RealTensor t(Shape{2, 3});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) t(i, j) = static_cast<double>(10 * i + j);
  CHECK(t.at({1, 2}) == 12.0);
  CHECK(t[5] == 12.0);
  CHECK_THROWS_AS(t.at({2, 0}), BoundsError);
}

TEST_CASE("for_each_index walks row-major") {
  std::vector<Index> seen;
  for_each_index({2, 2}, [&](const Index& idx) { seen.push_back(idx); });
  REQUIRE(seen.size() == 4);
  CHECK(seen[0] == Index{0, 0});
  CHECK(seen[1] == Index{0, 1});
  CHECK(seen[2] == Index{1, 0});
  CHECK(seen[3] == Index{1, 1});
}

TEST_CASE("gather then scatter with the same bijection is the identity") {
  RealTensor x(Shape{6});
  for (std::size_t i = 0; i < 6; ++i) x[i] = static_cast<double>(i) + 1.0;
  IndexMap reverse{Shape{6}, Shape{6}, [](const Index& idx) { return Index{5 - idx[0]}; }};
  RealTensor gathered = gather_permute(x, reverse);
  for (std::size_t i = 0; i < 6; ++i) CHECK(gathered[i] == x[5 - i]);
  RealTensor back = scatter_permute(gathered, reverse);
  for (std::size_t i = 0; i < 6; ++i) CHECK(back[i] == x[i]);
}

TEST_CASE("transpose_2d") {
  RealTensor x(Shape{2, 3});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) x(i, j) = static_cast<double>(10 * i + j);
  RealTensor t = transpose_2d(x);
  REQUIRE(t.dims() == Shape{3, 2});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(t(j, i) == x(i, j));
}

TEST_CASE("half spectrum stores floor(N/2)+1 entries on the last axis") {
  HalfSpectrum even(Shape{4, 8});
  CHECK(even.logical_dims == Shape{4, 8});
  CHECK(even.data.dims() == Shape{4, 5});
  CHECK(even.stored_last() == 5);
  HalfSpectrum odd(Shape{7});
  CHECK(odd.data.dims() == Shape{4});
  CHECK_THROWS_AS(HalfSpectrum(Shape{}), ShapeError);
}

TEST_CASE("shape_to_string") {
  CHECK(shape_to_string({3, 4, 5}) == "3x4x5");
  CHECK(shape_to_string({7}) == "7");
}

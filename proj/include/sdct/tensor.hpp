/// @file tensor.hpp
/// @brief Dense row-major tensors (rank 1..4) plus the permutation primitives
///        used by the transform pre/postprocessing stages.
#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "sdct/errors.hpp"

namespace sdct {

using Shape = std::vector<std::size_t>;
using Index = std::vector<std::size_t>;

/// Row-major linear offset of @p index inside a tensor of extents @p dims.
/// Throws BoundsError when the index (or its rank) does not fit.
std::size_t offset(const Shape& dims, const Index& index);

/// Number of elements covered by @p dims (empty shape -> 0 elements).
inline std::size_t numel(const Shape& dims) {
  if (dims.empty()) return 0;
  std::size_t n = 1;
  for (std::size_t d : dims) n *= d;
  return n;
}

template <typename T>
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape dims, T fill = T{})
      : dims_(std::move(dims)), data_(numel(dims_), fill) {
    for (std::size_t d : dims_)
      if (d == 0) throw ShapeError("tensor extents must be positive");
  }
  Tensor(Shape dims, std::vector<T> data) : dims_(std::move(dims)), data_(std::move(data)) {
    if (data_.size() != numel(dims_))
      throw ShapeError("tensor payload size does not match extents");
  }

  const Shape& dims() const { return dims_; }
  std::size_t rank() const { return dims_.size(); }
  std::size_t size() const { return data_.size(); }
  std::size_t dim(std::size_t axis) const { return dims_.at(axis); }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  std::vector<T>& storage() { return data_; }
  const std::vector<T>& storage() const { return data_; }

  /// Checked multi-index access.
  T& at(const Index& index) { return data_[offset(dims_, index)]; }
  const T& at(const Index& index) const { return data_[offset(dims_, index)]; }

  /// Unchecked flat access (kernels index arithmetic directly).
  T& operator[](std::size_t flat) { return data_[flat]; }
  const T& operator[](std::size_t flat) const { return data_[flat]; }

  /// Unchecked 2-D access, valid only for rank-2 tensors.
  T& operator()(std::size_t i, std::size_t j) { return data_[i * dims_[1] + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * dims_[1] + j]; }

  bool same_shape(const Tensor& other) const { return dims_ == other.dims_; }

 private:
  Shape dims_;
  std::vector<T> data_;
};

using RealTensor = Tensor<double>;
using ComplexTensor = Tensor<std::complex<double>>;

/// One-sided spectrum of a real tensor: the last logical axis of extent N is
/// stored with floor(N/2)+1 complex entries, the remaining axes in full.
struct HalfSpectrum {
  Shape logical_dims;   // extents of the real-space tensor
  ComplexTensor data;   // stored extents: logical_dims with last axis halved

  HalfSpectrum() = default;
  explicit HalfSpectrum(Shape logical) : logical_dims(std::move(logical)) {
    Shape stored = logical_dims;
    if (stored.empty()) throw ShapeError("half spectrum needs rank >= 1");
    stored.back() = stored.back() / 2 + 1;
    data = ComplexTensor(stored);
  }

  std::size_t stored_last() const { return data.dims().back(); }
};

/// A bijective index mapping between two shapes of equal element count.
/// The same map object serves both transfer directions:
///  - gather_permute evaluates rule(destination index) -> source index,
///  - scatter_permute evaluates rule(source index) -> destination index.
struct IndexMap {
  Shape source_shape;
  Shape dest_shape;
  std::function<Index(const Index&)> rule;
};

/// Visit every multi-index of @p dims in row-major order.
template <typename Fn>
void for_each_index(const Shape& dims, Fn&& fn) {
  Index idx(dims.size(), 0);
  const std::size_t total = numel(dims);
  for (std::size_t flat = 0; flat < total; ++flat) {
    fn(idx);
    for (std::size_t axis = dims.size(); axis-- > 0;) {
      if (++idx[axis] < dims[axis]) break;
      idx[axis] = 0;
    }
  }
}

/// Out-of-place gather: out[i] = src[map.rule(i)] for every destination index i.
RealTensor gather_permute(const RealTensor& src, const IndexMap& map);
ComplexTensor gather_permute(const ComplexTensor& src, const IndexMap& map);

/// Out-of-place scatter: out[map.rule(i)] = src[i] for every source index i.
RealTensor scatter_permute(const RealTensor& src, const IndexMap& map);
ComplexTensor scatter_permute(const ComplexTensor& src, const IndexMap& map);

/// Out-of-place transpose of a rank-2 tensor.
RealTensor transpose_2d(const RealTensor& x);
ComplexTensor transpose_2d(const ComplexTensor& x);

/// Render a shape like "3x4x5" for error messages.
std::string shape_to_string(const Shape& dims);

}  // namespace sdct

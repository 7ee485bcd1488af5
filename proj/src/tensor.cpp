#include "sdct/tensor.hpp"

#include <sstream>

namespace sdct {

std::size_t offset(const Shape& dims, const Index& index) {
  if (index.size() != dims.size())
    throw BoundsError("index rank " + std::to_string(index.size()) +
                      " does not match tensor rank " + std::to_string(dims.size()));
  std::size_t flat = 0;
  for (std::size_t axis = 0; axis < dims.size(); ++axis) {
    if (index[axis] >= dims[axis])
      throw BoundsError("index " + std::to_string(index[axis]) + " out of range for axis " +
                        std::to_string(axis) + " of extent " + std::to_string(dims[axis]));
    flat = flat * dims[axis] + index[axis];
  }
  return flat;
}

namespace {

template <typename T>
Tensor<T> gather_impl(const Tensor<T>& src, const IndexMap& map) {
  if (src.dims() != map.source_shape)
    throw ShapeError("gather_permute: source tensor is " + shape_to_string(src.dims()) +
                     ", map expects " + shape_to_string(map.source_shape));
  if (numel(map.source_shape) != numel(map.dest_shape))
    throw ShapeError("gather_permute: map is not a bijection between shapes");
  Tensor<T> out(map.dest_shape);
  std::size_t flat = 0;
  for_each_index(map.dest_shape, [&](const Index& dst) {
    out[flat++] = src[offset(map.source_shape, map.rule(dst))];
  });
  return out;
}

template <typename T>
Tensor<T> scatter_impl(const Tensor<T>& src, const IndexMap& map) {
  if (src.dims() != map.source_shape)
    throw ShapeError("scatter_permute: source tensor is " + shape_to_string(src.dims()) +
                     ", map expects " + shape_to_string(map.source_shape));
  if (numel(map.source_shape) != numel(map.dest_shape))
    throw ShapeError("scatter_permute: map is not a bijection between shapes");
  Tensor<T> out(map.dest_shape);
  std::size_t flat = 0;
  for_each_index(map.source_shape, [&](const Index& srcIdx) {
    out[offset(map.dest_shape, map.rule(srcIdx))] = src[flat++];
  });
  return out;
}

template <typename T>
Tensor<T> transpose_impl(const Tensor<T>& x) {
  if (x.rank() != 2) throw ShapeError("transpose_2d expects a rank-2 tensor");
  const std::size_t rows = x.dims()[0], cols = x.dims()[1];
  Tensor<T> out(Shape{cols, rows});
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(j, i) = x(i, j);
  return out;
}

}  // namespace

RealTensor gather_permute(const RealTensor& src, const IndexMap& map) { return gather_impl(src, map); }
ComplexTensor gather_permute(const ComplexTensor& src, const IndexMap& map) { return gather_impl(src, map); }
RealTensor scatter_permute(const RealTensor& src, const IndexMap& map) { return scatter_impl(src, map); }
ComplexTensor scatter_permute(const ComplexTensor& src, const IndexMap& map) { return scatter_impl(src, map); }
RealTensor transpose_2d(const RealTensor& x) { return transpose_impl(x); }
ComplexTensor transpose_2d(const ComplexTensor& x) { return transpose_impl(x); }

std::string shape_to_string(const Shape& dims) {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) os << 'x';
    os << dims[i];
  }
  return os.str();
}

}  // namespace sdct

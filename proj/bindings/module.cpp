// Python bindings: numpy arrays in, numpy arrays out. Arrays are copied at
// the boundary (C-contiguous float64 enforced by pybind11), so the python
// surface stays value-semantic like the C++ one.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sdct/amdahl.hpp"
#include "sdct/compress.hpp"
#include "sdct/dct1d.hpp"
#include "sdct/dct2d.hpp"
#include "sdct/errors.hpp"
#include "sdct/force.hpp"
#include "sdct/oracle.hpp"
#include "sdct/transforms_ext.hpp"

namespace py = pybind11;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

sdct::RealTensor to_tensor(const Array& array) {
  const py::buffer_info info = array.request();
  if (info.ndim < 1 || info.ndim > 4)
    throw sdct::ShapeError("expected a rank 1..4 array, got rank " + std::to_string(info.ndim));
  sdct::Shape dims;
  for (py::ssize_t d : info.shape) dims.push_back(static_cast<std::size_t>(d));
  const double* src = static_cast<const double*>(info.ptr);
  return sdct::RealTensor(std::move(dims),
                          std::vector<double>(src, src + static_cast<std::size_t>(info.size)));
}

Array to_array(const sdct::RealTensor& tensor) {
  std::vector<py::ssize_t> shape(tensor.dims().begin(), tensor.dims().end());
  Array out(shape);
  std::copy(tensor.data(), tensor.data() + tensor.size(),
            static_cast<double*>(out.request().ptr));
  return out;
}

sdct::ExecConfig config(unsigned threads) {
  sdct::ExecConfig cfg;
  cfg.parallelism_degree = threads;
  return cfg;
}

sdct::Dct1dVariant variant_from_name(const std::string& name) {
  if (name == "4n") return sdct::Dct1dVariant::FourN;
  if (name == "2n-mirrored") return sdct::Dct1dVariant::MirroredTwoN;
  if (name == "2n-padded") return sdct::Dct1dVariant::PaddedTwoN;
  if (name == "n") return sdct::Dct1dVariant::NPoint;
  throw std::invalid_argument("unknown variant '" + name +
                              "' (expected '4n', '2n-mirrored', '2n-padded' or 'n')");
}

}  // namespace

PYBIND11_MODULE(_sdct, m) {
  m.doc() = "Multi-dimensional DCT/IDCT and sine-cosine composites over a real-input FFT";

  py::register_exception<sdct::ShapeError>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<sdct::FormatError>(m, "FormatError", PyExc_ValueError);

  m.def(
      "dct_1d",
      [](const Array& x, const std::string& variant, unsigned threads) {
        return to_array(sdct::dct_1d(to_tensor(x), variant_from_name(variant), config(threads)));
      },
      py::arg("x"), py::arg("variant") = "n", py::arg("threads") = 0,
      "Forward 1D DCT, y(k) = sum_n x(n) cos(pi/N (n+1/2) k); variant selects the FFT scheme");
  m.def(
      "idct_1d",
      [](const Array& x, unsigned threads) {
        return to_array(sdct::idct_1d(to_tensor(x), config(threads)));
      },
      py::arg("x"), py::arg("threads") = 0,
      "Inverse 1D DCT (unnormalized; idct_1d(dct_1d(x)) == N/2 * x)");
  m.def(
      "idxst_1d",
      [](const Array& x, unsigned threads) {
        return to_array(sdct::idxst_1d(to_tensor(x), config(threads)));
      },
      py::arg("x"), py::arg("threads") = 0,
      "Inverse 1D DST variant: y(k) = sum_{n>=1} x(n) sin(pi/N n (k+1/2))");

  m.def(
      "dct_2d",
      [](const Array& x, unsigned threads) {
        return to_array(sdct::dct_2d(to_tensor(x), config(threads)));
      },
      py::arg("x"), py::arg("threads") = 0, "Fused three-stage forward 2D DCT");
  m.def(
      "dct_2d_rowcol",
      [](const Array& x, unsigned threads) {
        sdct::RealTensor t = to_tensor(x);
        if (t.rank() != 2) throw sdct::ShapeError("dct_2d_rowcol expects a rank-2 array");
        sdct::Plan2d plan(t.dim(0), t.dim(1));
        return to_array(sdct::dct_2d_rowcol(t, plan, config(threads)));
      },
      py::arg("x"), py::arg("threads") = 0, "Row-column 2D DCT baseline (same output as dct_2d)");
  m.def(
      "idct_2d",
      [](const Array& x, unsigned threads) {
        return to_array(sdct::idct_2d(to_tensor(x), config(threads)));
      },
      py::arg("x"), py::arg("threads") = 0,
      "Fused inverse 2D DCT (idct_2d(dct_2d(x)) == N1*N2/4 * x)");
  m.def(
      "idct_idxst_2d",
      [](const Array& x, unsigned threads) {
        sdct::RealTensor t = to_tensor(x);
        if (t.rank() != 2) throw sdct::ShapeError("idct_idxst_2d expects a rank-2 array");
        sdct::Plan2d plan(t.dim(0), t.dim(1));
        return to_array(sdct::idct_idxst_2d(t, plan, config(threads)));
      },
      py::arg("x"), py::arg("threads") = 0, "IDCT along axis 0, IDXST along axis 1 (fused)");
  m.def(
      "idxst_idct_2d",
      [](const Array& x, unsigned threads) {
        sdct::RealTensor t = to_tensor(x);
        if (t.rank() != 2) throw sdct::ShapeError("idxst_idct_2d expects a rank-2 array");
        sdct::Plan2d plan(t.dim(0), t.dim(1));
        return to_array(sdct::idxst_idct_2d(t, plan, config(threads)));
      },
      py::arg("x"), py::arg("threads") = 0, "IDXST along axis 0, IDCT along axis 1 (fused)");

  m.def(
      "dct_3d",
      [](const Array& x, unsigned threads) {
        return to_array(sdct::dct_3d(to_tensor(x), config(threads)));
      },
      py::arg("x"), py::arg("threads") = 0, "Fused three-stage forward 3D DCT");
  m.def(
      "idct_3d",
      [](const Array& x, unsigned threads) {
        return to_array(sdct::idct_3d(to_tensor(x), config(threads)));
      },
      py::arg("x"), py::arg("threads") = 0,
      "Fused inverse 3D DCT (idct_3d(dct_3d(x)) == N1*N2*N3/8 * x)");
  m.def(
      "dct_4d",
      [](const Array& x, unsigned threads) {
        return to_array(sdct::dct_nd_factorized(to_tensor(x), config(threads)));
      },
      py::arg("x"), py::arg("threads") = 0,
      "Rank-4 DCT as two rounds of fused 2D transforms over axis pairs (0,1) and (2,3)");

  m.def(
      "dct_oracle_1d",
      [](const Array& x) { return to_array(sdct::oracle::dct_oracle_1d(to_tensor(x))); },
      py::arg("x"), "Direct quadratic cosine-sum reference");
  m.def(
      "dct_oracle_2d",
      [](const Array& x) { return to_array(sdct::oracle::dct_oracle_2d(to_tensor(x))); },
      py::arg("x"), "Direct quadruple-sum 2D reference");

  m.def("amdahl_speedup", &sdct::amdahl_speedup, py::arg("p"), py::arg("s"),
        "1 / ((1 - p) + p / s); raises ValueError outside 0 <= p <= 1, s > 0");

  m.def(
      "force_demo_fields",
      [](const Array& density, unsigned threads) {
        const sdct::ForceFields fields =
            sdct::force_demo_fields(to_tensor(density), config(threads));
        return py::make_tuple(to_array(fields.xi1), to_array(fields.xi2));
      },
      py::arg("density"), py::arg("threads") = 0,
      "Inverse-Laplacian-weighted gradient fields (xi1, xi2) of a rank-2 density grid");
}

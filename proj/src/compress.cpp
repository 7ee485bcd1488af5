#include "sdct/compress.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sdct/dct2d.hpp"

namespace sdct {

double psnr(const GrayImage& a, const GrayImage& b) {
  if (a.width != b.width || a.height != b.height)
    throw ShapeError("psnr: image dimensions differ");
  double sq = 0.0;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    const double d = static_cast<double>(a.samples[i]) - static_cast<double>(b.samples[i]);
    sq += d * d;
  }
  if (sq == 0.0) return std::numeric_limits<double>::infinity();
  const double mse = sq / static_cast<double>(a.samples.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

CompressResult compress_image(const GrayImage& input, double epsilon, const ExecConfig& cfg) {
  if (std::isnan(epsilon) || epsilon < 0.0)
    throw std::invalid_argument("compress: epsilon must be >= 0");
  if (input.samples.size() != input.width * input.height)
    throw ShapeError("compress: sample count does not match dimensions");

  const RealTensor a = image_to_tensor(input);
  Plan2d plan(a.dim(0), a.dim(1));
  RealTensor b = dct_2d(a, plan, cfg);

  CompressStats stats;
  stats.total_coefficients = b.size();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (std::abs(b[i]) < epsilon) {
      b[i] = 0.0;
      ++stats.zeroed_coefficients;
    }
  }
  stats.zeroed_fraction =
      static_cast<double>(stats.zeroed_coefficients) / static_cast<double>(b.size());

  RealTensor d = idct_2d(b, plan, cfg);
  const double norm = 4.0 / static_cast<double>(a.dim(0) * a.dim(1));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] *= norm;

  CompressResult result;
  result.image = tensor_to_image(d);
  stats.psnr_db = psnr(input, result.image);
  result.stats = stats;
  return result;
}

}  // namespace sdct

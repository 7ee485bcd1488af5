/// @file compress.hpp
/// @brief Whole-image frequency-domain compression: forward 2D DCT,
///        magnitude thresholding, inverse 2D DCT with the 4/(N1 N2)
///        reconstruction normalization (the transforms themselves stay
///        unnormalized). Not tiled — the threshold acts on the full spectrum.
#pragma once

#include "sdct/exec.hpp"
#include "sdct/io.hpp"
#include "sdct/tensor.hpp"

namespace sdct {

struct CompressStats {
  std::size_t total_coefficients = 0;
  std::size_t zeroed_coefficients = 0;
  double zeroed_fraction = 0.0;
  /// Peak signal-to-noise ratio between input and reconstruction in dB;
  /// +infinity when they agree exactly (always the case at epsilon = 0).
  double psnr_db = 0.0;
};

struct CompressResult {
  GrayImage image;
  CompressStats stats;
};

/// Zeroes every coefficient with |B(k1,k2)| < epsilon (raw unnormalized
/// magnitudes), reconstructs, rounds and clamps to 8-bit. epsilon may be
/// +infinity (drop everything); negative epsilon throws invalid_argument.
CompressResult compress_image(const GrayImage& input, double epsilon,
                              const ExecConfig& cfg = {});

/// PSNR in dB over 8-bit samples; +infinity when images are identical.
double psnr(const GrayImage& a, const GrayImage& b);

}  // namespace sdct

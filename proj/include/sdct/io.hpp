/// @file io.hpp
/// @brief File containers used by the CLI: the DCTB binary tensor format and
///        8-bit grayscale PGM images (P5 binary and P2 ASCII).
///
/// DCTB layout: magic "DCTB", one version byte (= 1), one rank byte, then
/// rank little-endian 64-bit extents followed by the row-major payload of
/// little-endian IEEE-754 doubles. Any structural defect — wrong magic,
/// unsupported version, zero or oversized rank, truncated or oversized
/// payload — raises FormatError.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdct/tensor.hpp"

namespace sdct {

struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> samples;  // row-major, height * width entries
};

RealTensor read_dctb(const std::string& path);
void write_dctb(const std::string& path, const RealTensor& tensor);

/// Accepts P5 (binary) and P2 (ASCII) with maxval 255; anything else is a
/// FormatError. Comments (#...) are honored in the header.
GrayImage read_pgm(const std::string& path);
/// Always writes P5 with maxval 255.
void write_pgm(const std::string& path, const GrayImage& image);

/// height x width tensor of sample values (0..255, exact).
RealTensor image_to_tensor(const GrayImage& image);
/// Rounds to nearest and clamps to [0, 255].
GrayImage tensor_to_image(const RealTensor& tensor);

}  // namespace sdct

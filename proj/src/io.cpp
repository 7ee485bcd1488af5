#include "sdct/io.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace sdct {

namespace {

constexpr char kMagic[4] = {'D', 'C', 'T', 'B'};
constexpr std::uint8_t kVersion = 1;
constexpr std::size_t kMaxRank = 4;

void put_u64le(std::ostream& os, std::uint64_t v) {
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(bytes, 8);
}

std::uint64_t take_u64le(std::istream& is, const char* what) {
  unsigned char bytes[8];
  if (!is.read(reinterpret_cast<char*>(bytes), 8))
    throw FormatError(std::string("DCTB: truncated while reading ") + what);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | bytes[i];
  return v;
}

void put_f64le(std::ostream& os, double d) { put_u64le(os, std::bit_cast<std::uint64_t>(d)); }

double take_f64le(std::istream& is) {
  return std::bit_cast<double>(take_u64le(is, "payload"));
}

// Skips PGM whitespace and #-comments, then parses one unsigned decimal.
std::size_t pgm_number(std::istream& is, const char* what) {
  int c = is.get();
  while (c != EOF && (std::isspace(c) || c == '#')) {
    if (c == '#')
      while (c != EOF && c != '\n') c = is.get();
    c = is.get();
  }
  if (c == EOF || !std::isdigit(c))
    throw FormatError(std::string("PGM: expected ") + what + " in header");
  std::size_t value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + static_cast<std::size_t>(c - '0');
    c = is.get();
  }
  if (c != EOF) is.unget();
  return value;
}

}  // namespace

RealTensor read_dctb(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("DCTB: cannot open " + path);

  char magic[4];
  if (!is.read(magic, 4) || std::string_view(magic, 4) != std::string_view(kMagic, 4))
    throw FormatError("DCTB: bad magic in " + path);
  const int version = is.get();
  if (version == EOF) throw FormatError("DCTB: truncated header in " + path);
  if (version != kVersion)
    throw FormatError("DCTB: unsupported version " + std::to_string(version) + " in " + path);
  const int rank = is.get();
  if (rank == EOF) throw FormatError("DCTB: truncated header in " + path);
  if (rank < 1 || static_cast<std::size_t>(rank) > kMaxRank)
    throw FormatError("DCTB: rank " + std::to_string(rank) + " outside 1..4 in " + path);

  Shape dims(static_cast<std::size_t>(rank));
  std::size_t count = 1;
  for (auto& d : dims) {
    const std::uint64_t extent = take_u64le(is, "extents");
    if (extent == 0) throw FormatError("DCTB: zero extent in " + path);
    if (extent > std::numeric_limits<std::size_t>::max() / count)
      throw FormatError("DCTB: extents overflow in " + path);
    d = static_cast<std::size_t>(extent);
    count *= d;
  }

  std::vector<double> payload(count);
  for (double& v : payload) v = take_f64le(is);
  // Anything after the payload means the dims lied about the size.
  if (is.peek() != EOF) throw FormatError("DCTB: trailing bytes after payload in " + path);
  return RealTensor(std::move(dims), std::move(payload));
}

void write_dctb(const std::string& path, const RealTensor& tensor) {
  if (tensor.rank() < 1 || tensor.rank() > kMaxRank)
    throw ShapeError("DCTB files cover rank 1..4, got rank " + std::to_string(tensor.rank()));
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw FormatError("DCTB: cannot open " + path + " for writing");
  os.write(kMagic, 4);
  os.put(static_cast<char>(kVersion));
  os.put(static_cast<char>(tensor.rank()));
  for (std::size_t d : tensor.dims()) put_u64le(os, d);
  for (std::size_t i = 0; i < tensor.size(); ++i) put_f64le(os, tensor[i]);
  if (!os) throw FormatError("DCTB: write failed for " + path);
}

GrayImage read_pgm(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("PGM: cannot open " + path);

  char p = 0, kind = 0;
  is.get(p);
  is.get(kind);
  if (!is || p != 'P' || (kind != '2' && kind != '5'))
    throw FormatError("PGM: not a P2/P5 file: " + path);

  GrayImage image;
  image.width = pgm_number(is, "width");
  image.height = pgm_number(is, "height");
  const std::size_t maxval = pgm_number(is, "maxval");
  if (image.width == 0 || image.height == 0)
    throw FormatError("PGM: zero dimensions in " + path);
  if (maxval != 255)
    throw FormatError("PGM: only maxval 255 is supported, got " + std::to_string(maxval));

  const std::size_t count = image.width * image.height;
  image.samples.resize(count);
  if (kind == '5') {
    // Exactly one whitespace byte separates the header from binary samples.
    is.get();
    if (!is.read(reinterpret_cast<char*>(image.samples.data()),
                 static_cast<std::streamsize>(count)))
      throw FormatError("PGM: truncated P5 payload in " + path);
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t v = pgm_number(is, "sample");
      if (v > 255) throw FormatError("PGM: sample out of range in " + path);
      image.samples[i] = static_cast<std::uint8_t>(v);
    }
  }
  return image;
}

void write_pgm(const std::string& path, const GrayImage& image) {
  if (image.samples.size() != image.width * image.height)
    throw ShapeError("PGM: sample count does not match dimensions");
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw FormatError("PGM: cannot open " + path + " for writing");
  os << "P5\n" << image.width << " " << image.height << "\n255\n";
  os.write(reinterpret_cast<const char*>(image.samples.data()),
           static_cast<std::streamsize>(image.samples.size()));
  if (!os) throw FormatError("PGM: write failed for " + path);
}

RealTensor image_to_tensor(const GrayImage& image) {
  RealTensor out(Shape{image.height, image.width});
  for (std::size_t i = 0; i < image.samples.size(); ++i)
    out[i] = static_cast<double>(image.samples[i]);
  return out;
}

GrayImage tensor_to_image(const RealTensor& tensor) {
  if (tensor.rank() != 2)
    throw ShapeError("tensor_to_image expects a rank-2 tensor, got " +
                     shape_to_string(tensor.dims()));
  GrayImage image;
  image.height = tensor.dim(0);
  image.width = tensor.dim(1);
  image.samples.resize(tensor.size());
  for (std::size_t i = 0; i < tensor.size(); ++i) {
    const double v = std::round(tensor[i]);
    image.samples[i] = static_cast<std::uint8_t>(v < 0.0 ? 0.0 : (v > 255.0 ? 255.0 : v));
  }
  return image;
}

}  // namespace sdct

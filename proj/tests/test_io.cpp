#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <unistd.h>
#include <vector>

#include "sdct/errors.hpp"
#include "sdct/io.hpp"
#include "sdct/tensor.hpp"

using namespace sdct;

namespace {

// Scratch file that cleans up after itself.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name)
      : path((std::filesystem::temp_directory_path() /
              ("sdct_io_" + std::to_string(::getpid()) + "_" + name))
                 .string()) {}
  ~TempFile() { std::remove(path.c_str()); }
};

void write_bytes(const std::string& path, const std::vector<unsigned char>& bytes) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  os.write(reinterpret_cast<const char*>(bytes.data()),
           static_cast<std::streamsize>(bytes.size()));
}

std::vector<unsigned char> dctb_header(unsigned char version, unsigned char rank,
                                       const std::vector<std::uint64_t>& dims) {
  std::vector<unsigned char> bytes{'D', 'C', 'T', 'B', version, rank};
  for (std::uint64_t d : dims)
    for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<unsigned char>((d >> (8 * i)) & 0xff));
  return bytes;
}

void append_f64(std::vector<unsigned char>& bytes, double v) {
  std::uint64_t u;
  static_assert(sizeof(u) == sizeof(v));
  std::memcpy(&u, &v, 8);
  for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<unsigned char>((u >> (8 * i)) & 0xff));
}

}  // namespace

TEST_CASE("DCTB round trips every supported rank exactly") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-100.0, 100.0);
  for (Shape dims : {Shape{5}, Shape{3, 4}, Shape{2, 3, 4}, Shape{2, 2, 2, 3}}) {
    RealTensor x(dims);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = dist(rng);
    TempFile file("roundtrip.dctb");
    write_dctb(file.path, x);
    RealTensor back = read_dctb(file.path);
    REQUIRE(back.dims() == dims);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(back[i] == x[i]);
  }
}

TEST_CASE("DCTB rejects structural defects") {
  TempFile file("bad.dctb");

  SUBCASE("bad magic") {
    auto bytes = dctb_header(1, 1, {1});
    bytes[0] = 'X';
    append_f64(bytes, 1.0);
    write_bytes(file.path, bytes);
    CHECK_THROWS_AS(read_dctb(file.path), FormatError);
  }
  SUBCASE("unsupported version") {
    auto bytes = dctb_header(2, 1, {1});
    append_f64(bytes, 1.0);
    write_bytes(file.path, bytes);
    CHECK_THROWS_AS(read_dctb(file.path), FormatError);
  }
  SUBCASE("rank zero") {
    write_bytes(file.path, dctb_header(1, 0, {}));
    CHECK_THROWS_AS(read_dctb(file.path), FormatError);
  }
  SUBCASE("rank five") {
    write_bytes(file.path, dctb_header(1, 5, {1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(read_dctb(file.path), FormatError);
  }
  SUBCASE("zero extent") {
    write_bytes(file.path, dctb_header(1, 2, {3, 0}));
    CHECK_THROWS_AS(read_dctb(file.path), FormatError);
  }
  SUBCASE("truncated payload") {
    auto bytes = dctb_header(1, 1, {3});
    append_f64(bytes, 1.0);
    write_bytes(file.path, bytes);
    CHECK_THROWS_AS(read_dctb(file.path), FormatError);
  }
  SUBCASE("trailing bytes") {
    auto bytes = dctb_header(1, 1, {1});
    append_f64(bytes, 1.0);
    bytes.push_back(0);
    write_bytes(file.path, bytes);
    CHECK_THROWS_AS(read_dctb(file.path), FormatError);
  }
  SUBCASE("missing file") { CHECK_THROWS_AS(read_dctb(file.path + ".nope"), FormatError); }
  SUBCASE("extent overflow") {
    write_bytes(file.path, dctb_header(1, 2, {0xffffffffffffffffull, 0xffffffffffffffffull}));
    CHECK_THROWS_AS(read_dctb(file.path), FormatError);
  }
}

TEST_CASE("write_dctb refuses unsupported ranks at the API boundary") {
  TempFile file("rank.dctb");
  CHECK_THROWS_AS(write_dctb(file.path, RealTensor{}), ShapeError);
}

TEST_CASE("PGM P5 round trip") {
  GrayImage image;
  image.width = 4;
  image.height = 3;
  image.samples = {0, 17, 34, 51, 68, 85, 102, 119, 136, 153, 170, 255};
  TempFile file("img.pgm");
  write_pgm(file.path, image);
  GrayImage back = read_pgm(file.path);
  CHECK(back.width == 4);
  CHECK(back.height == 3);
  CHECK(back.samples == image.samples);
}

TEST_CASE("PGM P2 parsing honors comments and whitespace") {
  TempFile file("ascii.pgm");
  std::ofstream os(file.path);
  os << "P2\n# a comment line\n3 2\n# even between header fields\n255\n"
     << "0 10 20\n30 40 50\n";
  os.close();
  GrayImage image = read_pgm(file.path);
  CHECK(image.width == 3);
  CHECK(image.height == 2);
  CHECK(image.samples == std::vector<std::uint8_t>{0, 10, 20, 30, 40, 50});
}

TEST_CASE("PGM rejects malformed inputs") {
  TempFile file("bad.pgm");
  SUBCASE("wrong magic") {
    std::ofstream(file.path) << "P3\n1 1\n255\n0 0 0\n";
    CHECK_THROWS_AS(read_pgm(file.path), FormatError);
  }
  SUBCASE("unsupported maxval") {
    std::ofstream(file.path) << "P2\n1 1\n65535\n0\n";
    CHECK_THROWS_AS(read_pgm(file.path), FormatError);
  }
  SUBCASE("sample out of range") {
    std::ofstream(file.path) << "P2\n1 1\n255\n300\n";
    CHECK_THROWS_AS(read_pgm(file.path), FormatError);
  }
  SUBCASE("truncated binary payload") {
    std::ofstream(file.path, std::ios::binary) << "P5\n2 2\n255\n\x01\x02";
    CHECK_THROWS_AS(read_pgm(file.path), FormatError);
  }
  SUBCASE("zero dimensions") {
    std::ofstream(file.path) << "P2\n0 2\n255\n";
    CHECK_THROWS_AS(read_pgm(file.path), FormatError);
  }
}

TEST_CASE("image/tensor conversions round, clamp and preserve layout") {
  GrayImage image;
  image.width = 2;
  image.height = 3;
  image.samples = {1, 2, 3, 4, 5, 6};
  RealTensor t = image_to_tensor(image);
  REQUIRE(t.dims() == Shape{3, 2});  // height x width
  CHECK(t(0, 1) == 2.0);
  CHECK(t(2, 0) == 5.0);

  RealTensor vals(Shape{1, 5});
  vals[0] = -7.2;
  vals[1] = 0.4;
  vals[2] = 127.5;
  vals[3] = 254.6;
  vals[4] = 300.0;
  GrayImage out = tensor_to_image(vals);
  CHECK(out.samples == std::vector<std::uint8_t>{0, 0, 128, 255, 255});

  CHECK_THROWS_AS(tensor_to_image(RealTensor(Shape{4})), ShapeError);
}

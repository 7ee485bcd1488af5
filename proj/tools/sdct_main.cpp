// sdct — command-line front end for the transform library.
//
// Subcommands: transform, bench, compress, force-demo, amdahl, verify.
// Exit codes: 0 success, 1 verification (or unexpected) failure, 2 usage
// error, 3 malformed input file.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdct/amdahl.hpp"
#include "sdct/bench.hpp"
#include "sdct/compress.hpp"
#include "sdct/dct1d.hpp"
#include "sdct/dct2d.hpp"
#include "sdct/errors.hpp"
#include "sdct/force.hpp"
#include "sdct/io.hpp"
#include "sdct/transforms_ext.hpp"
#include "sdct/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;

/// Usage-level problem detected after argument parsing (wrong rank, bad
/// parameter range); distinct from FormatError so the exit codes differ.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct TransformArgs {
  std::string input;
  std::string output;
  std::string kind;
  std::string algo = "n";
  bool normalize = false;
  unsigned threads = 0;
};

sdct::Dct1dVariant parse_variant(const std::string& algo) {
  if (algo == "4n") return sdct::Dct1dVariant::FourN;
  if (algo == "2n-mirrored") return sdct::Dct1dVariant::MirroredTwoN;
  if (algo == "2n-padded") return sdct::Dct1dVariant::PaddedTwoN;
  if (algo == "n") return sdct::Dct1dVariant::NPoint;
  throw UsageError("unknown --algo '" + algo + "' (expected 4n, 2n-mirrored, 2n-padded or n)");
}

void require_rank(const sdct::RealTensor& x, std::size_t rank, const std::string& kind) {
  if (x.rank() != rank)
    throw UsageError("--kind " + kind + " needs a rank-" + std::to_string(rank) +
                     " tensor, but the input has rank " + std::to_string(x.rank()));
}

int cmd_transform(const TransformArgs& args) {
  sdct::ExecConfig cfg;
  cfg.parallelism_degree = args.threads;
  const sdct::RealTensor x = sdct::read_dctb(args.input);

  if (args.algo != "n" && args.kind != "dct1")
    throw UsageError("--algo applies only to --kind dct1");

  sdct::RealTensor y;
  double norm = 1.0;  // --normalize rescale; stays 1 for forward kinds
  if (args.kind == "dct1") {
    require_rank(x, 1, args.kind);
    y = sdct::dct_1d(x, parse_variant(args.algo), cfg);
  } else if (args.kind == "idct1") {
    require_rank(x, 1, args.kind);
    y = sdct::idct_1d(x, cfg);
    norm = 2.0 / static_cast<double>(x.dim(0));
  } else if (args.kind == "idxst1") {
    require_rank(x, 1, args.kind);
    y = sdct::idxst_1d(x, cfg);
    norm = 2.0 / static_cast<double>(x.dim(0));
  } else if (args.kind == "dct2") {
    require_rank(x, 2, args.kind);
    y = sdct::dct_2d(x, cfg);
  } else if (args.kind == "idct2" || args.kind == "idct-idxst" || args.kind == "idxst-idct") {
    require_rank(x, 2, args.kind);
    sdct::Plan2d plan(x.dim(0), x.dim(1));
    if (args.kind == "idct2")
      y = sdct::idct_2d(x, plan, cfg);
    else if (args.kind == "idct-idxst")
      y = sdct::idct_idxst_2d(x, plan, cfg);
    else
      y = sdct::idxst_idct_2d(x, plan, cfg);
    norm = 4.0 / static_cast<double>(x.dim(0) * x.dim(1));
  } else if (args.kind == "dct3") {
    require_rank(x, 3, args.kind);
    y = sdct::dct_3d(x, cfg);
  } else if (args.kind == "idct3") {
    require_rank(x, 3, args.kind);
    y = sdct::idct_3d(x, cfg);
    norm = 8.0 / static_cast<double>(x.dim(0) * x.dim(1) * x.dim(2));
  } else {
    throw UsageError("unknown --kind '" + args.kind + "'");
  }

  if (args.normalize && norm != 1.0)
    for (std::size_t i = 0; i < y.size(); ++i) y[i] *= norm;

  sdct::write_dctb(args.output, y);
  std::cout << args.kind << ": " << sdct::shape_to_string(x.dims()) << " -> " << args.output
            << "\n";
  return kExitOk;
}

/// "N" -> 1D shape, "N1xN2" -> 2D shape.
sdct::Shape parse_shape(const std::string& text) {
  sdct::Shape dims;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(text.substr(pos), &used);
    } catch (const std::exception&) {
      throw UsageError("bad shape '" + text + "'");
    }
    if (used == 0 || v == 0) throw UsageError("bad shape '" + text + "'");
    dims.push_back(static_cast<std::size_t>(v));
    pos += used;
    if (pos < text.size()) {
      if (text[pos] != 'x') throw UsageError("bad shape '" + text + "'");
      ++pos;
    }
  }
  if (dims.empty() || dims.size() > 2)
    throw UsageError("--shape expects N or N1xN2, got '" + text + "'");
  return dims;
}

sdct::RealTensor random_input(const sdct::Shape& dims) {
  sdct::RealTensor x(dims);
  // Fixed linear-congruential fill: benchmarks need stable, cheap inputs,
  // not statistical quality.
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (std::size_t i = 0; i < x.size(); ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    x[i] = static_cast<double>(state >> 11) / static_cast<double>(1ull << 53) - 0.5;
  }
  return x;
}

int cmd_bench(const std::vector<std::string>& shape_texts, unsigned runs, unsigned threads,
              bool with_counters, const std::string& csv_path) {
  sdct::ExecConfig cfg;
  cfg.parallelism_degree = threads;

  std::vector<sdct::BenchCase> cases;
  // Keep the per-case input tensors and plans alive for the whole run.
  std::vector<std::shared_ptr<void>> keepalive;

  for (const std::string& text : shape_texts) {
    const sdct::Shape dims = parse_shape(text);
    if (dims.size() == 1) {
      const std::size_t n = dims[0];
      auto x = std::make_shared<sdct::RealTensor>(random_input(dims));
      keepalive.push_back(x);
      const std::pair<const char*, sdct::Dct1dVariant> variants[] = {
          {"dct1-4n", sdct::Dct1dVariant::FourN},
          {"dct1-2n-mirrored", sdct::Dct1dVariant::MirroredTwoN},
          {"dct1-2n-padded", sdct::Dct1dVariant::PaddedTwoN},
          {"dct1-n", sdct::Dct1dVariant::NPoint},
      };
      for (auto [name, variant] : variants) {
        auto plan = std::make_shared<sdct::Plan1d>(n, variant);
        keepalive.push_back(plan);
        sdct::BenchCase c;
        c.name = name;
        c.shape = dims;
        c.run = [x, plan, cfg] { sdct::dct_1d(*x, *plan, cfg); };
        c.counted = [x, plan, cfg] {
          sdct::StageCounters counters;
          sdct::dct_1d(*x, *plan, cfg, &counters);
          return counters;
        };
        if (variant != sdct::Dct1dVariant::FourN) c.baseline = "dct1-4n";
        cases.push_back(std::move(c));
      }
    } else {
      auto x = std::make_shared<sdct::RealTensor>(random_input(dims));
      auto plan = std::make_shared<sdct::Plan2d>(dims[0], dims[1]);
      keepalive.push_back(x);
      keepalive.push_back(plan);
      sdct::BenchCase rowcol;
      rowcol.name = "dct2-rowcol";
      rowcol.shape = dims;
      rowcol.run = [x, plan, cfg] { sdct::dct_2d_rowcol(*x, *plan, cfg); };
      rowcol.counted = [x, plan, cfg] {
        sdct::StageCounters counters;
        sdct::dct_2d_rowcol(*x, *plan, cfg, &counters);
        return counters;
      };
      cases.push_back(std::move(rowcol));
      sdct::BenchCase fused;
      fused.name = "dct2-fused";
      fused.shape = dims;
      fused.run = [x, plan, cfg] { sdct::dct_2d(*x, *plan, cfg); };
      fused.counted = [x, plan, cfg] {
        sdct::StageCounters counters;
        sdct::dct_2d(*x, *plan, cfg, &counters);
        return counters;
      };
      fused.baseline = "dct2-rowcol";
      cases.push_back(std::move(fused));
    }
  }

  const std::vector<sdct::BenchResult> results = sdct::run_bench(cases, runs);
  std::cout << sdct::format_bench_table(results, with_counters);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw UsageError("cannot open '" + csv_path + "' for writing");
    out << sdct::format_bench_csv(results);
    std::cout << "csv written to " << csv_path << "\n";
  }
  return kExitOk;
}

int cmd_compress(const std::string& input, const std::string& output, double epsilon,
                 bool drop_all, unsigned threads) {
  if (std::isnan(epsilon) || epsilon < 0.0) throw UsageError("--epsilon must be >= 0");
  if (drop_all) epsilon = std::numeric_limits<double>::infinity();
  sdct::ExecConfig cfg;
  cfg.parallelism_degree = threads;

  const sdct::GrayImage image = sdct::read_pgm(input);
  const sdct::CompressResult result = sdct::compress_image(image, epsilon, cfg);
  sdct::write_pgm(output, result.image);

  const auto& s = result.stats;
  std::printf("coefficients: %zu total, %zu zeroed (fraction %.6f)\n", s.total_coefficients,
              s.zeroed_coefficients, s.zeroed_fraction);
  if (std::isinf(s.psnr_db))
    std::printf("psnr: inf dB (exact reconstruction)\n");
  else
    std::printf("psnr: %.2f dB\n", s.psnr_db);
  return kExitOk;
}

int cmd_force_demo(const std::string& input, const std::string& out1, const std::string& out2,
                   unsigned threads) {
  sdct::ExecConfig cfg;
  cfg.parallelism_degree = threads;
  const sdct::RealTensor density = sdct::read_dctb(input);
  if (density.rank() != 2)
    throw UsageError("force-demo needs a rank-2 density grid, got rank " +
                     std::to_string(density.rank()));
  const sdct::ForceFields fields = sdct::force_demo_fields(density, cfg);
  sdct::write_dctb(out1, fields.xi1);
  sdct::write_dctb(out2, fields.xi2);
  std::cout << "force fields written to " << out1 << " and " << out2 << "\n";
  return kExitOk;
}

int cmd_amdahl(double p, double s) {
  double speedup = 0.0;
  try {
    speedup = sdct::amdahl_speedup(p, s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::printf("speedup(p=%g, s=%g) = %.15g\n", p, s, speedup);
  return kExitOk;
}

int cmd_verify(unsigned threads, bool corrupt_twiddle) {
  sdct::VerifyOptions options;
  options.threads = threads;
  options.corrupt_twiddle = corrupt_twiddle;
  const sdct::VerifyReport report = sdct::run_verify(options);
  std::cout << sdct::format_verify_report(report);
  return report.all_passed() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse-stage DCT toolkit: multi-dimensional cosine/sine transforms built on a "
               "real-input FFT"};
  app.require_subcommand(1);

  TransformArgs targs;
  CLI::App* transform = app.add_subcommand("transform", "Apply a transform to a DCTB tensor file");
  transform->add_option("input", targs.input, "input .dctb file")->required();
  transform->add_option("output", targs.output, "output .dctb file")->required();
  transform
      ->add_option("--kind", targs.kind,
                   "dct1|idct1|dct2|idct2|dct3|idct3|idxst1|idct-idxst|idxst-idct")
      ->required();
  transform->add_option("--algo", targs.algo,
                        "1D scheme for --kind dct1: 4n|2n-mirrored|2n-padded|n (default n)");
  transform->add_flag("--normalize", targs.normalize,
                      "rescale inverse transforms by their round-trip constant "
                      "(2/N, 4/(N1*N2), 8/(N1*N2*N3))");
  transform->add_option("--threads", targs.threads, "parallelism degree (0 = machine cores)");

  std::vector<std::string> bench_shapes{"4096", "256x256"};
  unsigned bench_runs = 100;
  unsigned bench_threads = 0;
  bool bench_counters = false;
  std::string bench_csv;
  CLI::App* bench = app.add_subcommand("bench", "Time transforms (mean/stddev over N runs)");
  bench->add_option("--shape", bench_shapes,
                    "shapes to bench: N (all four 1D schemes) or N1xN2 (fused vs row-column)");
  bench->add_option("--runs", bench_runs, "timed runs per case, >= 2 (default 100)");
  bench->add_option("--threads", bench_threads, "parallelism degree (0 = machine cores)");
  bench->add_flag("--counters", bench_counters, "include stage/read/write/arithmetic counters");
  bench->add_option("--csv", bench_csv, "also write the results as CSV to this file");

  std::string compress_in, compress_out;
  double compress_epsilon = 0.0;
  bool compress_drop_all = false;
  unsigned compress_threads = 0;
  CLI::App* compress =
      app.add_subcommand("compress", "Threshold a PGM image in the 2D DCT domain");
  compress->add_option("input", compress_in, "input .pgm (P5 or P2)")->required();
  compress->add_option("output", compress_out, "output .pgm (written as P5)")->required();
  compress->add_option("--epsilon", compress_epsilon,
                       "zero coefficients with |B| < epsilon (default 0: keep everything)");
  compress->add_flag("--drop-all", compress_drop_all,
                     "epsilon = infinity: zero the whole spectrum");
  compress->add_option("--threads", compress_threads, "parallelism degree (0 = machine cores)");

  std::string force_in, force_out1, force_out2;
  unsigned force_threads = 0;
  CLI::App* force = app.add_subcommand(
      "force-demo", "Gradient fields of a density grid via mixed inverse transforms");
  force->add_option("input", force_in, "rank-2 density .dctb file")->required();
  force->add_option("out1", force_out1, "output .dctb for the axis-1 field")->required();
  force->add_option("out2", force_out2, "output .dctb for the axis-2 field")->required();
  force->add_option("--threads", force_threads, "parallelism degree (0 = machine cores)");

  double amdahl_p = 0.0, amdahl_s = 1.0;
  CLI::App* amdahl = app.add_subcommand("amdahl", "Theoretical speedup 1/((1-p) + p/s)");
  amdahl->add_option("p", amdahl_p, "accelerated fraction, in [0, 1]")->required();
  amdahl->add_option("s", amdahl_s, "acceleration factor, > 0")->required();

  unsigned verify_threads = 0;
  bool verify_corrupt = false;
  CLI::App* verify = app.add_subcommand("verify", "Run the self-check suites");
  verify->add_option("--threads", verify_threads, "parallelism degree (0 = machine cores)");
  verify->add_flag("--corrupt-twiddle", verify_corrupt,
                   "test hook: inject a twiddle sign error (the oracle suite must then fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;  // --help exits 0
  }

  try {
    if (transform->parsed()) return cmd_transform(targs);
    if (bench->parsed())
      return cmd_bench(bench_shapes, bench_runs, bench_threads, bench_counters, bench_csv);
    if (compress->parsed())
      return cmd_compress(compress_in, compress_out, compress_epsilon, compress_drop_all,
                          compress_threads);
    if (force->parsed()) return cmd_force_demo(force_in, force_out1, force_out2, force_threads);
    if (amdahl->parsed()) return cmd_amdahl(amdahl_p, amdahl_s);
    if (verify->parsed()) return cmd_verify(verify_threads, verify_corrupt);
  } catch (const sdct::FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // ShapeError and parameter-domain errors from the library.
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
  return kExitUsage;
}

#include "sdct/oracle.hpp"

#include <cmath>
#include <numbers>

namespace sdct::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

// Compensated accumulator: the quadruple-sum oracle adds O(N^2) terms per
// output, so plain summation would eat into the 1e-10 comparison budget.
class Kahan {
 public:
  void add(double v) {
    const double y = v - c_;
    const double t = sum_ + y;
    c_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

void require_rank(const RealTensor& x, std::size_t rank, const char* name) {
  if (x.rank() != rank)
    throw ShapeError(std::string(name) + " expects a rank-" + std::to_string(rank) +
                     " tensor, got " + shape_to_string(x.dims()));
}

}  // namespace

OracleResult dct_oracle_1d_counted(const RealTensor& x) {
  require_rank(x, 1, "dct_oracle_1d");
  const std::size_t n = x.dim(0);
  OracleResult result{RealTensor(Shape{n}), 0};
  for (std::size_t k = 0; k < n; ++k) {
    Kahan acc;
    for (std::size_t m = 0; m < n; ++m) {
      acc.add(x[m] * std::cos(kPi / static_cast<double>(n) * (static_cast<double>(m) + 0.5) *
                              static_cast<double>(k)));
      ++result.op_count;
    }
    result.values[k] = acc.value();
  }
  return result;
}

RealTensor dct_oracle_1d(const RealTensor& x) { return dct_oracle_1d_counted(x).values; }

OracleResult idct_oracle_1d_counted(const RealTensor& x) {
  require_rank(x, 1, "idct_oracle_1d");
  const std::size_t n = x.dim(0);
  OracleResult result{RealTensor(Shape{n}), 0};
  for (std::size_t k = 0; k < n; ++k) {
    Kahan acc;
    acc.add(0.5 * x[0]);
    ++result.op_count;
    for (std::size_t m = 1; m < n; ++m) {
      acc.add(x[m] * std::cos(kPi / static_cast<double>(n) * static_cast<double>(m) *
                              (static_cast<double>(k) + 0.5)));
      ++result.op_count;
    }
    result.values[k] = acc.value();
  }
  return result;
}

RealTensor idct_oracle_1d(const RealTensor& x) { return idct_oracle_1d_counted(x).values; }

RealTensor dct_oracle_2d(const RealTensor& x) {
  require_rank(x, 2, "dct_oracle_2d");
  const std::size_t n1 = x.dim(0), n2 = x.dim(1);
  RealTensor out(Shape{n1, n2});
  for (std::size_t k1 = 0; k1 < n1; ++k1) {
    for (std::size_t k2 = 0; k2 < n2; ++k2) {
      Kahan acc;
      for (std::size_t m1 = 0; m1 < n1; ++m1) {
        const double c1 = std::cos(kPi / static_cast<double>(n1) *
                                   (static_cast<double>(m1) + 0.5) * static_cast<double>(k1));
        for (std::size_t m2 = 0; m2 < n2; ++m2) {
          const double c2 = std::cos(kPi / static_cast<double>(n2) *
                                     (static_cast<double>(m2) + 0.5) * static_cast<double>(k2));
          acc.add(x(m1, m2) * c1 * c2);
        }
      }
      out(k1, k2) = acc.value();
    }
  }
  return out;
}

RealTensor idxst_oracle_1d(const RealTensor& x) {
  require_rank(x, 1, "idxst_oracle_1d");
  const std::size_t n = x.dim(0);
  RealTensor shifted(Shape{n});
  shifted[0] = 0.0;  // x(N) := 0
  for (std::size_t m = 1; m < n; ++m) shifted[m] = x[n - m];
  RealTensor out = idct_oracle_1d(shifted);
  for (std::size_t k = 1; k < n; k += 2) out[k] = -out[k];
  return out;
}

}  // namespace sdct::oracle

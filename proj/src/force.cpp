#include "sdct/force.hpp"

#include <numbers>

#include "sdct/dct2d.hpp"
#include "sdct/errors.hpp"
#include "sdct/transforms_ext.hpp"

namespace sdct {

ForceFields force_demo_fields(const RealTensor& density, const ExecConfig& cfg) {
  if (density.rank() != 2)
    throw ShapeError("force demo expects a rank-2 density grid, got rank " +
                     std::to_string(density.rank()));
  const std::size_t n1 = density.dim(0);
  const std::size_t n2 = density.dim(1);
  Plan2d plan(n1, n2);

  const RealTensor a = dct_2d(density, plan, cfg);
  RealTensor a1(Shape{n1, n2});
  RealTensor a2(Shape{n1, n2});
  for (std::size_t k1 = 0; k1 < n1; ++k1) {
    const double w1 = std::numbers::pi * static_cast<double>(k1) / static_cast<double>(n1);
    for (std::size_t k2 = 0; k2 < n2; ++k2) {
      const double w2 = std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n2);
      const double denom = w1 * w1 + w2 * w2;
      const double v = a(k1, k2);
      a1(k1, k2) = denom > 0.0 ? v * w1 / denom : 0.0;
      a2(k1, k2) = denom > 0.0 ? v * w2 / denom : 0.0;
    }
  }

  ForceFields fields;
  fields.xi1 = idct_idxst_2d(a1, plan, cfg);
  fields.xi2 = idxst_idct_2d(a2, plan, cfg);
  return fields;
}

}  // namespace sdct

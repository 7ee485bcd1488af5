/// @file force.hpp
/// @brief Spectral force-field demo behind `sdct force-demo`: forward 2D DCT
///        of a density grid, inverse-Laplacian weighting of the spectrum, and
///        the two mixed inverse transforms recovering the gradient fields.
///        The weighting is demo plumbing — it turns "scaled potential" into
///        something concrete (w_i = pi k_i / N_i, weight w_i / (w_1^2 + w_2^2),
///        DC zeroed) so the composite transforms have a realistic driver.
#pragma once

#include "sdct/exec.hpp"
#include "sdct/tensor.hpp"

namespace sdct {

struct ForceFields {
  RealTensor xi1;  // idct_idxst_2d of the axis-1-weighted spectrum
  RealTensor xi2;  // idxst_idct_2d of the axis-2-weighted spectrum
};

/// a = dct_2d(density); a1(k1,k2) = a * w1/(w1^2+w2^2), a2 analogous with w2,
/// w_i = pi k_i / N_i, a1(0,0) = a2(0,0) = 0; returns the two inverse fields.
/// Throws ShapeError unless density is rank 2.
ForceFields force_demo_fields(const RealTensor& density, const ExecConfig& cfg = {});

}  // namespace sdct

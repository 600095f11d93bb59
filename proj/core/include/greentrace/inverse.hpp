#pragma once

#include "greentrace/mapping.hpp"
#include "greentrace/profile.hpp"

namespace greentrace {

inline constexpr double kDefaultResidualTolerance = 1e-6;

struct Reconstruction {
  ConformalMap map;
  BoundaryTrace trace;
  double consistency_residual = 0.0;
};

/// Inverts the forward operator: flux profile + anchors -> conformal map and
/// boundary trace.  gamma is resolved from the anchor condition
/// e^{i gamma} I = zeta_b - zeta_c with I = f(1) - zeta_c at gamma = 0; only
/// the argument is enforced, the modulus mismatch is surfaced as
/// consistency_residual = ||zeta_b - zeta_c| - |I|| / |I|.
Reconstruction reconstruct(const FluxProfile& profile, const Anchors& anchors,
                           std::size_t n,
                           double residual_tolerance = kDefaultResidualTolerance);

struct FreeReconstruction {
  ConformalMap map;
  BoundaryTrace trace;
};

/// Reconstruction with gamma supplied directly (no boundary reference);
/// zeta_b is reported as f(1) in the returned map's anchors.
FreeReconstruction reconstruct_free(const FluxProfile& profile, cplx zeta_c,
                                    double gamma, std::size_t n);

/// Default theta-grid size for a profile with n_s samples.
std::size_t default_grid(std::size_t n_samples);

}  // namespace greentrace

#pragma once

#include <variant>
#include <vector>

#include "greentrace/mapping.hpp"
#include "greentrace/profile.hpp"

namespace greentrace {

/// f(z) = zeta_c + sum_{k=1}^m a_k z^k, a_1 != 0.
struct PolynomialMap {
  cplx zeta_c;
  std::vector<cplx> coeffs;  // a_1 .. a_m
};

/// Boundary samples f(e^{i theta_j}) on a power-of-two grid.
struct SampledBoundaryMap {
  std::vector<cplx> points;
};

using MapSpec = std::variant<PolynomialMap, SampledBoundaryMap>;

/// Samples of |f'(e^{i theta_j})| on the n-point grid.
PeriodicSamples boundary_modulus_of(const MapSpec& spec, std::size_t n);

struct ForwardResult {
  FluxProfile profile;
  Anchors anchors;
};

/// The forward operator: flux phi = 1/(2 pi |f'|) resampled onto a uniform
/// arclength grid of n points, with anchors zeta_c = f(0), zeta_b = f(1).
ForwardResult forward_operator(const MapSpec& spec, std::size_t n);

}  // namespace greentrace

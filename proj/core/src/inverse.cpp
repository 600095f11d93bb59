#include "greentrace/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "greentrace/errors.hpp"

namespace greentrace {

namespace {

// Boundary modulus |f'(e^{i theta_j})| = 1/(2 pi phi(Phi^{-1}(theta_j))) on
// the n-point theta grid.
PeriodicSamples boundary_modulus_from_flux(const FluxProfile& profile,
                                           std::size_t n) {
  CumulativePhase phase = build_phase(profile);
  std::vector<double> mod(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    const double s = invert_phase(phase, theta);
    mod[j] = 1.0 / (kTwoPi * phase.flux_at(s));
  }
  return PeriodicSamples(std::move(mod));
}

// I = f(1) - zeta_c at gamma = 0: the integral of the anchor condition.
cplx anchor_integral(const ConformalMap& map) {
  return map.eval_f(cplx(1.0, 0.0)) - map.anchors().zeta_c;
}

double wrap_angle(double a) {
  a = std::remainder(a, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  return a;
}

}  // namespace

std::size_t default_grid(std::size_t n_samples) {
  std::size_t n = 512;
  while (n < 2 * n_samples) n *= 2;
  return n;
}

Reconstruction reconstruct(const FluxProfile& profile, const Anchors& anchors,
                           std::size_t n, double residual_tolerance) {
  if (!is_power_of_two(n) || n < profile.n_samples())
    throw std::invalid_argument(
        "reconstruct: n must be a power of two >= the profile size");
  ConformalMap map0 =
      from_boundary_modulus(boundary_modulus_from_flux(profile, n), anchors);
  const cplx I = anchor_integral(map0);
  const cplx delta = anchors.zeta_b - anchors.zeta_c;
  const double gamma = wrap_angle(std::arg(delta) - std::arg(I));
  const double residual = std::abs(std::abs(I) - std::abs(delta)) / std::abs(I);
  if (residual > residual_tolerance)
    throw InconsistentAnchors(
        residual,
        "flux profile is not consistent with the anchors: |f(1) - zeta_c| "
        "mismatch residual " +
            std::to_string(residual));
  ConformalMap map = map0.with_gamma(gamma);
  BoundaryTrace trace = trace_boundary(map, n);
  return Reconstruction{std::move(map), std::move(trace), residual};
}

FreeReconstruction reconstruct_free(const FluxProfile& profile, cplx zeta_c,
                                    double gamma, std::size_t n) {
  if (!is_power_of_two(n) || n < profile.n_samples())
    throw std::invalid_argument(
        "reconstruct_free: n must be a power of two >= the profile size");
  // Placeholder zeta_b; replaced by f(1) once the series exists.
  Anchors provisional{zeta_c, zeta_c + 1.0};
  ConformalMap map0 = from_boundary_modulus(
      boundary_modulus_from_flux(profile, n), provisional);
  ConformalMap rotated = map0.with_gamma(gamma);
  Anchors anchors{zeta_c, rotated.eval_f(cplx(1.0, 0.0))};
  ConformalMap map(anchors, gamma, rotated.log_mod_coeffs(),
                   rotated.series_order());
  BoundaryTrace trace = trace_boundary(map, n);
  return FreeReconstruction{std::move(map), std::move(trace)};
}

}  // namespace greentrace

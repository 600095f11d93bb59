#pragma once

#include <utility>
#include <vector>

#include "greentrace/mapping.hpp"
#include "greentrace/profile.hpp"

namespace greentrace {

/// Result of the Paatero univalence diagnostic: max|phi'/phi^2| against the
/// 2*pi threshold, and the implied upper bound on the boundary rotation.
struct UnivalenceReport {
  double max_ratio = 0.0;
  double paatero_bound = 0.0;  // 2*pi*(1 + max_ratio/(2*pi))
  bool passes = false;         // max_ratio <= 2*pi
};

UnivalenceReport paatero_check(const FluxProfile& profile);

struct RotationalResidual {
  int order = 0;
  double residual = 0.0;  // ||phi(.+L/n) - phi||_inf / ||phi||_inf
};

struct ReflectionResult {
  double offset = 0.0;    // best axis offset s0 in [0, L/2)
  double residual = 0.0;  // ||phi(s0+.) - phi(s0-.)||_inf / ||phi||_inf
};

struct SymmetryReport {
  std::vector<RotationalResidual> rotational;
  ReflectionResult reflection;
  std::vector<int> detected_orders;
};

inline constexpr int kDefaultMaxOrder = 12;
inline constexpr double kDefaultSymmetryTolerance = 1e-6;

std::vector<RotationalResidual> rotational_symmetry(const FluxProfile& profile,
                                                    int n_max = kDefaultMaxOrder);
ReflectionResult reflection_symmetry(const FluxProfile& profile);
SymmetryReport symmetry_report(const FluxProfile& profile,
                               int n_max = kDefaultMaxOrder,
                               double tolerance = kDefaultSymmetryTolerance);

/// Curvature of the domain boundary from the flux alone, computed in the
/// theta variable as kappa(s(theta)) = 2 pi phi [1 + H(s''/s')(theta)] with
/// the spectral Hilbert transform, resampled to the profile's s grid.
std::vector<double> curvature_from_flux(const FluxProfile& profile);

/// Dirichlet-to-Neumann form kappa = 2 pi phi [1 + D2N(log phi)]; the same
/// computation as curvature_from_flux, exposed under the identity's name.
/// Returns bit-identical output.
std::vector<double> d2n_curvature_form(const FluxProfile& profile);

/// Signed curvature of the image curve at f(e^{i theta}).
double curvature_geometric(const ConformalMap& map, double theta);

}  // namespace greentrace

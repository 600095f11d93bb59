#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "greentrace/fourier.hpp"

namespace greentrace {

/// Normalization anchors: f(0) = zeta_c (Green's function pole) and
/// f(1) = zeta_b (boundary reference).
struct Anchors {
  cplx zeta_c;
  cplx zeta_b;
};

/// Spectral representation of the normalized conformal map f from the unit
/// disk: f'(z) = e^{i gamma} exp G(z) where G is the analytic completion of
/// log|f'| boundary data.  Immutable; evaluations are pure.
class ConformalMap {
public:
  ConformalMap(Anchors anchors, double gamma, FourierCoefficients log_mod_coeffs,
               std::size_t series_order);

  ConformalMap with_gamma(double gamma) const;

  const Anchors& anchors() const { return anchors_; }
  double gamma() const { return gamma_; }
  const FourierCoefficients& log_mod_coeffs() const { return log_mod_; }
  std::size_t series_order() const { return order_; }
  /// Power-series coefficients b_k of exp G (f' = e^{i gamma} sum b_k z^k).
  std::span<const cplx> fprime_series() const { return fprime_series_; }
  /// Geometric tail estimate of sum_{k>M} |b_k|/(k+1) for boundary sums.
  double tail_bound() const { return tail_bound_; }

  cplx eval_f(cplx z) const;
  cplx eval_fprime(cplx z) const;
  cplx eval_fsecond(cplx z) const;

private:
  void check_tail(double abs_z) const;

  Anchors anchors_;
  double gamma_;
  FourierCoefficients log_mod_;
  std::size_t order_;
  std::vector<cplx> fprime_series_;
  double tail_bound_ = 0.0;
};

/// Builds a map from boundary samples of |f'|; gamma is left at 0 for later
/// resolution from the anchor condition.
ConformalMap from_boundary_modulus(const PeriodicSamples& mod_samples,
                                   Anchors anchors);

/// Discretized image boundary with arclength, tangent angle and curvature.
struct BoundaryTrace {
  std::vector<double> theta_grid;
  std::vector<cplx> points;
  std::vector<double> arclength;
  std::vector<double> tangent_angle;
  std::vector<double> curvature;
  double perimeter_L = 0.0;
};

BoundaryTrace trace_boundary(const ConformalMap& map, std::size_t n);

/// Level curve of the Green's function: points f(r e^{i theta_j}),
/// U = -log(r)/(2*pi).
std::vector<cplx> green_level_curve(const ConformalMap& map, double r,
                                    std::size_t n);

/// Signed curvature of the image curve at f(e^{i theta}):
/// Re{1 + z f''/f'} / |f'| at z = e^{i theta}.
double boundary_curvature(const ConformalMap& map, double theta);

/// Sampled-resolution self-intersection diagnostic for a closed polygon
/// (consecutive-segment adjacency excluded).
bool polygon_self_intersects(std::span<const cplx> pts);

}  // namespace greentrace

#pragma once

#include <cstddef>
#include <vector>

#include "greentrace/fourier.hpp"

namespace greentrace {

/// Boundary flux phi sampled at uniform arclengths s_j = j*L/N, measured
/// counterclockwise from the boundary reference point.  Samples are strictly
/// positive and the periodic trapezoid estimate of int_0^L phi ds is 1 within
/// the validation tolerance.
struct FluxProfile {
  std::vector<double> samples;
  double perimeter_L = 0.0;

  std::size_t n_samples() const { return samples.size(); }
  double grid_spacing() const {
    return perimeter_L / static_cast<double>(samples.size());
  }
  double trapezoid_integral() const;
  /// Arclength node s_j.
  double node(std::size_t j) const {
    return perimeter_L * static_cast<double>(j) / static_cast<double>(samples.size());
  }
  /// Spectrum of phi as a function of u = 2*pi*s/L.
  FourierCoefficients spectrum() const;
};

inline constexpr double kDefaultNormTolerance = 1e-6;

/// Validates raw samples into a FluxProfile.  The integral is checked, never
/// rescaled; renormalize_flux is the explicit rescaling path.
FluxProfile validate_flux(const std::vector<double>& raw_samples, double L,
                          double norm_tolerance = kDefaultNormTolerance);

/// Divides by the measured integral, then validates.
FluxProfile renormalize_flux(const std::vector<double>& raw_samples, double L,
                             double norm_tolerance = kDefaultNormTolerance);

/// Cumulative phase Phi(s) = 2*pi int_0^s phi, strictly increasing with
/// Phi(0) = 0 and Phi(L) = 2*pi exactly (pinned after spectral integration).
class CumulativePhase {
public:
  CumulativePhase(const FluxProfile& profile);

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double perimeter() const { return L_; }

  /// Phi at an arbitrary arclength (trigonometric interpolant of phi,
  /// integrated in closed form).
  double eval(double s) const;
  /// Phi'(s) = 2*pi*phi(s), with the same pinning scale applied.
  double derivative(double s) const;
  /// Trigonometric interpolation of phi itself.
  double flux_at(double s) const;

private:
  double L_ = 0.0;
  double scale_ = 1.0;  // pins Phi(L) to 2*pi
  FourierCoefficients phi_coeffs_;
  std::vector<double> grid_;
  std::vector<double> values_;
};

CumulativePhase build_phase(const FluxProfile& profile);

/// Solves Phi(s) = theta for s in [0, L], theta in [0, 2*pi].  Newton seeded
/// by linear interpolation of the sampled Phi, bisection fallback; relative
/// tolerance 1e-12, 100-iteration cap.
double invert_phase(const CumulativePhase& phase, double theta);

}  // namespace greentrace

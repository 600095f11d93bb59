#include "greentrace/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "greentrace/errors.hpp"

namespace greentrace {

double FluxProfile::trapezoid_integral() const {
  double sum = 0.0;
  for (double v : samples) sum += v;
  return sum * grid_spacing();
}

FourierCoefficients FluxProfile::spectrum() const {
  return analyze(PeriodicSamples(samples));
}

FluxProfile validate_flux(const std::vector<double>& raw_samples, double L,
                          double norm_tolerance) {
  const std::size_t n = raw_samples.size();
  if (n < 8)
    throw GridTooCoarse("flux grid has " + std::to_string(n) +
                        " samples, need at least 8");
  if (!is_power_of_two(n))
    throw GridTooCoarse("flux grid size " + std::to_string(n) +
                        " is not a power of two");
  if (!(L > 0.0)) throw GridTooCoarse("perimeter L must be positive");
  for (std::size_t j = 0; j < n; ++j) {
    if (!(raw_samples[j] > 0.0)) {
      std::ostringstream msg;
      msg << "flux sample " << j << " is " << raw_samples[j]
          << "; phi must be strictly positive";
      throw NonPositiveSample(msg.str());
    }
  }
  FluxProfile p{raw_samples, L};
  const double integral = p.trapezoid_integral();
  if (std::abs(integral - 1.0) > norm_tolerance) {
    std::ostringstream msg;
    msg << "int_0^L phi ds = " << integral << " differs from 1 by more than "
        << norm_tolerance;
    throw NormalizationViolation(integral, msg.str());
  }
  return p;
}

FluxProfile renormalize_flux(const std::vector<double>& raw_samples, double L,
                             double norm_tolerance) {
  const std::size_t n = raw_samples.size();
  if (n == 0) throw GridTooCoarse("empty flux sample set");
  double sum = 0.0;
  for (double v : raw_samples) sum += v;
  const double integral = sum * L / static_cast<double>(n);
  if (!(integral > 0.0))
    throw NonPositiveSample("cannot renormalize: measured integral <= 0");
  std::vector<double> scaled(raw_samples);
  for (double& v : scaled) v /= integral;
  return validate_flux(scaled, L, norm_tolerance);
}

CumulativePhase::CumulativePhase(const FluxProfile& profile)
    : L_(profile.perimeter_L), phi_coeffs_(profile.spectrum()) {
  const std::size_t n = profile.n_samples();
  // Phi in the u = 2*pi*s/L variable: Phi(s) = L * int_0^{u} phi(u') du'.
  std::vector<double> cum = cumulative_grid(phi_coeffs_);
  const double phi_L = kTwoPi * phi_coeffs_.coeff(0).real() * L_;
  scale_ = kTwoPi / phi_L;  // exactly 2*pi at s = L after scaling
  grid_.resize(n);
  values_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    grid_[j] = profile.node(j);
    values_[j] = scale_ * L_ * cum[j];
  }
}

double CumulativePhase::eval(double s) const {
  const double u = kTwoPi * s / L_;
  // closed-form antiderivative of the interpolant, scaled from u back to s
  return scale_ * (L_ / kTwoPi) * phi_coeffs_.eval_cumulative(u) * kTwoPi;
}

double CumulativePhase::flux_at(double s) const {
  return phi_coeffs_.eval(kTwoPi * s / L_);
}

double CumulativePhase::derivative(double s) const {
  return scale_ * kTwoPi * flux_at(s);
}

CumulativePhase build_phase(const FluxProfile& profile) {
  return CumulativePhase(profile);
}

double invert_phase(const CumulativePhase& phase, double theta) {
  const double L = phase.perimeter();
  if (theta <= 0.0) return 0.0;
  if (theta >= kTwoPi) return L;

  // Seed from linear interpolation of the sampled Phi.
  const auto& vals = phase.values();
  const auto& grid = phase.grid();
  const std::size_t n = vals.size();
  std::size_t hi = std::upper_bound(vals.begin(), vals.end(), theta) - vals.begin();
  double lo_s, hi_s, lo_phi, hi_phi;
  if (hi >= n) {
    lo_s = grid[n - 1];
    lo_phi = vals[n - 1];
    hi_s = L;
    hi_phi = kTwoPi;
  } else {
    const std::size_t lo = hi - 1;
    lo_s = grid[lo];
    lo_phi = vals[lo];
    hi_s = grid[hi];
    hi_phi = vals[hi];
  }
  double s = lo_s + (hi_s - lo_s) * (theta - lo_phi) / (hi_phi - lo_phi);
  double a = lo_s, b = hi_s;  // bisection bracket, Phi(a) <= theta <= Phi(b)

  const double tol = 1e-12 * L;
  for (int it = 0; it < 100; ++it) {
    const double res = phase.eval(s) - theta;
    if (std::abs(res) <= 1e-12 * kTwoPi) return s;
    if (res > 0.0)
      b = std::min(b, s);
    else
      a = std::max(a, s);
    const double dphi = phase.derivative(s);
    double next = s - res / dphi;
    if (!(dphi > 0.0) || next <= a || next >= b) next = 0.5 * (a + b);
    if (std::abs(next - s) <= tol) return next;
    s = next;
  }
  throw ConvergenceFailure("invert_phase: Newton/bisection exceeded 100 iterations");
}

}  // namespace greentrace

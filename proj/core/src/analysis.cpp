#include "greentrace/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "greentrace/errors.hpp"

namespace greentrace {

namespace {

// Golden-section refinement of a unimodal maximum bracketed by [a, b].
template <typename F>
double golden_max(F f, double a, double b) {
  constexpr double kInvPhi = 0.6180339887498948482;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && (b - a) > 1e-13 * (1.0 + std::abs(a)); ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }
  return std::max(f1, f2);
}

double sup_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

UnivalenceReport paatero_check(const FluxProfile& profile) {
  const FourierCoefficients phi = profile.spectrum();
  const double L = profile.perimeter_L;
  // phi'(s) = (2 pi / L) d/du of the interpolant, u = 2 pi s / L.
  const auto ratio = [&](double u) {
    const double p = phi.eval(u);
    const double dp = (kTwoPi / L) * phi.eval_derivative(u);
    return std::abs(dp) / (p * p);
  };
  // Coarse scan on an upsampled grid, then golden-section refinement around
  // the winner; the grid maximum alone is only O(h^2) accurate.
  const std::size_t scan = std::max<std::size_t>(16 * profile.n_samples(), 8192);
  double best = 0.0;
  std::size_t best_j = 0;
  for (std::size_t j = 0; j < scan; ++j) {
    const double u = kTwoPi * static_cast<double>(j) / static_cast<double>(scan);
    const double r = ratio(u);
    if (r > best) {
      best = r;
      best_j = j;
    }
  }
  const double h = kTwoPi / static_cast<double>(scan);
  const double u0 = h * static_cast<double>(best_j);
  const double refined = golden_max(ratio, u0 - h, u0 + h);
  UnivalenceReport rep;
  rep.max_ratio = std::max(best, refined);
  rep.paatero_bound = kTwoPi * (1.0 + rep.max_ratio / kTwoPi);
  rep.passes = rep.max_ratio <= kTwoPi;
  return rep;
}

std::vector<RotationalResidual> rotational_symmetry(const FluxProfile& profile,
                                                    int n_max) {
  const std::size_t n = profile.n_samples();
  if (n_max < 2 || static_cast<std::size_t>(n_max) > n / 4)
    throw std::invalid_argument("rotational_symmetry: need 2 <= n_max <= N/4");
  const FourierCoefficients phi = profile.spectrum();
  const double norm = sup_norm(profile.samples);
  std::vector<RotationalResidual> out;
  out.reserve(static_cast<std::size_t>(n_max) - 1);
  for (int order = 2; order <= n_max; ++order) {
    const double shift = kTwoPi / static_cast<double>(order);  // L/n in u units
    double res = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double u = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
      res = std::max(res, std::abs(phi.eval(u + shift) - profile.samples[j]));
    }
    out.push_back({order, res / norm});
  }
  return out;
}

ReflectionResult reflection_symmetry(const FluxProfile& profile) {
  const std::size_t n = profile.n_samples();
  const FourierCoefficients phi = profile.spectrum();
  const double norm = sup_norm(profile.samples);
  const double L = profile.perimeter_L;
  // Candidate offsets on the grid and half-grid over [0, L/2); s0 and
  // s0 + L/2 describe the same axis.
  ReflectionResult best{0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t c = 0; c < n; ++c) {
    const double u0 = kPi * static_cast<double>(c) / static_cast<double>(n);
    double res = 0.0;
    for (std::size_t j = 0; j <= n / 2 && res < best.residual * norm; ++j) {
      const double du = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
      res = std::max(res, std::abs(phi.eval(u0 + du) - phi.eval(u0 - du)));
    }
    if (res / norm < best.residual) {
      best.residual = res / norm;
      best.offset = u0 * L / kTwoPi;
    }
  }
  return best;
}

SymmetryReport symmetry_report(const FluxProfile& profile, int n_max,
                               double tolerance) {
  SymmetryReport rep;
  rep.rotational = rotational_symmetry(profile, n_max);
  rep.reflection = reflection_symmetry(profile);
  for (const auto& r : rep.rotational)
    if (r.residual < tolerance) rep.detected_orders.push_back(r.order);
  return rep;
}

std::vector<double> curvature_from_flux(const FluxProfile& profile) {
  const std::size_t ns = profile.n_samples();
  std::size_t n = 512;
  while (n < 2 * ns) n *= 2;

  CumulativePhase phase = build_phase(profile);
  // s'(theta) = 1/(2 pi phi(s(theta))); s''/s' = d/dtheta log s'.
  std::vector<double> log_sp(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    const double s = invert_phase(phase, theta);
    log_sp[j] = -std::log(kTwoPi * phase.flux_at(s));
  }
  const FourierCoefficients lc = analyze(PeriodicSamples(std::move(log_sp)));
  const FourierCoefficients bracket = hilbert_coeffs(derivative_coeffs(lc));

  // kappa(s(theta)) = 2 pi phi [1 + H(s''/s')]; resample to the s grid by
  // evaluating at theta_m = Phi(s_m).
  std::vector<double> kappa(ns);
  for (std::size_t m = 0; m < ns; ++m) {
    const double theta = phase.values()[m];
    const double s = profile.node(m);
    kappa[m] = kTwoPi * phase.flux_at(s) * (1.0 + bracket.eval(theta));
  }
  return kappa;
}

std::vector<double> d2n_curvature_form(const FluxProfile& profile) {
  return curvature_from_flux(profile);
}

double curvature_geometric(const ConformalMap& map, double theta) {
  return boundary_curvature(map, theta);
}

}  // namespace greentrace

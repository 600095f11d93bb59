#include "greentrace/forward.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "greentrace/errors.hpp"

namespace greentrace {

namespace {

cplx eval_polynomial(const PolynomialMap& p, cplx z) {
  cplx acc(0.0, 0.0);
  for (std::size_t k = p.coeffs.size(); k-- > 0;) acc = acc * z + p.coeffs[k];
  return p.zeta_c + acc * z;
}

cplx eval_polynomial_derivative(const PolynomialMap& p, cplx z) {
  cplx acc(0.0, 0.0);
  for (std::size_t k = p.coeffs.size(); k-- > 1;)
    acc = acc * z + static_cast<double>(k + 1) * p.coeffs[k];
  return acc * z + p.coeffs[0];
}

// Trigonometric resampling of complex boundary samples onto an n-point grid,
// optionally applying the d/dtheta multiplier.  Nyquist mode dropped for the
// derivative (sign of its frequency is ambiguous for complex data).
std::vector<cplx> resample_complex(const std::vector<cplx>& pts, std::size_t n,
                                   bool differentiate) {
  const std::size_t m = pts.size();
  std::vector<cplx> spec = fft(pts);
  std::vector<cplx> padded(n, cplx(0.0, 0.0));
  const double scale = static_cast<double>(n) / static_cast<double>(m);
  for (std::size_t idx = 0; idx < m; ++idx) {
    long k = static_cast<long>(idx);
    if (idx > m / 2) k -= static_cast<long>(m);
    cplx c = spec[idx] * scale;
    if (idx == m / 2) {
      if (differentiate) continue;
      c *= (n > m) ? 0.5 : 1.0;  // split only when the grid is refined
      if (n > m) {
        padded[n - m / 2] += c;  // mirror half of the Nyquist mode
      }
    }
    if (differentiate) c *= cplx(0.0, static_cast<double>(k));
    const std::size_t dst = (k >= 0) ? static_cast<std::size_t>(k)
                                     : n - static_cast<std::size_t>(-k);
    padded[dst] += c;
  }
  return ifft(padded);
}

// Solves s(theta) = target against the spectral cumulative of |f'|.
double invert_arclength(const FourierCoefficients& mod_coeffs,
                        const std::vector<double>& s_grid, double target) {
  const std::size_t n = s_grid.size();
  if (target <= 0.0) return 0.0;
  const double L = kTwoPi * mod_coeffs.coeff(0).real();
  std::size_t hi = std::upper_bound(s_grid.begin(), s_grid.end(), target) -
                   s_grid.begin();
  const double h = kTwoPi / static_cast<double>(n);
  double lo_t, hi_t, lo_s, hi_s;
  if (hi >= n) {
    lo_t = h * static_cast<double>(n - 1);
    lo_s = s_grid[n - 1];
    hi_t = kTwoPi;
    hi_s = L;
  } else {
    lo_t = h * static_cast<double>(hi - 1);
    lo_s = s_grid[hi - 1];
    hi_t = h * static_cast<double>(hi);
    hi_s = s_grid[hi];
  }
  double theta = lo_t + (hi_t - lo_t) * (target - lo_s) / (hi_s - lo_s);
  double a = lo_t, b = hi_t;
  for (int it = 0; it < 100; ++it) {
    const double res = mod_coeffs.eval_cumulative(theta) - target;
    if (std::abs(res) <= 1e-13 * std::max(1.0, L)) return theta;
    if (res > 0.0)
      b = std::min(b, theta);
    else
      a = std::max(a, theta);
    const double d = mod_coeffs.eval(theta);
    double next = theta - res / d;
    if (!(d > 0.0) || next <= a || next >= b) next = 0.5 * (a + b);
    if (std::abs(next - theta) <= 1e-14 * kTwoPi) return next;
    theta = next;
  }
  throw ConvergenceFailure("forward_operator: arclength inversion stalled");
}

}  // namespace

PeriodicSamples boundary_modulus_of(const MapSpec& spec, std::size_t n) {
  if (!is_power_of_two(n) || n < 8)
    throw std::invalid_argument("boundary_modulus_of: n must be power of two >= 8");
  std::vector<double> mod(n);
  if (const auto* poly = std::get_if<PolynomialMap>(&spec)) {
    if (poly->coeffs.empty() || poly->coeffs[0] == cplx(0.0, 0.0))
      throw std::invalid_argument("PolynomialMap: a_1 must be nonzero");
    for (std::size_t j = 0; j < n; ++j) {
      const cplx z = std::polar(1.0, kTwoPi * static_cast<double>(j) /
                                         static_cast<double>(n));
      mod[j] = std::abs(eval_polynomial_derivative(*poly, z));
    }
  } else {
    const auto& pts = std::get<SampledBoundaryMap>(spec).points;
    if (!is_power_of_two(pts.size()) || pts.size() < 8)
      throw std::invalid_argument(
          "SampledBoundaryMap: need a power-of-two number of points >= 8");
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (pts[j] == pts[(j + 1) % pts.size()])
        throw std::invalid_argument(
            "SampledBoundaryMap: consecutive points must be distinct");
    if (n < pts.size())
      throw std::invalid_argument("boundary_modulus_of: n below sample count");
    // |f'(e^{i theta})| = |d/dtheta f(e^{i theta})|
    std::vector<cplx> dfdt = resample_complex(pts, n, /*differentiate=*/true);
    for (std::size_t j = 0; j < n; ++j) mod[j] = std::abs(dfdt[j]);
  }
  for (std::size_t j = 0; j < n; ++j)
    if (mod[j] < 1e-12)
      throw DegenerateDerivative("|f'| below 1e-12 on the boundary circle");
  return PeriodicSamples(std::move(mod));
}

ForwardResult forward_operator(const MapSpec& spec, std::size_t n) {
  PeriodicSamples mod = boundary_modulus_of(spec, n);

  Anchors anchors;
  std::vector<cplx> boundary(n);
  if (const auto* poly = std::get_if<PolynomialMap>(&spec)) {
    for (std::size_t j = 0; j < n; ++j) {
      const cplx z = std::polar(1.0, kTwoPi * static_cast<double>(j) /
                                         static_cast<double>(n));
      boundary[j] = eval_polynomial(*poly, z);
    }
    anchors.zeta_c = poly->zeta_c;
    anchors.zeta_b = eval_polynomial(*poly, cplx(1.0, 0.0));
  } else {
    const auto& pts = std::get<SampledBoundaryMap>(spec).points;
    boundary = resample_complex(pts, n, /*differentiate=*/false);
    cplx mean(0.0, 0.0);
    for (const cplx& p : pts) mean += p;
    anchors.zeta_c = mean / static_cast<double>(pts.size());  // f(0)
    anchors.zeta_b = pts[0];
  }
  if (polygon_self_intersects(boundary))
    throw SelfIntersectingBoundary(
        "sampled boundary polygon self-intersects");

  FourierCoefficients mod_coeffs = analyze(mod);
  std::vector<double> s_grid = cumulative_grid(mod_coeffs);
  const double L = kTwoPi * mod_coeffs.coeff(0).real();

  // Resample the parametric pairs (s(theta), 1/(2 pi |f'|)) onto the uniform
  // arclength grid by inverting s(theta).
  std::vector<double> phi(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double s = L * static_cast<double>(m) / static_cast<double>(n);
    const double theta = invert_arclength(mod_coeffs, s_grid, s);
    phi[m] = 1.0 / (kTwoPi * mod_coeffs.eval(theta));
  }
  return ForwardResult{validate_flux(phi, L), anchors};
}

}  // namespace greentrace

#include "greentrace/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "greentrace/errors.hpp"

namespace greentrace {

namespace {

// Power series of exp(G) for G(z) = g_0 + sum_{k>=1} g_k z^k, truncated at
// `order`, via the b' = b G' coefficient recurrence.
std::vector<cplx> exp_series(const std::vector<cplx>& g, std::size_t order) {
  std::vector<cplx> b(order + 1);
  b[0] = std::exp(g[0]);
  for (std::size_t n = 1; n <= order; ++n) {
    cplx acc(0.0, 0.0);
    const std::size_t kmax = std::min(n, g.size() - 1);
    for (std::size_t k = 1; k <= kmax; ++k)
      acc += static_cast<double>(k) * g[k] * b[n - k];
    b[n] = acc / static_cast<double>(n);
  }
  return b;
}

// Geometric extrapolation of sum_{k>order} |b_k|/(k+1) from the last decade
// of coefficients.
double tail_estimate(const std::vector<cplx>& b) {
  const std::size_t m = b.size() - 1;
  const double am = std::abs(b[m]);
  if (am == 0.0) return 0.0;
  const std::size_t back = std::min<std::size_t>(10, m);
  const double a0 = std::abs(b[m - back]);
  double r;
  if (a0 == 0.0)
    r = 0.5;
  else
    r = std::pow(am / a0, 1.0 / static_cast<double>(back));
  if (r >= 1.0) return am * static_cast<double>(m);  // not decaying
  return am / static_cast<double>(m + 2) * r / (1.0 - r);
}

std::vector<cplx> onesided_to_series(const FourierCoefficients& c) {
  std::vector<cplx> g(c.max_mode() + 1);
  g[0] = c.coeff(0).real();
  for (std::size_t k = 1; k < c.max_mode(); ++k) g[k] = 2.0 * c.coeff(k);
  g[c.max_mode()] = c.coeff(c.max_mode()).real();
  return g;
}

}  // namespace

ConformalMap::ConformalMap(Anchors anchors, double gamma,
                           FourierCoefficients log_mod_coeffs,
                           std::size_t series_order)
    : anchors_(anchors),
      gamma_(gamma),
      log_mod_(std::move(log_mod_coeffs)),
      order_(series_order) {
  if (anchors_.zeta_c == anchors_.zeta_b)
    throw std::invalid_argument("Anchors: zeta_c must differ from zeta_b");
  fprime_series_ = exp_series(onesided_to_series(log_mod_), order_);
  tail_bound_ = tail_estimate(fprime_series_);
}

ConformalMap ConformalMap::with_gamma(double gamma) const {
  ConformalMap m(*this);
  m.gamma_ = gamma;
  return m;
}

void ConformalMap::check_tail(double abs_z) const {
  if (abs_z < 0.999) return;
  const double tol = 1e-8 * std::abs(anchors_.zeta_b - anchors_.zeta_c);
  if (tail_bound_ > tol)
    throw SeriesNotConverged(tail_bound_,
                             "boundary series tail estimate above tolerance");
}

cplx ConformalMap::eval_f(cplx z) const {
  check_tail(std::abs(z));
  // f(z) = zeta_c + e^{i gamma} sum_k b_k z^{k+1}/(k+1)
  cplx acc(0.0, 0.0);
  for (std::size_t k = order_ + 1; k-- > 0;)
    acc = acc * z + fprime_series_[k] / static_cast<double>(k + 1);
  return anchors_.zeta_c + std::polar(1.0, gamma_) * acc * z;
}

cplx ConformalMap::eval_fprime(cplx z) const {
  const double az = std::abs(z);
  if (az <= 1.0 - 1e-9)
    return std::polar(1.0, gamma_) * std::exp(schwarz_extend(log_mod_, z));
  // Boundary path: modulus from the data, argument from the conjugate
  // function plus gamma.
  const double theta = std::arg(z);
  const double mod = std::exp(log_mod_.eval(theta));
  const double argument = gamma_ + hilbert_coeffs(log_mod_).eval(theta);
  return std::polar(mod, argument);
}

cplx ConformalMap::eval_fsecond(cplx z) const {
  check_tail(std::abs(z));
  // f''(z) = e^{i gamma} sum_{k>=1} k b_k z^{k-1}
  cplx acc(0.0, 0.0);
  for (std::size_t k = order_; k >= 1; --k) {
    acc = acc * z + static_cast<double>(k) * fprime_series_[k];
    if (k == 1) break;
  }
  return std::polar(1.0, gamma_) * acc;
}

ConformalMap from_boundary_modulus(const PeriodicSamples& mod_samples,
                                   Anchors anchors) {
  std::vector<double> logs(mod_samples.size());
  for (std::size_t j = 0; j < mod_samples.size(); ++j) {
    if (!(mod_samples[j] > 0.0))
      throw NonPositiveModulus("boundary modulus sample " + std::to_string(j) +
                               " is not positive");
    logs[j] = std::log(mod_samples[j]);
  }
  FourierCoefficients coeffs = analyze(PeriodicSamples(std::move(logs)));
  const std::size_t order = coeffs.max_mode();
  return ConformalMap(anchors, 0.0, std::move(coeffs), order);
}

BoundaryTrace trace_boundary(const ConformalMap& map, std::size_t n) {
  if (!is_power_of_two(n) || n < map.log_mod_coeffs().grid_size())
    throw std::invalid_argument(
        "trace_boundary: n must be a power of two >= the map's grid");
  map.eval_f(cplx(1.0, 0.0));  // raises SeriesNotConverged early if hopeless

  BoundaryTrace tr;
  tr.theta_grid.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    tr.theta_grid[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(n);

  const PeriodicSamples log_mod = synthesize(map.log_mod_coeffs(), n);
  std::vector<double> modulus(n);
  for (std::size_t j = 0; j < n; ++j) modulus[j] = std::exp(log_mod[j]);

  // Arclength by spectral cumulative integration of |f'|.
  FourierCoefficients mod_coeffs = analyze(PeriodicSamples(modulus));
  tr.arclength = cumulative_grid(mod_coeffs);
  tr.perimeter_L = kTwoPi * mod_coeffs.coeff(0).real();

  // omega = arg f' on the boundary; psi = omega + pi/2 + theta is continuous
  // by construction (f' = exp of an analytic function has zero winding).
  const PeriodicSamples conj_vals = hilbert(analyze(log_mod));
  tr.tangent_angle.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    tr.tangent_angle[j] = map.gamma() + conj_vals[j] + 0.5 * kPi + tr.theta_grid[j];
  for (std::size_t j = 0; j < n; ++j) {
    const double next =
        (j + 1 < n) ? tr.tangent_angle[j + 1] : tr.tangent_angle[0] + kTwoPi;
    if (std::abs(next - tr.tangent_angle[j]) >= kPi)
      throw UnwrapAmbiguity(
          "tangent angle jumps by >= pi between grid nodes; increase n");
  }

  // Points and curvature from the power series / boundary data.
  tr.points.resize(n);
  tr.curvature.resize(n);
  const auto b = map.fprime_series();
  const cplx phase = std::polar(1.0, map.gamma());
  for (std::size_t j = 0; j < n; ++j) {
    const cplx z = std::polar(1.0, tr.theta_grid[j]);
    cplx accf(0.0, 0.0), accfpp(0.0, 0.0);
    for (std::size_t k = b.size(); k-- > 0;) {
      accf = accf * z + b[k] / static_cast<double>(k + 1);
      if (k >= 1) accfpp = accfpp * z + static_cast<double>(k) * b[k];
    }
    tr.points[j] = map.anchors().zeta_c + phase * accf * z;
    const cplx fp = std::polar(modulus[j], map.gamma() + conj_vals[j]);
    const cplx fpp = phase * accfpp;
    tr.curvature[j] = (1.0 + (z * fpp / fp).real()) / modulus[j];
  }
  return tr;
}

std::vector<cplx> green_level_curve(const ConformalMap& map, double r,
                                    std::size_t n) {
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument("green_level_curve: r must be in (0,1)");
  std::vector<cplx> pts(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    pts[j] = map.eval_f(std::polar(r, theta));
  }
  return pts;
}

double boundary_curvature(const ConformalMap& map, double theta) {
  const cplx z = std::polar(1.0, theta);
  const cplx fp = map.eval_fprime(z);
  const cplx fpp = map.eval_fsecond(z);
  return (1.0 + (z * fpp / fp).real()) / std::abs(fp);
}

namespace {

int orient(const cplx& a, const cplx& b, const cplx& c) {
  const double v = (b.real() - a.real()) * (c.imag() - a.imag()) -
                   (b.imag() - a.imag()) * (c.real() - a.real());
  return (v > 0.0) - (v < 0.0);
}

bool on_segment(const cplx& a, const cplx& b, const cplx& p) {
  return std::min(a.real(), b.real()) <= p.real() &&
         p.real() <= std::max(a.real(), b.real()) &&
         std::min(a.imag(), b.imag()) <= p.imag() &&
         p.imag() <= std::max(a.imag(), b.imag());
}

bool segments_intersect(const cplx& a, const cplx& b, const cplx& c,
                        const cplx& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d);
  const int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

}  // namespace

bool polygon_self_intersects(std::span<const cplx> pts) {
  const std::size_t n = pts.size();
  if (n < 4) return false;
  struct Seg {
    double xmin, xmax;
    std::size_t i;
  };
  std::vector<Seg> segs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx& a = pts[i];
    const cplx& b = pts[(i + 1) % n];
    segs[i] = {std::min(a.real(), b.real()), std::max(a.real(), b.real()), i};
  }
  std::sort(segs.begin(), segs.end(),
            [](const Seg& s, const Seg& t) { return s.xmin < t.xmin; });
  // x-interval sweep: only pairs with overlapping x-ranges are tested.
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n && segs[q].xmin <= segs[p].xmax; ++q) {
      const std::size_t i = segs[p].i, j = segs[q].i;
      const std::size_t d = (i > j ? i - j : j - i);
      if (d == 1 || d == n - 1) continue;  // adjacent segments share a vertex
      if (segments_intersect(pts[i], pts[(i + 1) % n], pts[j],
                             pts[(j + 1) % n]))
        return true;
    }
  }
  return false;
}

}  // namespace greentrace

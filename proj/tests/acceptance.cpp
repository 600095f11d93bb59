// Acceptance suite: eight end-to-end criteria for the flux <-> domain
// pipeline, each printed as a single PASS/FAIL line.  Returns the number of
// failed criteria.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "greentrace/analysis.hpp"
#include "greentrace/errors.hpp"
#include "greentrace/forward.hpp"
#include "greentrace/fourier.hpp"
#include "greentrace/inverse.hpp"
#include "greentrace/io.hpp"

using namespace greentrace;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int index, const char* title, bool ok, double worst) {
  std::printf("%s  criterion %d: %-48s (worst = %.3e)\n", ok ? "PASS" : "FAIL",
              index, title, worst);
  if (!ok) ++failures;
}

FluxProfile constant_profile(std::size_t n) {
  return validate_flux(std::vector<double>(n, 1.0 / kTwoPi), kTwoPi);
}

const std::vector<std::vector<cplx>> kTestMaps = {
    {cplx(1.0, 0.0), cplx(0.2, 0.0)},
    {cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.1, 0.0)},
    {cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0),
     cplx(0.1, 0.0)},
    {cplx(1.0, 0.0), cplx(0.15, 0.0), cplx(0.05, 0.0)}};

cplx eval_poly(const std::vector<cplx>& coeffs, cplx z) {
  cplx acc(0.0, 0.0);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
  return acc * z;
}

// 1. Disk rigidity: constant flux reconstructs the unit circle.
void criterion_1() {
  const std::size_t n = 512;
  const auto rec = reconstruct(constant_profile(n), Anchors{0.0, 1.0}, n);
  double worst = rec.consistency_residual * 1e2;  // scale onto the 1e-10 axis
  for (const cplx& p : rec.trace.points)
    worst = std::max(worst, std::abs(std::abs(p) - 1.0));
  report(1, "disk rigidity", worst < 1e-10 && rec.consistency_residual < 1e-12,
         worst);
}

// 2. Roundtrip uniqueness: forward -> reconstruct -> forward is the identity
// and the reconstructed trace matches the original map pointwise.
void criterion_2() {
  const std::size_t n = 512;
  double worst = 0.0;
  for (const auto& coeffs : kTestMaps) {
    const auto fwd = forward_operator(PolynomialMap{0.0, coeffs}, n);
    const auto rec = reconstruct(fwd.profile, fwd.anchors, n);
    for (std::size_t j = 0; j < n; ++j) {
      const cplx z = std::polar(1.0, rec.trace.theta_grid[j]);
      worst = std::max(worst, std::abs(rec.trace.points[j] - eval_poly(coeffs, z)));
    }
    const auto fwd2 =
        forward_operator(SampledBoundaryMap{rec.trace.points}, n);
    for (std::size_t j = 0; j < n; ++j)
      worst = std::max(worst,
                       std::abs(fwd2.profile.samples[j] - fwd.profile.samples[j]));
  }
  report(2, "roundtrip uniqueness", worst < 1e-8, worst);
}

// The curvature identity evaluated by singular quadrature in arclength, with
// the cot pole subtracted on a midpoint-offset grid (it sums to zero there).
double curvature_quadrature(const FluxProfile& profile,
                            const CumulativePhase& phase, double s) {
  const double L = profile.perimeter_L;
  const FourierCoefficients phi = profile.spectrum();
  const auto dlogphi = [&](double sig) {
    const double u = kTwoPi * sig / L;
    return (kTwoPi / L) * phi.eval_derivative(u) / phi.eval(u);
  };
  const double phis = phase.eval(s);
  const double g0 = dlogphi(s);
  const double c = kTwoPi / (L * phase.derivative(s));
  const std::size_t m_points = 8192;
  const double h = L / static_cast<double>(m_points);
  double integral = 0.0;
  for (std::size_t m = 0; m < m_points; ++m) {
    const double sig = s + (static_cast<double>(m) + 0.5) * h;
    const double x = 0.5 * (phis - phase.eval(sig));
    integral += (std::cos(x) / std::sin(x) * dlogphi(sig) -
                 g0 * c / std::tan(kPi * (s - sig) / L)) *
                h;
  }
  return kTwoPi * phi.eval(kTwoPi * s / L) * (1.0 - integral / kTwoPi);
}

// 3. Curvature identity: flux-only curvature vs geometric curvature, the
// quadrature oracle, and total turning 2 pi.  The z + 0.1 z^5 fixture runs at
// N = 1024: the curvature formula differentiates the flux, which amplifies
// the spectral truncation of a 512-sample profile above the tolerance.
void criterion_3() {
  double worst_geo = 0.0, worst_quad = 0.0, worst_turn = 0.0;
  for (std::size_t i = 0; i < kTestMaps.size(); ++i) {
    const auto& coeffs = kTestMaps[i];
    const std::size_t n = (i == 2) ? 1024 : 512;
    const auto fwd = forward_operator(PolynomialMap{0.0, coeffs}, n);
    const auto rec = reconstruct(fwd.profile, fwd.anchors, n);
    const auto phase = build_phase(fwd.profile);
    const auto kappa = curvature_from_flux(fwd.profile);
    for (std::size_t m = 0; m < n; ++m)
      worst_geo = std::max(
          worst_geo, std::abs(kappa[m] - curvature_geometric(
                                             rec.map, phase.values()[m])));

    // total turning at N = 512 for every map: the per-sample noise of the
    // arclength inversion grows with the grid, so refining does not help here
    const auto p512 = (n == 512)
                          ? fwd.profile
                          : forward_operator(PolynomialMap{0.0, coeffs}, 512)
                                .profile;
    const auto k512 = (n == 512) ? kappa : curvature_from_flux(p512);
    double turning = 0.0;
    for (double k : k512) turning += k;
    worst_turn = std::max(
        worst_turn,
        std::abs(turning * p512.grid_spacing() - kTwoPi) / kTwoPi);
    for (std::size_t m = 0; m < n; m += 32)
      worst_quad = std::max(
          worst_quad,
          std::abs(kappa[m] -
                   curvature_quadrature(fwd.profile, phase,
                                        fwd.profile.node(m))) /
              std::abs(kappa[m]));
  }
  const bool ok = worst_geo < 1e-8 && worst_quad < 1e-6 && worst_turn < 1e-10;
  report(3, "curvature identity", ok,
         std::max({worst_geo, worst_quad * 1e-2, worst_turn}));
}

// 4. Rotational symmetry, both directions.  The n = 6 fixture needs a finer
// grid: the theta -> s reparametrization compresses the sharp |f'| features
// (min |f'| = 0.3), so the flux spectrum only reaches the 1e-10 floor at
// N = 4096.
void criterion_4() {
  double worst = 0.0;
  for (int order : {2, 3, 4, 6}) {
    const std::size_t n = (order == 6) ? 4096 : 512;
    std::vector<cplx> coeffs(static_cast<std::size_t>(order) + 1,
                             cplx(0.0, 0.0));
    coeffs.front() = cplx(1.0, 0.0);
    coeffs.back() = cplx(0.1, 0.0);
    const auto p = forward_operator(PolynomialMap{0.0, coeffs}, n).profile;
    for (const auto& r : rotational_symmetry(p, order))
      if (order % r.order == 0) worst = std::max(worst, r.residual);
  }
  bool forward_ok = worst < 1e-10;

  // converse: L/n-periodic flux -> trace invariant under rotation by 2 pi/n
  // about zeta_c (rotated boundary angles evaluated through the map itself,
  // so non-divisor orders of the grid are covered too)
  double worst_conv = 0.0;
  for (int order : {2, 3, 4}) {
    std::vector<double> v(256);
    for (std::size_t j = 0; j < 256; ++j) {
      const double u = kTwoPi * static_cast<double>(j) / 256.0;
      v[j] = (1.0 + 0.1 * std::cos(order * u)) / kTwoPi;
    }
    const auto rec = reconstruct_free(validate_flux(v, kTwoPi), 0.0, 0.0, 512);
    const cplx rot = std::polar(1.0, kTwoPi / order);
    for (std::size_t j = 0; j < 512; ++j) {
      const double theta = kTwoPi * static_cast<double>(j) / 512.0;
      const cplx lhs = rec.map.eval_f(std::polar(1.0, theta + kTwoPi / order));
      const cplx rhs = rot * rec.map.eval_f(std::polar(1.0, theta));
      worst_conv = std::max(worst_conv, std::abs(lhs - rhs));
    }
  }
  report(4, "rotational symmetry, both directions",
         forward_ok && worst_conv < 1e-8, std::max(worst, worst_conv));
}

// 5. Reflection symmetry, both directions.
void criterion_5() {
  const std::size_t n = 512;
  double worst = 0.0;
  for (const auto& coeffs : {kTestMaps[0], kTestMaps[3]}) {
    const auto res = reflection_symmetry(
        forward_operator(PolynomialMap{0.0, coeffs}, n).profile);
    worst = std::max(worst, res.residual);
    worst = std::max(worst, std::min(res.offset, kPi - res.offset) * 1e-2);
  }
  bool ok = worst < 1e-10;

  // converse: even flux -> trace symmetric across the zeta_c--zeta_b line
  std::vector<double> v(256);
  for (std::size_t j = 0; j < 256; ++j) {
    const double u = kTwoPi * static_cast<double>(j) / 256.0;
    v[j] = (1.0 + 0.15 * std::cos(u) + 0.05 * std::cos(2.0 * u)) / kTwoPi;
  }
  const auto rec = reconstruct_free(validate_flux(v, kTwoPi), 0.0, 0.0, 512);
  const cplx axis = std::polar(1.0, std::arg(rec.map.anchors().zeta_b));
  double worst_conv = 0.0;
  for (std::size_t j = 1; j < 512; ++j) {
    const cplx mirrored = axis * std::conj(rec.trace.points[512 - j] / axis);
    worst_conv = std::max(worst_conv, std::abs(mirrored - rec.trace.points[j]));
  }
  ok = ok && worst_conv < 1e-8;

  // a map with complex coefficients breaks every reflection
  const auto asym = reflection_symmetry(
      forward_operator(
          PolynomialMap{0.0, {cplx(1.0, 0.0), cplx(0.15, 0.0), cplx(0.0, 0.1)}},
          n)
          .profile);
  ok = ok && asym.residual > 1e-3;
  report(5, "reflection symmetry, both directions", ok,
         std::max(worst, worst_conv));
}

// 6. Paatero bound: flagged exactly when max|phi'/phi^2| exceeds 2 pi, and
// the reported maximum matches a dense scan.
void criterion_6() {
  const auto flat = paatero_check(constant_profile(512));
  bool ok = flat.passes && flat.max_ratio < 1e-12;

  double worst = flat.max_ratio;
  for (double eps : {0.3, 0.9}) {
    std::vector<double> v(512);
    for (std::size_t j = 0; j < 512; ++j)
      v[j] = 1.0 + eps * std::cos(kTwoPi * static_cast<double>(j) / 512.0);
    const auto rep = paatero_check(renormalize_flux(v, 1.0));
    // dense-scan oracle for phi = (1 + eps cos u)/L
    double scan = 0.0;
    const std::size_t pts = 2'000'000;
    for (std::size_t j = 0; j < pts; ++j) {
      const double u = kTwoPi * static_cast<double>(j) / static_cast<double>(pts);
      const double c = 1.0 + eps * std::cos(u);
      scan = std::max(scan, std::abs(kTwoPi * eps * std::sin(u) / (c * c)));
    }
    const double rel = std::abs(rep.max_ratio - scan) / scan;
    worst = std::max(worst, rel * 1e-6);  // scale onto the absolute axis
    ok = ok && rel < 1e-6 && rep.passes == (scan <= kTwoPi);
    if (eps == 0.9) ok = ok && !rep.passes && scan > kTwoPi;
  }
  report(6, "Paatero univalence bound", ok, worst);
}

// 7. Harmonic toolkit exactness on trigonometric polynomials.
void criterion_7() {
  const std::size_t n = 512;
  std::mt19937 rng(20260826);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  double worst = 0.0;

  // Hilbert transform: cos k -> sin k and sin k -> -cos k for every degree
  // k <= N/4, each mode checked individually
  for (std::size_t k = 1; k <= n / 4; ++k) {
    std::vector<double> ck(n), sk(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
      ck[j] = std::cos(k * t);
      sk[j] = std::sin(k * t);
    }
    const PeriodicSamples hc = hilbert(analyze(PeriodicSamples(ck)));
    const PeriodicSamples hs = hilbert(analyze(PeriodicSamples(sk)));
    for (std::size_t j = 0; j < n; ++j) {
      worst = std::max(worst, std::abs(hc.values[j] - sk[j]));
      worst = std::max(worst, std::abs(hs.values[j] + ck[j]));
    }
  }

  // H(H(g)) = -(g - mean g) for a random degree-N/4 polynomial of unit scale
  std::vector<double> a(n / 4 + 1), b(n / 4 + 1);
  const double scale = 1.0 / static_cast<double>(n / 4);
  for (auto& x : a) x = scale * amp(rng);
  for (auto& x : b) x = scale * amp(rng);
  std::vector<double> g(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    double s = a[0];
    for (std::size_t k = 1; k <= n / 4; ++k)
      s += a[k] * std::cos(k * t) + b[k] * std::sin(k * t);
    g[j] = s;
  }
  const PeriodicSamples hhg = hilbert(analyze(hilbert(analyze(PeriodicSamples(g)))));
  for (std::size_t j = 0; j < n; ++j)
    worst = std::max(worst, std::abs(hhg.values[j] + (g[j] - a[0])));

  // Schwarz extension of cos(k theta) is z^k in the open disk
  std::uniform_real_distribution<double> rad(0.0, 0.95), ang(0.0, kTwoPi);
  for (int k : {1, 3, 8}) {
    std::vector<double> ck(n);
    for (std::size_t j = 0; j < n; ++j)
      ck[j] = std::cos(k * kTwoPi * static_cast<double>(j) /
                       static_cast<double>(n));
    const FourierCoefficients ext = analyze(PeriodicSamples(ck));
    for (int trial = 0; trial < 100; ++trial) {
      const cplx z = std::polar(rad(rng), ang(rng));
      worst = std::max(worst, std::abs(schwarz_extend(ext, z) - std::pow(z, k)));
    }
  }
  report(7, "harmonic toolkit exactness", worst < 1e-12, worst);
}

// 8. Inconsistent anchors: zeta_b misplaced by a factor 2 gives residual 1
// and CLI exit code 3.
void criterion_8() {
  const std::size_t n = 512;
  double residual = 0.0;
  bool threw = false;
  try {
    reconstruct(constant_profile(n), Anchors{0.0, 2.0}, n);
  } catch (const InconsistentAnchors& e) {
    threw = true;
    residual = e.residual;
  }
  bool ok = threw && std::abs(residual - 1.0) < 1e-6;

  const fs::path tmp =
      fs::temp_directory_path() /
      ("greentrace_acc_" + std::to_string(std::random_device{}()));
  fs::create_directories(tmp);
  {
    std::ofstream flux(tmp / "flux.csv");
    flux << "s,phi\n";
    for (std::size_t j = 0; j < 128; ++j)
      flux << format_double(kTwoPi * static_cast<double>(j) / 128.0) << ','
           << format_double(1.0 / kTwoPi) << '\n';
    std::ofstream anchors(tmp / "anchors.json");
    anchors << R"({"zeta_c":[0,0],"zeta_b":[2,0]})" << '\n';
  }
  const std::string cmd = std::string(GREENTRACE_CLI_PATH) +
                          " reconstruct --flux " + (tmp / "flux.csv").string() +
                          " --anchors " + (tmp / "anchors.json").string() +
                          " --n 128 --out " + (tmp / "out").string() +
                          " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  ok = ok && status != -1 && WEXITSTATUS(status) == 3;
  std::error_code ec;
  fs::remove_all(tmp, ec);
  report(8, "inconsistent-anchor detection", ok, std::abs(residual - 1.0));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures;
}

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace greentrace {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

bool is_power_of_two(std::size_t n);

/// Real samples on the uniform circle grid theta_j = 2*pi*j/N.
struct PeriodicSamples {
  std::vector<double> values;

  PeriodicSamples() = default;
  explicit PeriodicSamples(std::vector<double> v) : values(std::move(v)) {}
  std::size_t size() const { return values.size(); }
  double operator[](std::size_t j) const { return values[j]; }
};

/// One-sided spectrum of a real trigonometric polynomial on an N-point grid:
/// c_k for k = 0..N/2, c_0 and c_{N/2} real.  Reconstruction convention:
///   g(theta) = c_0 + 2 sum_{k=1}^{N/2-1} Re(c_k e^{ik theta})
///            + c_{N/2} cos(N theta / 2).
class FourierCoefficients {
public:
  FourierCoefficients() = default;
  FourierCoefficients(std::vector<cplx> c, std::size_t grid_n);

  std::size_t grid_size() const { return n_; }
  std::size_t max_mode() const { return n_ / 2; }
  cplx coeff(std::size_t k) const { return c_[k]; }
  std::span<const cplx> coeffs() const { return c_; }

  /// Trigonometric interpolation at an arbitrary angle.
  double eval(double theta) const;
  /// d/dtheta of the interpolant at an arbitrary angle.
  double eval_derivative(double theta) const;
  /// Antiderivative: int_0^theta g(t) dt of the interpolant.
  double eval_cumulative(double theta) const;

private:
  std::vector<cplx> c_;
  std::size_t n_ = 0;
};

/// DFT analysis of real periodic samples (N a power of two, N >= 8).
FourierCoefficients analyze(const PeriodicSamples& samples);

/// Inverse of analyze on the native grid, or resampled onto an n-point grid
/// (n >= the native grid size, power of two).
PeriodicSamples synthesize(const FourierCoefficients& coeffs);
PeriodicSamples synthesize(const FourierCoefficients& coeffs, std::size_t n);

/// Analytic completion G(z) = c_0 + 2 sum_{k>=1} c_k z^k of the boundary data
/// g; Re G is the harmonic extension of g, Im G(0) = 0.  Requires
/// |z| <= 1 - 1e-9; boundary values go through hilbert() instead.
cplx schwarz_extend(const FourierCoefficients& g, cplx z);

/// Conjugate function on the circle: mode e^{ik theta} -> -i sign(k)
/// e^{ik theta}, mean and Nyquist modes -> 0.
PeriodicSamples hilbert(const FourierCoefficients& g);
FourierCoefficients hilbert_coeffs(const FourierCoefficients& g);

/// Spectral derivative d/dtheta on the grid.
PeriodicSamples differentiate(const FourierCoefficients& g);
FourierCoefficients derivative_coeffs(const FourierCoefficients& g);

/// int_0^{theta_j} g dt on the native grid nodes.
std::vector<double> cumulative_grid(const FourierCoefficients& g);

/// Complex DFT helpers (power-of-two lengths): X_k = sum_j x_j e^{-2 pi i jk/N}.
std::vector<cplx> fft(std::span<const cplx> x);
std::vector<cplx> ifft(std::span<const cplx> x);

}  // namespace greentrace

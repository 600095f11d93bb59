#include "greentrace/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>
#include <stdexcept>

#include "greentrace/errors.hpp"

namespace greentrace {

namespace {

// The FFTW planner is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

FourierCoefficients::FourierCoefficients(std::vector<cplx> c, std::size_t grid_n)
    : c_(std::move(c)), n_(grid_n) {
  if (!is_power_of_two(n_) || c_.size() != n_ / 2 + 1)
    throw std::invalid_argument("FourierCoefficients: bad size");
  // c_0 and the Nyquist coefficient represent real modes.
  c_.front() = cplx(c_.front().real(), 0.0);
  c_.back() = cplx(c_.back().real(), 0.0);
}

double FourierCoefficients::eval(double theta) const {
  const std::size_t half = n_ / 2;
  const cplx w = std::polar(1.0, theta);
  // Horner over e^{i theta} for modes 1..N/2-1.
  cplx acc(0.0, 0.0);
  for (std::size_t k = half - 1; k >= 1; --k) {
    acc = (acc + c_[k]) * w;
    if (k == 1) break;
  }
  double v = c_[0].real() + 2.0 * acc.real();
  v += c_[half].real() * std::cos(0.5 * static_cast<double>(n_) * theta);
  return v;
}

double FourierCoefficients::eval_derivative(double theta) const {
  const std::size_t half = n_ / 2;
  const cplx w = std::polar(1.0, theta);
  cplx acc(0.0, 0.0);
  for (std::size_t k = half - 1; k >= 1; --k) {
    acc = (acc + cplx(0.0, static_cast<double>(k)) * c_[k]) * w;
    if (k == 1) break;
  }
  const double nh = 0.5 * static_cast<double>(n_);
  double v = 2.0 * acc.real();
  v -= c_[half].real() * nh * std::sin(nh * theta);
  return v;
}

double FourierCoefficients::eval_cumulative(double theta) const {
  const std::size_t half = n_ / 2;
  double v = c_[0].real() * theta;
  const cplx w = std::polar(1.0, theta);
  cplx wk = w;
  for (std::size_t k = 1; k < half; ++k) {
    // int_0^theta e^{ikt} dt = (e^{ik theta} - 1)/(ik)
    v += 2.0 * ((wk - 1.0) / cplx(0.0, static_cast<double>(k)) * c_[k]).real();
    wk *= w;
  }
  const double nh = 0.5 * static_cast<double>(n_);
  v += c_[half].real() * std::sin(nh * theta) / nh;
  return v;
}

FourierCoefficients analyze(const PeriodicSamples& samples) {
  const std::size_t n = samples.size();
  if (n < 8 || !is_power_of_two(n))
    throw std::invalid_argument("analyze: N must be a power of two >= 8");
  double* in = fftw_alloc_real(n);
  fftw_complex* out = fftw_alloc_complex(n / 2 + 1);
  std::memcpy(in, samples.values.data(), n * sizeof(double));
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in, out, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::vector<cplx> c(n / 2 + 1);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k <= n / 2; ++k)
    c[k] = cplx(out[k][0] * inv_n, out[k][1] * inv_n);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(in);
  fftw_free(out);
  return FourierCoefficients(std::move(c), n);
}

PeriodicSamples synthesize(const FourierCoefficients& coeffs) {
  return synthesize(coeffs, coeffs.grid_size());
}

PeriodicSamples synthesize(const FourierCoefficients& coeffs, std::size_t n) {
  if (!is_power_of_two(n) || n < coeffs.grid_size())
    throw std::invalid_argument("synthesize: bad target grid size");
  fftw_complex* in = fftw_alloc_complex(n / 2 + 1);
  double* out = fftw_alloc_real(n);
  std::memset(in, 0, (n / 2 + 1) * sizeof(fftw_complex));
  for (std::size_t k = 0; k <= coeffs.max_mode(); ++k) {
    in[k][0] = coeffs.coeff(k).real();
    in[k][1] = coeffs.coeff(k).imag();
  }
  if (n > coeffs.grid_size()) {
    // Zero-padded resampling: on the finer grid the old Nyquist cosine is an
    // ordinary mode and the c2r transform doubles one-sided entries, so halve
    // it to preserve the interpolant.
    const std::size_t m = coeffs.max_mode();
    in[m][0] *= 0.5;
    in[m][1] *= 0.5;
  }
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_c2r_1d(static_cast<int>(n), in, out, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::vector<double> v(out, out + n);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(in);
  fftw_free(out);
  return PeriodicSamples(std::move(v));
}

cplx schwarz_extend(const FourierCoefficients& g, cplx z) {
  if (std::abs(z) > 1.0 - 1e-9)
    throw EvaluationTooCloseToBoundary(
        "schwarz_extend: |z| > 1 - 1e-9; use the boundary path (hilbert)");
  const std::size_t half = g.max_mode();
  // Horner: G(z) = c_0 + 2 sum_{k=1}^{N/2-1} c_k z^k + c_{N/2} z^{N/2}
  cplx acc = g.coeff(half) * 0.5;
  for (std::size_t k = half - 1; k >= 1; --k) {
    acc = acc * z + g.coeff(k);
    if (k == 1) break;
  }
  return g.coeff(0).real() + 2.0 * acc * z;
}

FourierCoefficients hilbert_coeffs(const FourierCoefficients& g) {
  std::vector<cplx> c(g.coeffs().begin(), g.coeffs().end());
  c.front() = 0.0;
  c.back() = 0.0;  // Nyquist cosine mode has conjugate 0 by convention
  const cplx mi(0.0, -1.0);
  for (std::size_t k = 1; k < g.max_mode(); ++k) c[k] *= mi;
  return FourierCoefficients(std::move(c), g.grid_size());
}

PeriodicSamples hilbert(const FourierCoefficients& g) {
  return synthesize(hilbert_coeffs(g));
}

FourierCoefficients derivative_coeffs(const FourierCoefficients& g) {
  std::vector<cplx> c(g.coeffs().begin(), g.coeffs().end());
  c.front() = 0.0;
  // The Nyquist cosine's derivative vanishes at the grid nodes.
  c.back() = 0.0;
  for (std::size_t k = 1; k < g.max_mode(); ++k)
    c[k] *= cplx(0.0, static_cast<double>(k));
  return FourierCoefficients(std::move(c), g.grid_size());
}

PeriodicSamples differentiate(const FourierCoefficients& g) {
  return synthesize(derivative_coeffs(g));
}

std::vector<double> cumulative_grid(const FourierCoefficients& g) {
  const std::size_t n = g.grid_size();
  std::vector<double> out(n);
  // Oscillatory part via inverse FFT of the integrated modes, linear part
  // from the mean.
  std::vector<cplx> c(g.coeffs().begin(), g.coeffs().end());
  const double mean = c.front().real();
  c.front() = 0.0;
  c.back() = 0.0;  // contributes sin(N theta/2)/ (N/2) = 0 at the nodes
  double offset = 0.0;
  for (std::size_t k = 1; k < g.max_mode(); ++k) {
    c[k] /= cplx(0.0, static_cast<double>(k));
    offset += 2.0 * c[k].real();  // value of the integrated mode at theta=0
  }
  PeriodicSamples osc = synthesize(FourierCoefficients(std::move(c), n));
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    out[j] = mean * theta + osc[j] - offset;
  }
  return out;
}

std::vector<cplx> fft(std::span<const cplx> x) {
  const std::size_t n = x.size();
  if (!is_power_of_two(n)) throw std::invalid_argument("fft: power of two only");
  std::vector<cplx> out(n);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(
        static_cast<int>(n),
        reinterpret_cast<fftw_complex*>(const_cast<cplx*>(x.data())),
        reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD,
        FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

std::vector<cplx> ifft(std::span<const cplx> x) {
  const std::size_t n = x.size();
  if (!is_power_of_two(n)) throw std::invalid_argument("ifft: power of two only");
  std::vector<cplx> out(n);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(
        static_cast<int>(n),
        reinterpret_cast<fftw_complex*>(const_cast<cplx*>(x.data())),
        reinterpret_cast<fftw_complex*>(out.data()), FFTW_BACKWARD,
        FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  for (auto& v : out) v *= inv_n;
  return out;
}

}  // namespace greentrace

#include "spdc/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <fftw3.h>

#include "spdc/errors.hpp"

namespace spdc {

namespace {

// FFTW's planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwDeleter {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace

std::vector<double> fourier_magnitude(const MomentumFunction& f, const Axis& window1,
                                      const Axis& window2, std::size_t dft_size) {
  const std::size_t n = dft_size;
  if (!is_power_of_two(n) || n < 64)
    throw std::invalid_argument("dft_size must be a power of two >= 64");
  if (window1.count > n || window2.count > n)
    throw std::invalid_argument("dft_size must be at least the window size");
  if (!(window1.step > 0) || !(window2.step > 0))
    throw std::invalid_argument("window steps must be positive");

  const double two_pi = 2.0 * std::numbers::pi;
  const double dq1 = two_pi / (static_cast<double>(n) * window1.step);
  const double dq2 = two_pi / (static_cast<double>(n) * window2.step);
  const auto half = static_cast<double>(n / 2);

  std::unique_ptr<fftw_complex[], FftwDeleter> buf(fftw_alloc_complex(n * n));
  auto* data = reinterpret_cast<std::complex<double>*>(buf.get());

  std::vector<double> q2s(n);
  std::vector<std::complex<double>> ramp2(n);
  for (std::size_t b = 0; b < n; ++b) {
    q2s[b] = (static_cast<double>(b) - half) * dq2;
    ramp2[b] = std::polar(1.0, -q2s[b] * window2.start);
  }

  double peak = 0;
  double boundary = 0;
  for (std::size_t a = 0; a < n; ++a) {
    const double q1 = (static_cast<double>(a) - half) * dq1;
    const std::complex<double> ramp1 = std::polar(1.0, -q1 * window1.start);
    for (std::size_t b = 0; b < n; ++b) {
      const double v = f(q1, q2s[b]);
      peak = std::max(peak, std::abs(v));
      if (a == 0 || b == 0 || a == n - 1 || b == n - 1) boundary = std::max(boundary, std::abs(v));
      data[a * n + b] = v * ramp1 * ramp2[b];
    }
  }
  if (!(peak > 0)) throw AccuracyError("fourier_magnitude: integrand vanishes on the grid");
  if (boundary > 1e-12 * peak) {
    std::ostringstream os;
    os << "fourier_magnitude: momentum grid too small, boundary/peak = " << boundary / peak;
    throw AccuracyError(os.str());
  }

  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_2d(static_cast<int>(n), static_cast<int>(n), buf.get(), buf.get(),
                            FFTW_FORWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }

  const double measure = dq1 * dq2;
  double out_peak = 0;
  for (std::size_t k = 0; k < n * n; ++k) out_peak = std::max(out_peak, std::abs(data[k]));

  // Cells halfway between the window and its periodic image.
  // A window filling the whole period borders its image at its own edges.
  auto in_gap = [n](std::size_t k, std::size_t m) {
    const std::size_t gap = n - m;
    if (gap == 0) return k == 0 || k == n - 1;
    return k >= m + gap / 4 && k < m + (3 * gap) / 4 + 1;
  };
  double wrap = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (in_gap(a, window1.count) || in_gap(b, window2.count))
        wrap = std::max(wrap, std::abs(data[a * n + b]));
  if (wrap > 1e-6 * out_peak) {
    std::ostringstream os;
    os << "fourier_magnitude: dft_size too small, wrap-around/peak = " << wrap / out_peak;
    throw AccuracyError(os.str());
  }

  std::vector<double> out(window1.count * window2.count);
  for (std::size_t i = 0; i < window1.count; ++i)
    for (std::size_t j = 0; j < window2.count; ++j)
      out[i * window2.count + j] = std::abs(data[i * n + j]) * measure;
  return out;
}

} // namespace spdc

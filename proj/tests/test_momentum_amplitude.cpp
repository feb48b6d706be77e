#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "spdc/momentum_amplitude.hpp"

using namespace spdc;

namespace {

// Independent re-evaluation of the three factors, written without the
// library's helpers.
double phi_q_oracle(const TransversePair& p, double sigma, const DetectionFilter& fs,
                    const DetectionFilter& fi) {
  const double pump = std::exp(-sigma * sigma *
                               (std::pow(p.q_sx + p.q_ix, 2) + std::pow(p.q_sy + p.q_iy, 2)));
  const double filt_s = std::exp(-(std::pow(fs.sigma_x * p.q_sx, 2) + std::pow(fs.sigma_y * p.q_sy, 2)));
  const double filt_i = std::exp(-(std::pow(fi.sigma_x * p.q_ix, 2) + std::pow(fi.sigma_y * p.q_iy, 2)));
  return pump * filt_s * filt_i;
}

QuantumParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> w(0.2, 2.0);
  return {{405e-9, 1e12, w(rng)}, {w(rng), w(rng), 1e-13}, {w(rng), w(rng), 2e-13}};
}

TransversePair random_pair(std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> n(0.0, scale);
  return {n(rng), n(rng), n(rng), n(rng)};
}

} // namespace

TEST_CASE("pump envelope") {
  const PumpBeam p{405e-9, 0, 1.5};
  CHECK(pump_envelope(0.0, p) == 1.0);
  CHECK(pump_envelope(1.0 / (1.5 * 1.5), p) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  const PumpBeam p2{405e-9, 0, 3.0};
  const double q2 = 0.37;
  CHECK(pump_envelope(q2, p2) == doctest::Approx(std::pow(pump_envelope(q2, p), 4)).epsilon(1e-13));
}

TEST_CASE("spectral envelope") {
  CHECK(spectral_envelope(0.0, 1e-13) == 1.0);
  CHECK(spectral_envelope(1e13, 1e-13) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(spectral_envelope(2.5e12, 3e-13) == spectral_envelope(-2.5e12, 3e-13));
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(spectral_envelope(0.0, inf) == 1.0);
  CHECK(spectral_envelope(1.0, inf) == 0.0);
}

TEST_CASE("phi_q examples") {
  const PumpBeam pump{405e-9, 0, 0.8};
  const DetectionFilter f{0.5, 0.7, 0};
  CHECK(phi_q({0, 0, 0, 0}, pump, f, f) == 1.0);

  // Perfect anticorrelation saturates the pump factor; with filter widths
  // going to zero the amplitude tends to 1.
  const DetectionFilter narrow{1e-9, 1e-9, 0};
  CHECK(phi_q({3.0, -2.0, -3.0, 2.0}, pump, narrow, narrow) == doctest::Approx(1.0).epsilon(1e-15));
  const DetectionFilter zero{0, 0, 0};
  CHECK(phi_q({3.0, -2.0, -3.0, 2.0}, pump, zero, zero) == 1.0);

  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const QuantumParams p = random_params(rng);
    const TransversePair pair = random_pair(rng, 1.0);
    CHECK(phi_q(pair, p.pump, p.signal, p.idler) ==
          doctest::Approx(phi_q_oracle(pair, p.pump.sigma, p.signal, p.idler)).epsilon(1e-13));
  }
}

TEST_CASE("phi_omega examples") {
  const PumpBeam pump{405e-9, 8.9e12, 1};
  const DetectionFilter fs{1, 1, 1e-13};
  const DetectionFilter fi{1, 1, 3e-13};
  CHECK(phi_omega({0, 0, 0}, pump, fs, fi) == 1.0);
  const DetectionFilter open{1, 1, 0};
  CHECK(phi_omega({0, 4e12, -4e12}, pump, open, open) == 1.0);

  std::mt19937_64 rng(5);
  std::normal_distribution<double> n(0.0, 3e12);
  for (int k = 0; k < 100; ++k) {
    const SpectralPoint pt{0, n(rng), n(rng)};
    const double tp = 2.0 / pump.delta_omega;
    const double expect = std::exp(-tp * tp * std::pow(pt.omega_s + pt.omega_i, 2)) *
                          std::exp(-std::pow(fi.alpha * pt.omega_i, 2)) *
                          std::exp(-std::pow(fs.alpha * pt.omega_s, 2));
    CHECK(phi_omega(pt, pump, fs, fi) == doctest::Approx(expect).epsilon(1e-13));
  }
}

TEST_CASE("axis quadratic form") {
  const PumpBeam pump{405e-9, 0, 1.0};
  const DetectionFilter f{1.0, 1.0, 0};
  const QuadraticForm2 a = axis_quadratic_form(Axis2D::x, pump, f, f);
  CHECK(a.a_s == 2.0);
  CHECK(a.a_i == 2.0);
  CHECK(a.b == 1.0);
  CHECK(a.determinant() == 3.0);

  // phi_q along x against exp(-q^T A q) at 100 random points
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n(0.0, 0.8);
  for (int k = 0; k < 100; ++k) {
    const double qs = n(rng), qi = n(rng);
    CHECK(phi_q({qs, 0, qi, 0}, pump, f, f) ==
          doctest::Approx(std::exp(-(2 * qs * qs + 2 * qi * qi + 2 * qs * qi))).epsilon(1e-13));
  }

  CHECK_THROWS_AS(axis_quadratic_form(Axis2D::x, pump, DetectionFilter{0, 0, 0},
                                      DetectionFilter{0, 0, 0}),
                  std::domain_error);

  const QuadraticForm2 decoupled =
      axis_quadratic_form(Axis2D::y, PumpBeam{405e-9, 0, 0.0}, {1, 0.5, 0}, {1, 0.25, 0});
  CHECK(decoupled.b == 0.0);
  CHECK(decoupled.a_s == 0.25);
  CHECK(decoupled.a_i == 0.0625);
}

TEST_CASE("phi_q properties over random parameters") {
  std::mt19937_64 rng(2024);
  for (int set = 0; set < 50; ++set) {
    const QuantumParams p = random_params(rng);
    const QuadraticForm2 ax = axis_quadratic_form(Axis2D::x, p);
    const QuadraticForm2 ay = axis_quadratic_form(Axis2D::y, p);
    for (int k = 0; k < 40; ++k) {
      const TransversePair q = random_pair(rng, 0.7);
      const double v = phi_q(q, p.pump, p.signal, p.idler);
      CHECK(v > 0.0);
      CHECK(v <= 1.0);
      CHECK(v == phi_q({-q.q_sx, -q.q_sy, -q.q_ix, -q.q_iy}, p.pump, p.signal, p.idler));
      const double fx = phi_q({q.q_sx, 0, q.q_ix, 0}, p.pump, p.signal, p.idler);
      const double fy = phi_q({0, q.q_sy, 0, q.q_iy}, p.pump, p.signal, p.idler);
      CHECK(v == doctest::Approx(fx * fy).epsilon(1e-14));
      const double expo = ax.evaluate(q.q_sx, q.q_ix) + ay.evaluate(q.q_sy, q.q_iy);
      CHECK(std::abs(std::log(v) + expo) <= 1e-12 * expo);
    }
  }
}

TEST_CASE("momentum anticorrelation under |phi_q|^2 by quadrature") {
  const DetectionFilter f{0.6, 0.6, 0};
  for (double sigma : {0.1, 0.3, 0.6, 1.0, 2.0}) {
    const PumpBeam pump{405e-9, 0, sigma};
    // Trapezoid-free Riemann sum on a grid wide enough for the narrowest axis.
    const int n = 401;
    const double half = 12.0;
    const double h = 2 * half / (n - 1);
    double m = 0, sxx = 0, sii = 0, sxi = 0;
    for (int a = 0; a < n; ++a) {
      const double qs = -half + a * h;
      for (int b = 0; b < n; ++b) {
        const double qi = -half + b * h;
        const double w = std::pow(phi_q({qs, 0, qi, 0}, pump, f, f), 2);
        m += w;
        sxx += w * qs * qs;
        sii += w * qi * qi;
        sxi += w * qs * qi;
      }
    }
    const double rho = sxi / std::sqrt(sxx * sii);
    CHECK(rho < 0.0);
    // closed form -b / sqrt(a_s a_i)
    const double a = sigma * sigma + 0.36;
    CHECK(rho == doctest::Approx(-sigma * sigma / a).epsilon(1e-9));
  }
}

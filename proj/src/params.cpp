#include "spdc/params.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace spdc {

namespace {

void require(bool ok, const std::string& key, double value, const char* what) {
  if (ok) return;
  std::ostringstream os;
  os << key << " = " << value << " " << what;
  throw std::invalid_argument(os.str());
}

bool finite(double v) { return std::isfinite(v); }

} // namespace

void PumpBeam::validate() const {
  require(finite(lambda_p) && lambda_p > 0, "pump.lambda_p", lambda_p, "must be > 0");
  require(finite(delta_omega) && delta_omega >= 0, "pump.delta_omega", delta_omega,
          "must be >= 0");
  require(finite(sigma) && sigma > 0, "pump.sigma", sigma, "must be > 0");
}

double PumpBeam::spectral_time_width() const {
  if (delta_omega == 0) return std::numeric_limits<double>::infinity();
  return 2.0 / delta_omega;
}

void DetectionFilter::validate(std::string_view prefix) const {
  const std::string p(prefix);
  require(finite(sigma_x) && sigma_x > 0, p + ".sigma_x", sigma_x, "must be > 0");
  require(finite(sigma_y) && sigma_y > 0, p + ".sigma_y", sigma_y, "must be > 0");
  require(finite(alpha) && alpha >= 0, p + ".alpha", alpha, "must be >= 0");
}

void ExperimentGeometry::validate() const {
  require(finite(L_D) && L_D > 0, "geometry.L_D", L_D, "must be > 0");
  require(finite(d_i) && d_i > 0, "geometry.d_i", d_i, "must be > 0");
  require(finite(d_s) && d_s > 0, "geometry.d_s", d_s, "must be > 0");
  require(finite(ring_diameter) && ring_diameter > 0, "geometry.ring_diameter",
          ring_diameter, "must be > 0");
  require(finite(ring_half_width) && ring_half_width >= 0, "geometry.ring_half_width",
          ring_half_width, "must be >= 0");
  require(finite(pinhole_radius) && pinhole_radius > 0, "geometry.pinhole_radius",
          pinhole_radius, "must be > 0");
  constexpr double half_pi = std::numbers::pi / 2;
  require(phi_i > 0 && phi_i < half_pi, "geometry.phi_i", phi_i, "must lie in (0, pi/2)");
  require(phi_s > 0 && phi_s < half_pi, "geometry.phi_s", phi_s, "must lie in (0, pi/2)");
  if (!(ring_half_width < ring_diameter)) {
    std::ostringstream os;
    os << "geometry.ring_half_width = " << ring_half_width
       << " must be smaller than geometry.ring_diameter = " << ring_diameter;
    throw std::invalid_argument(os.str());
  }
}

double degenerate_wavelength(const PumpBeam& pump) { return 2.0 * pump.lambda_p; }

double cone_angle_from_offset(double radial_offset, double distance) {
  if (!(distance > 0)) throw std::domain_error("cone_angle_from_offset: distance must be > 0");
  if (!(radial_offset >= 0))
    throw std::domain_error("cone_angle_from_offset: radial offset must be >= 0");
  return radial_offset / distance;
}

double ring_radius(const ExperimentGeometry& geom, double angle) { return geom.L_D * angle; }

double energy_residual(const SpectralPoint& pt) {
  return pt.omega_s + pt.omega_i - pt.omega_p;
}

double bandwidth_to_delta_omega(double lambda, double dlambda) {
  if (!(lambda > 0)) throw std::domain_error("bandwidth_to_delta_omega: lambda must be > 0");
  return 2.0 * std::numbers::pi * kSpeedOfLight * dlambda / (lambda * lambda);
}

} // namespace spdc

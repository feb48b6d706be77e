#include "spdc/momentum_amplitude.hpp"

#include <cmath>
#include <stdexcept>

namespace spdc {

double pump_envelope(double q_sum_sq, const PumpBeam& pump) {
  return std::exp(-pump.sigma * pump.sigma * q_sum_sq);
}

double spectral_envelope(double omega, double width) {
  if (std::isinf(width)) return omega == 0 ? 1.0 : 0.0;
  return std::exp(-width * width * omega * omega);
}

double phi_q(const TransversePair& pair, const PumpBeam& pump, const DetectionFilter& f_s,
             const DetectionFilter& f_i) {
  const double sum_x = pair.q_sx + pair.q_ix;
  const double sum_y = pair.q_sy + pair.q_iy;
  const double sx = f_s.sigma_x * pair.q_sx;
  const double sy = f_s.sigma_y * pair.q_sy;
  const double ix = f_i.sigma_x * pair.q_ix;
  const double iy = f_i.sigma_y * pair.q_iy;
  return pump_envelope(sum_x * sum_x + sum_y * sum_y, pump) *
         std::exp(-(sx * sx + sy * sy)) * std::exp(-(ix * ix + iy * iy));
}

double phi_omega(const SpectralPoint& pt, const PumpBeam& pump, const DetectionFilter& f_s,
                 const DetectionFilter& f_i) {
  return spectral_envelope(pt.omega_s + pt.omega_i, pump.spectral_time_width()) *
         spectral_envelope(pt.omega_i, f_i.alpha) * spectral_envelope(pt.omega_s, f_s.alpha);
}

QuadraticForm2 axis_quadratic_form(Axis2D axis, const PumpBeam& pump, const DetectionFilter& f_s,
                                   const DetectionFilter& f_i) {
  const double s = axis == Axis2D::x ? f_s.sigma_x : f_s.sigma_y;
  const double i = axis == Axis2D::x ? f_i.sigma_x : f_i.sigma_y;
  const double p2 = pump.sigma * pump.sigma;
  const QuadraticForm2 form{p2 + s * s, p2 + i * i, p2};
  // det = p2 (s^2 + i^2) + s^2 i^2; compare against the scale of the entries
  // so that round-off at vanishing filter widths is still rejected.
  const double scale = form.a_s * form.a_i;
  if (!(form.a_s > 0) || !(form.a_i > 0) || !(form.determinant() > 1e-14 * scale))
    throw std::domain_error("axis_quadratic_form: form is not positive definite");
  return form;
}

} // namespace spdc

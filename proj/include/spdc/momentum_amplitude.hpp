#pragma once

#include "spdc/params.hpp"

namespace spdc {

enum class Axis2D { x, y };

/// Transverse wavenumbers of the signal and idler photons (rad/m).
struct TransversePair {
  double q_sx{};
  double q_sy{};
  double q_ix{};
  double q_iy{};
};

/// Symmetric form [[a_s, b], [b, a_i]] in the exponent of the momentum
/// amplitude along one transverse axis: phi = exp(-(a_s q_s^2 + 2 b q_s q_i + a_i q_i^2)).
struct QuadraticForm2 {
  double a_s{};
  double a_i{};
  double b{};

  double determinant() const { return a_s * a_i - b * b; }
  double evaluate(double q_s, double q_i) const {
    return a_s * q_s * q_s + 2.0 * b * q_s * q_i + a_i * q_i * q_i;
  }
};

/// Signal/idler filters together with the pump: everything the spatial
/// biphoton amplitude depends on.
struct QuantumParams {
  PumpBeam pump;
  DetectionFilter signal;
  DetectionFilter idler;
};

double pump_envelope(double q_sum_sq, const PumpBeam& pump);

/// exp(-width^2 omega^2). An infinite width gives the monochromatic limit.
double spectral_envelope(double omega, double width);

/// Spatial part of the biphoton amplitude: pump envelope on q_s + q_i times
/// the two detector filters. Global prefactor fixed to 1.
double phi_q(const TransversePair& pair, const PumpBeam& pump, const DetectionFilter& f_s,
             const DetectionFilter& f_i);

/// Spectral part: pump envelope on omega_s + omega_i times both spectral filters.
double phi_omega(const SpectralPoint& pt, const PumpBeam& pump, const DetectionFilter& f_s,
                 const DetectionFilter& f_i);

/// Exponent of phi_q along one axis. Throws std::domain_error when the form is
/// not positive definite (e.g. vanishing filter widths).
QuadraticForm2 axis_quadratic_form(Axis2D axis, const PumpBeam& pump, const DetectionFilter& f_s,
                                   const DetectionFilter& f_i);

inline QuadraticForm2 axis_quadratic_form(Axis2D axis, const QuantumParams& p) {
  return axis_quadratic_form(axis, p.pump, p.signal, p.idler);
}

} // namespace spdc

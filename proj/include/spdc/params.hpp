#pragma once

#include <string_view>

namespace spdc {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

/// Gaussian pump beam. Spectral quantities are detunings from the central
/// pump frequency, so every envelope peaks at argument zero.
struct PumpBeam {
  double lambda_p{};    ///< central wavelength (m)
  double delta_omega{}; ///< 1/e full spectral width (rad/s)
  double sigma{};       ///< transverse correlation width (m)

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  /// Time width of the pump spectral envelope exp(-w^2 omega^2), i.e. the
  /// amplitude falls to 1/e at |omega| = delta_omega / 2. Infinite for a
  /// monochromatic pump.
  double spectral_time_width() const;
};

/// Gaussian collection mode of one detector.
struct DetectionFilter {
  double sigma_x{}; ///< transverse width along x (m)
  double sigma_y{}; ///< transverse width along y (m)
  double alpha{};   ///< spectral width (s)

  /// `prefix` names the filter in error messages ("filter_s", "filter_i").
  void validate(std::string_view prefix = "filter") const;
};

/// Detection-plane geometry of the two-detector setup.
///
/// The detectors sit on opposite sides of the pump axis at radial offsets
/// d_i and d_s (pinhole centers). The Monte Carlo ring model centers them at
/// +/- ring_diameter/2 so that antipodal pairs can hit both.
struct ExperimentGeometry {
  double L_D{};             ///< crystal-to-detector distance (m)
  double phi_i{};           ///< idler external cone angle (rad)
  double phi_s{};           ///< signal external cone angle (rad)
  double d_i{};             ///< idler radial offset (m)
  double d_s{};             ///< signal radial offset (m)
  double ring_diameter{};   ///< ideal circle diameter d (m)
  double ring_half_width{}; ///< ring half width, band is [d - w, d + w] (m)
  double pinhole_radius{};  ///< (m)

  void validate() const;
};

/// Frequency detunings from (w_p0, w_p0/2, w_p0/2).
struct SpectralPoint {
  double omega_p{};
  double omega_s{};
  double omega_i{};
};

/// Degenerate signal/idler wavelength, 2 * lambda_p.
double degenerate_wavelength(const PumpBeam& pump);

/// Angle subtended by an arc of length `radial_offset` at radius `distance`.
/// Throws std::domain_error for distance <= 0 or a negative offset.
double cone_angle_from_offset(double radial_offset, double distance);

/// Radial position on the detection sphere of radius L_D reached at external
/// angle `angle`; inverse of cone_angle_from_offset.
double ring_radius(const ExperimentGeometry& geom, double angle);

/// omega_s + omega_i - omega_p; zero iff energy is conserved.
double energy_residual(const SpectralPoint& pt);

/// Converts a wavelength bandwidth to an angular-frequency width,
/// 2 pi c dlambda / lambda^2.
double bandwidth_to_delta_omega(double lambda, double dlambda);

} // namespace spdc

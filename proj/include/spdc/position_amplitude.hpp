#pragma once

#include <cstddef>
#include <span>

#include "spdc/grid.hpp"
#include "spdc/momentum_amplitude.hpp"

namespace spdc {

/// Position-space exponent along one axis:
/// amplitude ~ exp(-(c_s r_s^2 + c_i r_i^2 - 2 c_x r_s r_i)).
struct PositionQuadratic {
  double c_s{};
  double c_i{};
  double c_x{};

  double evaluate(double r_s, double r_i) const {
    return c_s * r_s * r_s + c_i * r_i * r_i - 2.0 * c_x * r_s * r_i;
  }
};

/// Gaussian Fourier pair of the momentum form: C = A^-1 / 4 with the sign of
/// the cross term flipped into the bracket. Throws std::domain_error when A
/// is not positive definite.
PositionQuadratic invert_form(const QuadraticForm2& form);

inline constexpr std::size_t kDefaultGridSize = 256;
inline constexpr double kDefaultExtentSigmas = 5.0;
inline constexpr std::size_t kDefaultDftSize = 1024;

/// Standard deviation of the single-photon marginal of each plane coordinate.
/// The position-space coincidence density has covariance A per axis, so these
/// are sqrt(a_s) and sqrt(a_i) of the relevant axis forms.
std::pair<double, double> plane_marginal_std(Plane plane, const QuantumParams& params);

/// Default window: `size` points per axis spanning +/- extent_sigmas marginal
/// standard deviations.
std::pair<Axis, Axis> default_plane_axes(Plane plane, const QuantumParams& params,
                                         std::size_t size = kDefaultGridSize,
                                         double extent_sigmas = kDefaultExtentSigmas);

/// Coincidence density |Phi~|^2 on the plane from the closed form, unit mass.
AmplitudeGrid analytic_position_density(Plane plane, const Axis& axis1, const Axis& axis2,
                                        const QuantumParams& params);
AmplitudeGrid analytic_position_density(Plane plane, std::span<const double> coords1,
                                        std::span<const double> coords2,
                                        const QuantumParams& params);

/// Same density from a discrete Fourier transform of sampled phi_q sectors.
/// Throws AccuracyError when the transform grid cannot meet its accuracy
/// contract for these parameters.
AmplitudeGrid numeric_position_density(Plane plane, const Axis& axis1, const Axis& axis2,
                                       const QuantumParams& params,
                                       std::size_t dft_size = kDefaultDftSize);
AmplitudeGrid numeric_position_density(Plane plane, std::span<const double> coords1,
                                       std::span<const double> coords2,
                                       const QuantumParams& params,
                                       std::size_t dft_size = kDefaultDftSize);

} // namespace spdc

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "spdc/grid.hpp"

namespace spdc {

/// Integrand sampled on the momentum grid.
using MomentumFunction = std::function<double(double q1, double q2)>;

/// |Integral f(q1, q2) exp(-i (q1 x1 + q2 x2)) dq1 dq2| on the window
/// axis1 x axis2, computed with one dft_size x dft_size discrete transform.
///
/// The momentum spacing is chosen so that the transform's output lattice
/// coincides with the window spacing, and a phase ramp shifts the lattice onto
/// the window origin, so no interpolation is involved. A single-point window
/// axis uses its `step` only to set the momentum extent along that dimension.
///
/// Throws AccuracyError if the integrand at the momentum-grid boundary exceeds
/// 1e-12 of its peak or if the periodic images of the result overlap the
/// window (wrap-around amplitude above 1e-6 of peak).
std::vector<double> fourier_magnitude(const MomentumFunction& f, const Axis& window1,
                                      const Axis& window2, std::size_t dft_size);

} // namespace spdc

#include "spdc/position_amplitude.hpp"

#include <cmath>
#include <stdexcept>

#include "spdc/fourier.hpp"

namespace spdc {

namespace {

bool signal_is_x(Plane p) { return p == Plane::xx || p == Plane::xy; }
bool idler_is_x(Plane p) { return p == Plane::xx || p == Plane::yx; }

Axis2D signal_axis(Plane p) { return signal_is_x(p) ? Axis2D::x : Axis2D::y; }
Axis2D idler_axis(Plane p) { return idler_is_x(p) ? Axis2D::x : Axis2D::y; }

nlohmann::json params_json(const QuantumParams& p) {
  return {{"pump.sigma", p.pump.sigma},
          {"filter_s.sigma_x", p.signal.sigma_x},
          {"filter_s.sigma_y", p.signal.sigma_y},
          {"filter_i.sigma_x", p.idler.sigma_x},
          {"filter_i.sigma_y", p.idler.sigma_y}};
}

AmplitudeGrid make_grid(Plane plane, Axis axis1, Axis axis2, Provenance prov,
                        const QuantumParams& params) {
  const auto [n1, n2] = plane_axis_names(plane);
  axis1.name = n1;
  axis2.name = n2;
  AmplitudeGrid g(std::move(axis1), std::move(axis2), prov);
  g.metadata["plane"] = std::string(to_string(plane));
  g.metadata["parameters"] = params_json(params);
  return g;
}

Axis single_point(double step) { return Axis{"", 0.0, step, 1}; }

} // namespace

PositionQuadratic invert_form(const QuadraticForm2& form) {
  const double det = form.determinant();
  if (!(form.a_s > 0) || !(form.a_i > 0) || !(det > 1e-14 * form.a_s * form.a_i))
    throw std::domain_error("invert_form: quadratic form is not positive definite");
  const double k = 1.0 / (4.0 * det);
  return {form.a_i * k, form.a_s * k, form.b * k};
}

std::pair<double, double> plane_marginal_std(Plane plane, const QuantumParams& params) {
  const QuadraticForm2 s = axis_quadratic_form(signal_axis(plane), params);
  const QuadraticForm2 i = axis_quadratic_form(idler_axis(plane), params);
  return {std::sqrt(s.a_s), std::sqrt(i.a_i)};
}

std::pair<Axis, Axis> default_plane_axes(Plane plane, const QuantumParams& params,
                                         std::size_t size, double extent_sigmas) {
  const auto [std1, std2] = plane_marginal_std(plane, params);
  const auto [n1, n2] = plane_axis_names(plane);
  return {Axis::symmetric(n1, extent_sigmas * std1, size),
          Axis::symmetric(n2, extent_sigmas * std2, size)};
}

AmplitudeGrid analytic_position_density(Plane plane, const Axis& axis1, const Axis& axis2,
                                        const QuantumParams& params) {
  const PositionQuadratic cx = invert_form(axis_quadratic_form(Axis2D::x, params));
  const PositionQuadratic cy = invert_form(axis_quadratic_form(Axis2D::y, params));

  AmplitudeGrid g = make_grid(plane, axis1, axis2, Provenance::quantum_analytic, params);
  for (std::size_t a = 0; a < g.axis1.count; ++a) {
    const double r1 = g.axis1[a];
    for (std::size_t b = 0; b < g.axis2.count; ++b) {
      const double r2 = g.axis2[b];
      double exponent = 0;
      switch (plane) {
      case Plane::xx: exponent = cx.evaluate(r1, r2); break;
      case Plane::yy: exponent = cy.evaluate(r1, r2); break;
      case Plane::xy: exponent = cx.evaluate(r1, 0.0) + cy.evaluate(0.0, r2); break;
      case Plane::yx: exponent = cy.evaluate(r1, 0.0) + cx.evaluate(0.0, r2); break;
      }
      g.at(a, b) = std::exp(-2.0 * exponent);
    }
  }
  return normalize_grid(std::move(g));
}

AmplitudeGrid analytic_position_density(Plane plane, std::span<const double> coords1,
                                        std::span<const double> coords2,
                                        const QuantumParams& params) {
  return analytic_position_density(plane, Axis::from_values("", coords1),
                                   Axis::from_values("", coords2), params);
}

AmplitudeGrid numeric_position_density(Plane plane, const Axis& axis1, const Axis& axis2,
                                       const QuantumParams& params, std::size_t dft_size) {
  const MomentumFunction x_sector = [&params](double q_s, double q_i) {
    return phi_q({q_s, 0.0, q_i, 0.0}, params.pump, params.signal, params.idler);
  };
  const MomentumFunction y_sector = [&params](double q_s, double q_i) {
    return phi_q({0.0, q_s, 0.0, q_i}, params.pump, params.signal, params.idler);
  };

  AmplitudeGrid g = make_grid(plane, axis1, axis2, Provenance::quantum_numeric, params);
  g.metadata["dft_size"] = dft_size;
  const std::size_t n1 = g.axis1.count;
  const std::size_t n2 = g.axis2.count;

  if (plane == Plane::xx || plane == Plane::yy) {
    const auto amp =
        fourier_magnitude(plane == Plane::xx ? x_sector : y_sector, g.axis1, g.axis2, dft_size);
    for (std::size_t k = 0; k < amp.size(); ++k) g.values[k] = amp[k] * amp[k];
  } else {
    // Cross planes factor into a signal-only and an idler-only slice.
    const MomentumFunction& signal_sector = plane == Plane::xy ? x_sector : y_sector;
    const MomentumFunction& idler_sector = plane == Plane::xy ? y_sector : x_sector;
    // The held coordinate gets the varying axis's spacing per marginal std.
    const QuadraticForm2 fs = axis_quadratic_form(signal_axis(plane), params);
    const QuadraticForm2 fi = axis_quadratic_form(idler_axis(plane), params);
    const double held_s = g.axis1.step * std::sqrt(fs.a_i / fs.a_s);
    const double held_i = g.axis2.step * std::sqrt(fi.a_s / fi.a_i);
    const auto amp_s = fourier_magnitude(signal_sector, g.axis1, single_point(held_s), dft_size);
    const auto amp_i = fourier_magnitude(idler_sector, single_point(held_i), g.axis2, dft_size);
    for (std::size_t a = 0; a < n1; ++a)
      for (std::size_t b = 0; b < n2; ++b) g.at(a, b) = amp_s[a] * amp_s[a] * amp_i[b] * amp_i[b];
  }
  return normalize_grid(std::move(g));
}

AmplitudeGrid numeric_position_density(Plane plane, std::span<const double> coords1,
                                       std::span<const double> coords2,
                                       const QuantumParams& params, std::size_t dft_size) {
  return numeric_position_density(plane, Axis::from_values("", coords1),
                                  Axis::from_values("", coords2), params, dft_size);
}

} // namespace spdc

#include "hfsent/hydrogen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hfsent/rootfind.hpp"

namespace hfsent {

HfsParams::HfsParams(double temperature_, double xi_) : temperature(temperature_), xi(xi_) {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw std::domain_error("HfsParams: temperature must be > 0");
  if (!(xi >= 0.0) || !std::isfinite(xi))
    throw std::domain_error("HfsParams: xi must be >= 0");
}

Hermitian4 build_hamiltonian(const HfsParams& p) {
  const double xi = p.xi;
  Mat4 h;
  h(0, 0) = 1.0 + 2.0 * xi;
  h(1, 1) = -1.0 + 2.0 * xi;
  h(2, 2) = -1.0 - 2.0 * xi;
  h(3, 3) = 1.0 - 2.0 * xi;
  h(1, 2) = 2.0;
  h(2, 1) = 2.0;
  return Hermitian4(h);
}

HfsEigenSystem analytic_eigensystem(const HfsParams& p) {
  const double xi = p.xi;
  const double s = std::sqrt(1.0 + xi * xi);

  HfsEigenSystem es;
  es.energy_a = -1.0 - 2.0 * s;
  es.energy_b = 1.0 - 2.0 * xi;
  es.energy_c = -1.0 + 2.0 * s;
  es.energy_d = 1.0 + 2.0 * xi;

  const double rp = s + xi;
  const double rm = s - xi;
  const double np = std::sqrt(1.0 + rp * rp);
  const double nm = std::sqrt(1.0 + rm * rm);
  es.x_plus = rp / np;
  es.y_plus = 1.0 / np;
  es.x_minus = rm / nm;
  es.y_minus = -1.0 / nm;

  es.state_d[0] = 1.0;                 // |up up>
  es.state_b[3] = 1.0;                 // |down down>
  es.state_c[1] = es.x_plus;           // x_+ |up down> + y_+ |down up>
  es.state_c[2] = es.y_plus;
  es.state_a[1] = es.x_minus;          // x_- |up down> + y_- |down up>
  es.state_a[2] = es.y_minus;
  return es;
}

Hermitian4 thermal_state(const HfsParams& p) {
  const HfsEigenSystem es = analytic_eigensystem(p);
  const double energies[4] = {es.energy_a, es.energy_b, es.energy_c, es.energy_d};
  const Vec4* states[4] = {&es.state_a, &es.state_b, &es.state_c, &es.state_d};

  const double e_min = *std::min_element(energies, energies + 4);
  double weights[4];
  double z = 0.0;
  for (int u = 0; u < 4; ++u) {
    weights[u] = std::exp(-(energies[u] - e_min) / p.temperature);
    z += weights[u];
  }
  Mat4 rho;
  for (int u = 0; u < 4; ++u) rho = rho + Complex(weights[u] / z) * outer(*states[u], *states[u]);
  return Hermitian4::symmetrized(rho);
}

namespace detail {

ThermoParts thermo_parts(double temperature, double xi) {
  const double s = std::sqrt(1.0 + xi * xi);
  const double u = 2.0 * s / temperature;
  const double v = 2.0 / temperature;
  const double w = 2.0 * std::abs(xi) / temperature;

  ThermoParts parts;
  parts.coherence_num = (1.0 - std::exp(-2.0 * u)) / s;
  parts.entangle_num = parts.coherence_num - 2.0 * std::exp(-(v + u));
  parts.denom = 1.0 + std::exp(-2.0 * u) + std::exp(w - v - u) + std::exp(-(u + v + w));
  return parts;
}

double concurrence_unchecked(double temperature, double xi) {
  const ThermoParts parts = thermo_parts(temperature, xi);
  return std::max(0.0, parts.entangle_num) / parts.denom;
}

double coherence_unchecked(double temperature, double xi) {
  const ThermoParts parts = thermo_parts(temperature, xi);
  return parts.coherence_num / parts.denom;
}

}  // namespace detail

double concurrence_closed_form(const HfsParams& p) {
  return detail::concurrence_unchecked(p.temperature, p.xi);
}

double coherence_closed_form(const HfsParams& p) {
  return detail::coherence_unchecked(p.temperature, p.xi);
}

bool entanglement_condition(const HfsParams& p) {
  return detail::thermo_parts(p.temperature, p.xi).entangle_num > 0.0;
}

double critical_temperature(double xi) {
  if (!(xi >= 0.0) || !std::isfinite(xi)) throw std::domain_error("critical_temperature: xi must be >= 0");

  const auto f = [xi](double t) { return detail::thermo_parts(t, xi).entangle_num; };
  double lo = 0.01;  // entangled for any xi at this temperature
  double hi = 8.0 / std::log(3.0);
  int doublings = 0;
  while (f(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > 64) throw std::runtime_error("critical_temperature: bracketing failed");
  }
  return brent_root(f, lo, hi);
}

std::optional<double> critical_field(double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw std::domain_error("critical_field: temperature must be > 0");

  const auto f = [temperature](double xi) { return detail::thermo_parts(temperature, xi).entangle_num; };
  if (f(0.0) > 0.0) return std::nullopt;  // entangled already at zero field

  double lo = 0.0;
  double hi = 1.0;
  int doublings = 0;
  while (f(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > 64) throw std::runtime_error("critical_field: bracketing failed");
  }
  return brent_root(f, lo, hi);
}

double critical_field_high_t_approx(double temperature) {
  if (!(temperature >= 5.0))
    throw std::domain_error("critical_field_high_t_approx: valid for temperature >= 5");

  // ln(2 xi)/(xi+1) peaks below xi = 3 and decreases beyond; the physical
  // branch is the decreasing one.
  const auto f = [temperature](double xi) { return std::log(2.0 * xi) / (xi + 1.0) - 2.0 / temperature; };
  double lo = 3.0;
  double hi = 6.0;
  int doublings = 0;
  while (f(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > 64) throw std::runtime_error("critical_field_high_t_approx: bracketing failed");
  }
  return brent_root(f, lo, hi);
}

double approx_temperature_for_critical_field(double xi) {
  if (!(xi > 0.5)) throw std::domain_error("approx_temperature_for_critical_field: xi must be > 1/2");
  return 2.0 * (xi + 1.0) / std::log(2.0 * xi);
}

TauCritical tau_c_physical(const PhysicalConstants& k) {
  k.validate();
  const double ln3 = std::log(3.0);
  const double delta_e = k.hfs_splitting_J();

  TauCritical result;
  result.kB_tau_eV = delta_e / ln3 / k.e_charge;
  result.tau_K = delta_e / (k.kB * ln3);
  result.formula_tau_K = (2.0 / (3.0 * ln3)) * (k.alpha * k.alpha * k.hbar * k.hbar) /
                         (k.kB * k.a0 * k.a0) * (k.g_e * k.g_p / k.mp);
  result.formula_rel_dev = std::abs(result.formula_tau_K - result.tau_K) / result.tau_K;
  return result;
}

double xi_to_tesla(double xi, const PhysicalConstants& k) {
  return 2.0 * k.hfs_energy_scale_J() * xi / k.mu_B;
}

double tesla_to_xi(double tesla, const PhysicalConstants& k) {
  return k.mu_B * tesla / (2.0 * k.hfs_energy_scale_J());
}

double dimensionless_temperature_to_kelvin(double temperature, const PhysicalConstants& k) {
  return temperature * k.hfs_energy_scale_J() / k.kB;
}

double kelvin_to_dimensionless_temperature(double tau_K, const PhysicalConstants& k) {
  return tau_K * k.kB / k.hfs_energy_scale_J();
}

}  // namespace hfsent

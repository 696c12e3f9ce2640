#include "hfsent/heisenberg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hfsent {

namespace {

// Energies in units of J, paper order: |up up>, |down down>, triplet, singlet.
void hc_energies(double xi, double out[4]) {
  out[0] = 1.0 + 4.0 * xi;
  out[1] = 1.0 - 4.0 * xi;
  out[2] = 1.0;
  out[3] = -3.0;
}

}  // namespace

HcParams::HcParams(double temperature_, double xi_, bool antiferromagnetic_)
    : temperature(temperature_), xi(xi_), antiferromagnetic(antiferromagnetic_) {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw std::domain_error("HcParams: temperature must be > 0");
  if (!(xi >= 0.0) || !std::isfinite(xi)) throw std::domain_error("HcParams: xi must be >= 0");
}

Hermitian4 build_hc_hamiltonian(const HcParams& p) {
  const double xi = p.xi;
  Mat4 h;
  h(0, 0) = 1.0 + 4.0 * xi;
  h(1, 1) = -1.0;
  h(2, 2) = -1.0;
  h(3, 3) = 1.0 - 4.0 * xi;
  h(1, 2) = 2.0;
  h(2, 1) = 2.0;
  return Hermitian4(h);
}

Hermitian4 hc_thermal_state(const HcParams& p) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Vec4 states[4] = {
      {1.0, 0.0, 0.0, 0.0},                      // |up up>
      {0.0, 0.0, 0.0, 1.0},                      // |down down>
      {0.0, inv_sqrt2, inv_sqrt2, 0.0},          // triplet
      {0.0, inv_sqrt2, -inv_sqrt2, 0.0},         // singlet
  };
  double energies[4];
  hc_energies(p.xi, energies);
  const double beta_j = (p.antiferromagnetic ? 1.0 : -1.0) / p.temperature;

  double scaled[4];
  for (int i = 0; i < 4; ++i) scaled[i] = -beta_j * energies[i];
  const double shift = *std::max_element(scaled, scaled + 4);
  double weights[4];
  double z = 0.0;
  for (int i = 0; i < 4; ++i) {
    weights[i] = std::exp(scaled[i] - shift);
    z += weights[i];
  }
  Mat4 rho;
  for (int i = 0; i < 4; ++i) rho = rho + Complex(weights[i] / z) * outer(states[i], states[i]);
  return Hermitian4::symmetrized(rho);
}

double hc_concurrence(const HcParams& p) {
  const double beta_j = (p.antiferromagnetic ? 1.0 : -1.0) / p.temperature;
  const double a = 4.0 * beta_j;
  const double b = 4.0 * beta_j * p.xi;
  // Scale by exp(-m) so every exponent is <= 0; the sign of the numerator
  // (and with it the max{0, .} cut) is unchanged.
  const double m = std::max({a, std::abs(b), 0.0});
  const double num = std::exp(a - m) - 3.0 * std::exp(-m);
  const double den = std::exp(-m) + std::exp(b - m) + std::exp(-b - m) + std::exp(a - m);
  return std::max(0.0, num / den);
}

double hc_critical_temperature() { return 4.0 / std::log(3.0); }

}  // namespace hfsent

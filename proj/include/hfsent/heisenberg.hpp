#pragma once

#include "hfsent/linalg.hpp"

// Benchmark system: two spins of a 1D Heisenberg chain in a magnetic field.
// Dimensionless units mirror the hydrogen module: energies in |J|,
// T = 1/(beta |J|), xi = mu_B B / (2 |J|). The eigenvectors are
// field-independent (product states and the two Bell combinations), which is
// what makes this system's entanglement qualitatively different from the
// hyperfine manifold.

namespace hfsent {

struct HcParams {
  double temperature = 1.0;       // T = 1/(beta |J|), > 0
  double xi = 0.0;                // mu_B B / (2 |J|), >= 0
  bool antiferromagnetic = true;  // J > 0; false selects J < 0

  HcParams(double temperature_, double xi_, bool antiferromagnetic_ = true);
};

// H / J = sigma_1 . sigma_2 + 2 xi (sigma_1^z + sigma_2^z).
Hermitian4 build_hc_hamiltonian(const HcParams& p);

// Gibbs state of the chain; the coupling sign enters through beta J = +-1/T.
Hermitian4 hc_thermal_state(const HcParams& p);

// Closed-form thermal concurrence,
// C = max{0, (e^{4 beta J} - 3) / (1 + e^{4 beta J xi} + e^{-4 beta J xi} + e^{4 beta J})}.
// Zero for the ferromagnetic sign at any temperature.
double hc_concurrence(const HcParams& p);

// 4 / ln 3, independent of the field.
double hc_critical_temperature();

}  // namespace hfsent

#pragma once

#include <optional>

#include "hfsent/constants.hpp"
#include "hfsent/linalg.hpp"

// Thermal entanglement and coherence of the hyperfine manifold of
// ground-state atomic hydrogen in a static magnetic field.
//
// Everything is dimensionless: energies in units of the hyperfine constant A
// (a quarter of the zero-field splitting), temperature T = 1/(beta A), and
// field strength xi = mu_B B / (2 A). SI units enter only through the
// conversion helpers at the bottom.
//
// Basis order everywhere is (|up up>, |up down>, |down up>, |down down>)
// with the electron spin first.

namespace hfsent {

struct HfsParams {
  double temperature = 1.0;  // T = 1/(beta A), > 0
  double xi = 0.0;           // mu_B B / (2 A), >= 0

  // Throws std::domain_error unless temperature > 0 and xi >= 0.
  HfsParams(double temperature_, double xi_);
};

// Analytic eigensystem of the hyperfine Hamiltonian. Levels are keyed
// a, b, c, d with E_a <= E_c; b and d are the product states
// |down down> and |up up>, a and c mix |up down> and |down up> with
// amplitudes (x_-, y_-) and (x_+, y_+).
struct HfsEigenSystem {
  double energy_a = 0, energy_b = 0, energy_c = 0, energy_d = 0;  // units of A
  Vec4 state_a{}, state_b{}, state_c{}, state_d{};
  double x_plus = 0, x_minus = 0, y_plus = 0, y_minus = 0;
};

// Report of the zero-field entanglement threshold in SI units.
struct TauCritical {
  double kB_tau_eV = 0;       // k_B tau_c as an energy, eV (splitting / ln 3)
  double tau_K = 0;           // tau_c in kelvin, from the measured splitting
  double formula_tau_K = 0;   // same threshold from the fundamental-constants formula
  double formula_rel_dev = 0; // |formula - measured| / measured
};

// H / A in the canonical product basis: the spin-spin contact term plus the
// electron Zeeman term 2 xi sigma_e^z (the nuclear Zeeman term is neglected).
Hermitian4 build_hamiltonian(const HfsParams& p);

HfsEigenSystem analytic_eigensystem(const HfsParams& p);

// Gibbs state exp(-H/T)/Z, assembled from the analytic eigensystem with
// max-shifted exponents so it is stable down to T ~ 1e-3 and below.
Hermitian4 thermal_state(const HfsParams& p);

// Closed-form Wootters concurrence of the thermal state, in [0, 1].
double concurrence_closed_form(const HfsParams& p);

// Closed-form l1-norm coherence of the thermal state in the product basis.
double coherence_closed_form(const HfsParams& p);

// True iff the thermal state is entangled; shares the sign expression with
// concurrence_closed_form exactly.
bool entanglement_condition(const HfsParams& p);

// Temperature at which the concurrence vanishes for a given field.
// 4/ln3 at xi = 0, increasing with xi. Throws std::domain_error for xi < 0
// and std::runtime_error if bracketing fails (xi far beyond 1e4).
double critical_temperature(double xi);

// Smallest field that induces entanglement at temperature T, or nullopt if
// the state is entangled already at zero field (T below 4/ln3).
std::optional<double> critical_field(double temperature);

// High-temperature approximation of the critical field, solving
// 2/T = ln(2 xi) / (xi + 1) on its decreasing branch. Valid for T >= 5.
double critical_field_high_t_approx(double temperature);

// Inverse of the same approximation: the temperature whose approximate
// critical field is xi, T = 2 (xi + 1) / ln(2 xi). Requires xi > 1/2.
double approx_temperature_for_critical_field(double xi);

// Zero-field entanglement threshold in SI units. The primary path uses the
// measured splitting (k_B tau_c = h f / ln 3); the secondary path evaluates
// the fundamental-constants expression and reports its relative deviation.
TauCritical tau_c_physical(const PhysicalConstants& k);

// Field conversions through B = 2 A xi / mu_B with A = h f / 4.
double xi_to_tesla(double xi, const PhysicalConstants& k);
double tesla_to_xi(double tesla, const PhysicalConstants& k);

// Temperature conversions through tau = T A / k_B.
double dimensionless_temperature_to_kelvin(double temperature, const PhysicalConstants& k);
double kelvin_to_dimensionless_temperature(double tau_K, const PhysicalConstants& k);

namespace detail {

// Stable pieces of the closed forms, scaled by 2 exp(-u) with
// u = 2 sqrt(1+xi^2)/T >= v = 2/T, w = 2|xi|/T so every exponent is <= 0:
//   entangle_num  = (1 - e^{-2u})/sqrt(1+xi^2) - 2 e^{-(v+u)}
//   coherence_num = (1 - e^{-2u})/sqrt(1+xi^2)
//   denom         = 1 + e^{-2u} + e^{-(u+v-w)} + e^{-(u+v+w)}
// Concurrence = max(0, entangle_num)/denom, coherence = coherence_num/denom.
// Accepts any real xi (even in xi); used directly by symmetry tests.
struct ThermoParts {
  double entangle_num = 0;
  double coherence_num = 0;
  double denom = 0;
};

ThermoParts thermo_parts(double temperature, double xi);

double concurrence_unchecked(double temperature, double xi);
double coherence_unchecked(double temperature, double xi);

}  // namespace detail

}  // namespace hfsent

#pragma once

#include <filesystem>
#include <string>

namespace hfsent {

// SI-unit constants set (CODATA 2018 defaults). g-factors are stored as
// positive dimensionless magnitudes. hfs_splitting_freq is the measured
// 1S hydrogen hyperfine transition frequency in Hz; it fixes the energy
// scale used by every dimensionless-to-SI conversion.
struct PhysicalConstants {
  double hbar = 1.054571817e-34;       // J s
  double kB = 1.380649e-23;            // J/K
  double c = 299792458.0;              // m/s
  double e_charge = 1.602176634e-19;   // C
  double eps0 = 8.8541878128e-12;      // F/m
  double me = 9.1093837015e-31;        // kg
  double mp = 1.67262192369e-27;       // kg
  double a0 = 5.29177210903e-11;       // m
  double alpha = 7.2973525693e-3;      // dimensionless
  double mu_B = 9.2740100783e-24;      // J/T
  double mu_N = 5.0507837461e-27;      // J/T
  double g_e = 2.00231930436256;       // |g_e|
  double g_p = 5.5856946893;           // g_p
  double rydberg = 10973731.568160;    // 1/m
  double hfs_splitting_freq = 1420405751.768;  // Hz

  static PhysicalConstants codata();

  // Throws std::invalid_argument on a non-positive entry or if mu_B is
  // inconsistent with e*hbar/(2 me) beyond 1e-6 relative.
  void validate() const;

  // Hyperfine energy scale: A = h f / 4 (one quarter of the splitting).
  double hfs_energy_scale_J() const;
  // Full splitting Delta E = h f.
  double hfs_splitting_J() const;
};

// Parses a flat key=value file (SI units). '#' starts a comment; blank lines
// are ignored; unknown keys are rejected. Values present in the file override
// the CODATA defaults. Validates the result before returning.
PhysicalConstants load_constants_file(const std::filesystem::path& path);

// FNV-1a hash over the canonical serialization, as a fixed-width hex string.
// Identifies the constants set in emitted table metadata.
std::string constants_checksum(const PhysicalConstants& k);

}  // namespace hfsent

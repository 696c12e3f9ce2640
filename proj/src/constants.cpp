#include "hfsent/constants.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace hfsent {

namespace {

using Field = std::pair<const char*, double PhysicalConstants::*>;

constexpr std::array<Field, 15> kFields{{
    {"hbar", &PhysicalConstants::hbar},
    {"kB", &PhysicalConstants::kB},
    {"c", &PhysicalConstants::c},
    {"e_charge", &PhysicalConstants::e_charge},
    {"eps0", &PhysicalConstants::eps0},
    {"me", &PhysicalConstants::me},
    {"mp", &PhysicalConstants::mp},
    {"a0", &PhysicalConstants::a0},
    {"alpha", &PhysicalConstants::alpha},
    {"mu_B", &PhysicalConstants::mu_B},
    {"mu_N", &PhysicalConstants::mu_N},
    {"g_e", &PhysicalConstants::g_e},
    {"g_p", &PhysicalConstants::g_p},
    {"rydberg", &PhysicalConstants::rydberg},
    {"hfs_splitting_freq", &PhysicalConstants::hfs_splitting_freq},
}};

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

PhysicalConstants PhysicalConstants::codata() { return PhysicalConstants{}; }

void PhysicalConstants::validate() const {
  for (const auto& [name, member] : kFields) {
    const double value = this->*member;
    if (!(value > 0.0) || !std::isfinite(value))
      throw std::invalid_argument(std::string("constants: ") + name + " must be a positive finite number");
  }
  const double mu_B_derived = e_charge * hbar / (2.0 * me);
  if (std::abs(mu_B_derived - mu_B) > 1e-6 * mu_B)
    throw std::invalid_argument("constants: mu_B is inconsistent with e*hbar/(2 me)");
}

double PhysicalConstants::hfs_splitting_J() const {
  return 2.0 * std::numbers::pi * hbar * hfs_splitting_freq;
}

double PhysicalConstants::hfs_energy_scale_J() const { return hfs_splitting_J() / 4.0; }

PhysicalConstants load_constants_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("constants: cannot open file " + path.string());

  PhysicalConstants k = PhysicalConstants::codata();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("constants: " + path.string() + ":" + std::to_string(lineno) +
                                  ": expected key=value");
    const std::string key = strip(line.substr(0, eq));
    const std::string value_str = strip(line.substr(eq + 1));

    double PhysicalConstants::*member = nullptr;
    for (const auto& [name, field] : kFields) {
      if (key == name) {
        member = field;
        break;
      }
    }
    if (member == nullptr)
      throw std::invalid_argument("constants: " + path.string() + ":" + std::to_string(lineno) +
                                  ": unknown key '" + key + "'");

    double value = 0.0;
    const char* first = value_str.data();
    const char* last = first + value_str.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
      throw std::invalid_argument("constants: " + path.string() + ":" + std::to_string(lineno) +
                                  ": cannot parse value '" + value_str + "'");
    k.*member = value;
  }
  k.validate();
  return k;
}

std::string constants_checksum(const PhysicalConstants& k) {
  std::string canonical;
  char buf[64];
  for (const auto& [name, member] : kFields) {
    std::snprintf(buf, sizeof buf, "%s=%.17g\n", name, k.*member);
    canonical += buf;
  }
  uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char ch : canonical) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hfsent

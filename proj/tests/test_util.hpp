#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfsent/linalg.hpp"

// Shared helpers for the test binaries: deterministic random matrices/states
// and a reader for the library's own CSV output.

namespace hfsent::test {

inline Complex random_complex(std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  return {dist(rng), dist(rng)};
}

inline Mat2 random_mat2(std::mt19937& rng) {
  Mat2 m;
  for (auto& z : m.e) z = random_complex(rng);
  return m;
}

inline Mat4 random_mat4(std::mt19937& rng) {
  Mat4 m;
  for (auto& z : m.e) z = random_complex(rng);
  return m;
}

inline Hermitian4 random_hermitian(std::mt19937& rng) {
  return Hermitian4::symmetrized(random_mat4(rng));
}

// A A^dag / tr, full rank almost surely: a generic mixed state.
inline Hermitian4 random_density(std::mt19937& rng) {
  const Mat4 a = random_mat4(rng);
  Mat4 m = a * adjoint(a);
  m = Complex(1.0 / trace(m).real()) * m;
  return Hermitian4::symmetrized(m);
}

inline Vec4 random_pure_state(std::mt19937& rng) {
  Vec4 v;
  for (auto& z : v) z = random_complex(rng);
  const double n = norm(v);
  for (auto& z : v) z /= n;
  return v;
}

// Haar-ish random 2x2 unitary from a random phase/angle parametrization.
inline Mat2 random_unitary2(std::mt19937& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  const double theta = 0.5 * angle(rng);
  const double a = angle(rng), b = angle(rng), g = angle(rng);
  Mat2 u;
  u(0, 0) = std::polar(std::cos(theta), a);
  u(0, 1) = std::polar(std::sin(theta), b);
  u(1, 0) = -std::polar(std::sin(theta), -b + g);
  u(1, 1) = std::polar(std::cos(theta), -a + g);
  return u;
}

inline double max_entry_distance(const Mat4& a, const Mat4& b) {
  return max_abs(a - b);
}

struct CsvFile {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  int column_index(const std::string& name) const {
    for (size_t i = 0; i < columns.size(); ++i)
      if (columns[i] == name) return static_cast<int>(i);
    throw std::runtime_error("csv: no column named " + name);
  }
};

inline CsvFile read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open " + path);
  CsvFile csv;
  std::string line;
  bool have_columns = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto colon = line.find(": ");
      if (colon != std::string::npos && line.size() > 2)
        csv.metadata.emplace_back(line.substr(2, colon - 2), line.substr(colon + 2));
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!have_columns) {
      csv.columns = fields;
      have_columns = true;
      continue;
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const std::string& f : fields) row.push_back(std::stod(f));
    csv.rows.push_back(std::move(row));
  }
  return csv;
}

}  // namespace hfsent::test

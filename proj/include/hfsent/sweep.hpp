#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hfsent/constants.hpp"

// Grid evaluation over (T, xi) for both models, CSV emission, and the
// figure presets. Rows are independent, so the evaluation loop has an
// OpenMP-parallel kernel next to the serial reference path; both fill
// preallocated row slots and produce byte-identical tables.

namespace hfsent {

enum class Model { HydrogenHfs, Heisenberg };
enum class Axis { Temperature, Field };
enum class Spacing { Linear, Log };
enum class Quantity { Concurrence, Coherence, Energies, Condition };
enum class Execution { Serial, Parallel };

struct AxisRange {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
  Spacing spacing = Spacing::Linear;
};

struct SweepSpec {
  Model model = Model::HydrogenHfs;
  Axis axis = Axis::Temperature;
  AxisRange range;
  std::vector<double> series;       // values of the non-swept parameter
  std::vector<Quantity> quantities; // requested output columns, in order

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct SweepTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;  // first column is the axis
  std::vector<std::vector<double>> rows;
};

SweepTable run_sweep(const SweepSpec& spec, Execution exec = Execution::Parallel,
                     const PhysicalConstants& constants = PhysicalConstants::codata());

// CSV layout: '# key: value' metadata lines, a comma-separated column-name
// row, then data rows. Cells are scientific with 17 significant digits, so
// identical tables serialize to identical bytes.
void write_csv(const SweepTable& table, std::ostream& out);
std::string to_csv(const SweepTable& table);

struct FigurePreset {
  std::string name;
  std::string title;
  std::string xlabel;
  std::string ylabel;
  std::string notes;  // documents the chosen ranges and series
  SweepSpec spec;
};

// Presets fig1b, fig2a, fig2b, fig3a, fig3b, fig4a, fig4b.
// Throws std::invalid_argument for an unknown name.
FigurePreset figure_preset(const std::string& name);
const std::vector<std::string>& figure_preset_names();

// Runs the preset sweep and writes <name>.csv plus a gnuplot script
// <name>.gp (referencing the CSV by relative path) into out_dir.
// Returns the paths written. Throws std::runtime_error if out_dir is not
// writable.
std::vector<std::filesystem::path> emit_figure(
    const FigurePreset& preset, const std::filesystem::path& out_dir,
    Execution exec = Execution::Parallel,
    const PhysicalConstants& constants = PhysicalConstants::codata());

std::string to_string(Model m);
std::string to_string(Axis a);
std::string to_string(Quantity q);

Model model_from_string(const std::string& s);
Axis axis_from_string(const std::string& s);
Quantity quantity_from_string(const std::string& s);

// Shortest round-trip decimal representation (for labels and metadata).
std::string format_value(double v);

}  // namespace hfsent

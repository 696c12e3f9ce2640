#include "hfsent/sweep.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hfsent/entanglement.hpp"
#include "hfsent/heisenberg.hpp"
#include "hfsent/hydrogen.hpp"
#include "hfsent/version.hpp"

namespace hfsent {

namespace {

double axis_value(const AxisRange& r, int i) {
  if (i == 0) return r.min;
  if (i == r.points - 1) return r.max;  // pin endpoints exactly
  const double f = static_cast<double>(i) / (r.points - 1);
  if (r.spacing == Spacing::Log) return r.min * std::pow(r.max / r.min, f);
  return r.min + f * (r.max - r.min);
}

int columns_per_quantity(const Quantity q) { return q == Quantity::Energies ? 4 : 1; }

std::vector<std::string> quantity_column_names(Model model, Quantity q) {
  switch (q) {
    case Quantity::Concurrence: return {"C"};
    case Quantity::Coherence: return {"D"};
    case Quantity::Condition: return {"entangled"};
    case Quantity::Energies:
      if (model == Model::HydrogenHfs) return {"E_a", "E_b", "E_c", "E_d"};
      return {"E_1", "E_2", "E_3", "E_4"};
  }
  throw std::logic_error("unreachable");
}

void evaluate_point(Model model, double temperature, double xi,
                    const std::vector<Quantity>& quantities, double* out) {
  if (model == Model::HydrogenHfs) {
    const HfsParams p(temperature, xi);
    for (Quantity q : quantities) {
      switch (q) {
        case Quantity::Concurrence: *out++ = concurrence_closed_form(p); break;
        case Quantity::Coherence: *out++ = coherence_closed_form(p); break;
        case Quantity::Condition: *out++ = entanglement_condition(p) ? 1.0 : 0.0; break;
        case Quantity::Energies: {
          const HfsEigenSystem es = analytic_eigensystem(p);
          *out++ = es.energy_a;
          *out++ = es.energy_b;
          *out++ = es.energy_c;
          *out++ = es.energy_d;
          break;
        }
      }
    }
  } else {
    const HcParams p(temperature, xi);
    for (Quantity q : quantities) {
      switch (q) {
        case Quantity::Concurrence: *out++ = hc_concurrence(p); break;
        case Quantity::Coherence:
          *out++ = l1_coherence(DensityMatrix4(hc_thermal_state(p)));
          break;
        case Quantity::Condition: *out++ = hc_concurrence(p) > 0.0 ? 1.0 : 0.0; break;
        case Quantity::Energies:
          *out++ = 1.0 + 4.0 * p.xi;
          *out++ = 1.0 - 4.0 * p.xi;
          *out++ = 1.0;
          *out++ = -3.0;
          break;
      }
    }
  }
}

std::string join_values(const std::vector<double>& values) {
  std::string s;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += format_value(values[i]);
  }
  return s;
}

std::string join_quantities(const std::vector<Quantity>& quantities) {
  std::string s;
  for (size_t i = 0; i < quantities.size(); ++i) {
    if (i) s += ',';
    s += to_string(quantities[i]);
  }
  return s;
}

void format_cell(std::string& out, double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
  out.append(buf, res.ptr);
}

}  // namespace

void SweepSpec::validate() const {
  if (!(range.min < range.max)) throw std::invalid_argument("sweep spec: range.min must be < range.max");
  if (range.points < 2) throw std::invalid_argument("sweep spec: range.points must be >= 2");
  if (range.spacing == Spacing::Log && !(range.min > 0.0))
    throw std::invalid_argument("sweep spec: range.min must be > 0 for log spacing");
  if (series.empty()) throw std::invalid_argument("sweep spec: series must not be empty");
  if (quantities.empty()) throw std::invalid_argument("sweep spec: quantities must not be empty");
  for (size_t i = 0; i < quantities.size(); ++i)
    for (size_t j = i + 1; j < quantities.size(); ++j)
      if (quantities[i] == quantities[j])
        throw std::invalid_argument("sweep spec: quantities must be unique");

  const bool axis_is_temperature = axis == Axis::Temperature;
  if (axis_is_temperature && !(range.min > 0.0))
    throw std::invalid_argument("sweep spec: range.min must be > 0 on a temperature axis");
  if (!axis_is_temperature && !(range.min >= 0.0))
    throw std::invalid_argument("sweep spec: range.min must be >= 0 on a field axis");
  for (double s : series) {
    if (!std::isfinite(s)) throw std::invalid_argument("sweep spec: series values must be finite");
    if (axis_is_temperature && !(s >= 0.0))
      throw std::invalid_argument("sweep spec: series (field) values must be >= 0");
    if (!axis_is_temperature && !(s > 0.0))
      throw std::invalid_argument("sweep spec: series (temperature) values must be > 0");
  }
}

SweepTable run_sweep(const SweepSpec& spec, Execution exec, const PhysicalConstants& constants) {
  spec.validate();

  const char* series_param = spec.axis == Axis::Temperature ? "xi" : "T";
  SweepTable table;
  table.columns.push_back(spec.axis == Axis::Temperature ? "T" : "xi");
  int cells_per_series = 0;
  for (Quantity q : spec.quantities) cells_per_series += columns_per_quantity(q);
  for (double s : spec.series)
    for (Quantity q : spec.quantities)
      for (const std::string& base : quantity_column_names(spec.model, q))
        table.columns.push_back(base + "(" + series_param + "=" + format_value(s) + ")");

  const int n = spec.range.points;
  const int row_width = 1 + cells_per_series * static_cast<int>(spec.series.size());
  table.rows.assign(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(row_width), 0.0));

  const auto fill_row = [&](int i) {
    std::vector<double>& row = table.rows[static_cast<size_t>(i)];
    const double x = axis_value(spec.range, i);
    row[0] = x;
    double* out = row.data() + 1;
    for (double s : spec.series) {
      const double temperature = spec.axis == Axis::Temperature ? x : s;
      const double xi = spec.axis == Axis::Temperature ? s : x;
      evaluate_point(spec.model, temperature, xi, spec.quantities, out);
      out += cells_per_series;
    }
  };

  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i) fill_row(i);
  } else {
    for (int i = 0; i < n; ++i) fill_row(i);
  }

  for (const auto& row : table.rows)
    for (double v : row)
      if (std::isnan(v)) throw std::runtime_error("run_sweep: NaN cell in output table");

  std::string range_str = format_value(spec.range.min) + ":" + format_value(spec.range.max) + ":" +
                          std::to_string(spec.range.points);
  if (spec.range.spacing == Spacing::Log) range_str += ":log";
  table.metadata = {
      {"model", to_string(spec.model)},
      {"axis", to_string(spec.axis)},
      {"range", range_str},
      {"series", join_values(spec.series)},
      {"quantities", join_quantities(spec.quantities)},
      {"version", kVersion},
      {"constants", constants_checksum(constants)},
  };
  return table;
}

void write_csv(const SweepTable& table, std::ostream& out) {
  std::string buf;
  for (const auto& [key, value] : table.metadata) {
    buf += "# ";
    buf += key;
    buf += ": ";
    buf += value;
    buf += '\n';
  }
  for (size_t i = 0; i < table.columns.size(); ++i) {
    if (i) buf += ',';
    buf += table.columns[i];
  }
  buf += '\n';
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) buf += ',';
      format_cell(buf, row[i]);
    }
    buf += '\n';
  }
  out << buf;
}

std::string to_csv(const SweepTable& table) {
  std::ostringstream os;
  write_csv(table, os);
  return os.str();
}

namespace {

const std::vector<FigurePreset>& presets() {
  static const std::vector<FigurePreset> list = [] {
    std::vector<FigurePreset> p;
    p.push_back({"fig1b",
                 "Hydrogen HFS concurrence vs temperature",
                 "T",
                 "C",
                 "temperature sweep 0.1..6 (600 points); field series xi = 0, 1, 2, 5",
                 {Model::HydrogenHfs,
                  Axis::Temperature,
                  {0.1, 6.0, 600, Spacing::Linear},
                  {0.0, 1.0, 2.0, 5.0},
                  {Quantity::Concurrence}}});
    p.push_back({"fig2a",
                 "Hydrogen HFS concurrence vs field, below the critical temperature",
                 "xi",
                 "C",
                 "field sweep 0..10 (501 points); temperature series T = 1, 2, 3, 3.5",
                 {Model::HydrogenHfs,
                  Axis::Field,
                  {0.0, 10.0, 501, Spacing::Linear},
                  {1.0, 2.0, 3.0, 3.5},
                  {Quantity::Concurrence}}});
    p.push_back({"fig2b",
                 "Magnetically induced entanglement above the critical temperature",
                 "xi",
                 "C",
                 "field sweep 0..40 (801 points); temperature series T = 4, 6, 10",
                 {Model::HydrogenHfs,
                  Axis::Field,
                  {0.0, 40.0, 801, Spacing::Linear},
                  {4.0, 6.0, 10.0},
                  {Quantity::Concurrence}}});
    p.push_back({"fig3a",
                 "Hydrogen HFS l1 coherence vs temperature",
                 "T",
                 "D",
                 "temperature sweep 0.01..6 (600 points); field series xi = 0, 1, 2, 5",
                 {Model::HydrogenHfs,
                  Axis::Temperature,
                  {0.01, 6.0, 600, Spacing::Linear},
                  {0.0, 1.0, 2.0, 5.0},
                  {Quantity::Coherence}}});
    p.push_back({"fig3b",
                 "Hydrogen HFS l1 coherence vs field",
                 "xi",
                 "D",
                 "field sweep 0..40 (801 points); low-temperature series T = 0.1, 0.2, 0.3, 0.5 "
                 "so the strong-field bunching of the curves is resolved within the plot range",
                 {Model::HydrogenHfs,
                  Axis::Field,
                  {0.0, 40.0, 801, Spacing::Linear},
                  {0.1, 0.2, 0.3, 0.5},
                  {Quantity::Coherence}}});
    p.push_back({"fig4a",
                 "Heisenberg pair concurrence vs temperature",
                 "T",
                 "C",
                 "temperature sweep 0.1..6 (600 points); field series xi = 0, 0.5, 1, 2; all "
                 "series vanish at the same T = 4/ln3",
                 {Model::Heisenberg,
                  Axis::Temperature,
                  {0.1, 6.0, 600, Spacing::Linear},
                  {0.0, 0.5, 1.0, 2.0},
                  {Quantity::Concurrence}}});
    p.push_back({"fig4b",
                 "Heisenberg pair concurrence vs field",
                 "xi",
                 "C",
                 "field sweep 0..2 (801 points); temperature series T = 0.01, 0.05, 0.1, 0.25; "
                 "stepwise drop at xi = 1 sharpens as T decreases",
                 {Model::Heisenberg,
                  Axis::Field,
                  {0.0, 2.0, 801, Spacing::Linear},
                  {0.01, 0.05, 0.1, 0.25},
                  {Quantity::Concurrence}}});
    return p;
  }();
  return list;
}

std::string gnuplot_script(const FigurePreset& preset, int data_columns) {
  std::string gp;
  gp += "# " + preset.name + ": " + preset.title + "\n";
  gp += "# usage: gnuplot -p " + preset.name + ".gp\n";
  gp += "set datafile separator ','\n";
  gp += "set key autotitle columnhead\n";
  gp += "set key top right\n";
  gp += "set xlabel '" + preset.xlabel + "'\n";
  gp += "set ylabel '" + preset.ylabel + "'\n";
  gp += "set grid\n";
  gp += "plot ";
  for (int c = 2; c <= data_columns; ++c) {
    if (c > 2) gp += ", \\\n     ";
    gp += (c == 2 ? "'" + preset.name + ".csv'" : "''");
    gp += " using 1:" + std::to_string(c) + " with lines lw 2";
  }
  gp += "\n";
  return gp;
}

}  // namespace

FigurePreset figure_preset(const std::string& name) {
  for (const FigurePreset& p : presets())
    if (p.name == name) return p;
  throw std::invalid_argument("figure preset: unknown name '" + name + "'");
}

const std::vector<std::string>& figure_preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const FigurePreset& p : presets()) n.push_back(p.name);
    return n;
  }();
  return names;
}

std::vector<std::filesystem::path> emit_figure(const FigurePreset& preset,
                                               const std::filesystem::path& out_dir,
                                               Execution exec, const PhysicalConstants& constants) {
  SweepTable table = run_sweep(preset.spec, exec, constants);
  table.metadata.insert(table.metadata.begin(), {"preset", preset.name});
  table.metadata.push_back({"title", preset.title});
  table.metadata.push_back({"notes", preset.notes});

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);

  const std::filesystem::path csv_path = out_dir / (preset.name + ".csv");
  const std::filesystem::path gp_path = out_dir / (preset.name + ".gp");
  {
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw std::runtime_error("emit_figure: cannot write " + csv_path.string());
    write_csv(table, csv);
  }
  {
    std::ofstream gp(gp_path, std::ios::binary);
    if (!gp) throw std::runtime_error("emit_figure: cannot write " + gp_path.string());
    gp << gnuplot_script(preset, static_cast<int>(table.columns.size()));
  }
  return {csv_path, gp_path};
}

std::string to_string(Model m) {
  return m == Model::HydrogenHfs ? "hydrogen-hfs" : "heisenberg";
}

std::string to_string(Axis a) { return a == Axis::Temperature ? "temperature" : "field"; }

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::Concurrence: return "concurrence";
    case Quantity::Coherence: return "coherence";
    case Quantity::Energies: return "energies";
    case Quantity::Condition: return "condition";
  }
  throw std::logic_error("unreachable");
}

Model model_from_string(const std::string& s) {
  if (s == "hydrogen-hfs") return Model::HydrogenHfs;
  if (s == "heisenberg") return Model::Heisenberg;
  throw std::invalid_argument("unknown model '" + s + "' (expected hydrogen-hfs or heisenberg)");
}

Axis axis_from_string(const std::string& s) {
  if (s == "temperature") return Axis::Temperature;
  if (s == "field") return Axis::Field;
  throw std::invalid_argument("unknown axis '" + s + "' (expected temperature or field)");
}

Quantity quantity_from_string(const std::string& s) {
  if (s == "concurrence") return Quantity::Concurrence;
  if (s == "coherence") return Quantity::Coherence;
  if (s == "energies") return Quantity::Energies;
  if (s == "condition") return Quantity::Condition;
  throw std::invalid_argument("unknown quantity '" + s +
                              "' (expected concurrence, coherence, energies or condition)");
}

std::string format_value(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace hfsent

#include "tailforge/serialization.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <nlohmann/json.hpp>
#include <sstream>

#include "tailforge/errors.hpp"

namespace tailforge {

namespace {

using nlohmann::json;

double number_or_throw(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + " must be a number");
  return j.get<double>();
}

void require_keys(const json& j, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* name : allowed) {
      if (key == name) {
        known = true;
        break;
      }
    }
    if (!known) throw ParseError("unknown key '" + key + "' in " + where);
  }
}

}  // namespace

std::string format_double(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

json table_to_json(const FunctionTable& table) {
  json coords = json::array();
  for (const auto& coord : table.space().coordinates()) {
    json points = json::array();
    for (const auto& point : coord.points()) {
      if (point.scalar && point.components.size() == 1) {
        points.push_back(point.components[0]);
      } else {
        points.push_back(point.components);
      }
    }
    coords.push_back({{"points", points}, {"weights", coord.weights()}});
  }
  return json{{"coordinates", coords}, {"values", table.values()}};
}

FunctionTable table_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("table must be a JSON object");
  require_keys(j, {"coordinates", "values"}, "table");
  if (!j.contains("coordinates") || !j["coordinates"].is_array() || j["coordinates"].empty()) {
    throw ParseError("table needs a non-empty 'coordinates' array");
  }
  if (!j.contains("values") || !j["values"].is_array()) {
    throw ParseError("table needs a 'values' array");
  }

  std::vector<CoordinateSpace> coords;
  std::size_t coord_index = 0;
  for (const auto& cj : j["coordinates"]) {
    const std::string where = "coordinates[" + std::to_string(coord_index) + "]";
    if (!cj.is_object()) throw ParseError(where + " must be an object");
    require_keys(cj, {"points", "weights"}, where);
    if (!cj.contains("points") || !cj["points"].is_array()) {
      throw ParseError(where + " needs a 'points' array");
    }
    if (!cj.contains("weights") || !cj["weights"].is_array()) {
      throw ParseError(where + " needs a 'weights' array");
    }
    std::vector<CoordinatePoint> points;
    std::size_t point_index = 0;
    for (const auto& pj : cj["points"]) {
      const std::string pwhere = where + ".points[" + std::to_string(point_index) + "]";
      if (pj.is_number()) {
        points.push_back(CoordinatePoint::of(pj.get<double>()));
      } else if (pj.is_array()) {
        std::vector<double> components;
        for (const auto& comp : pj) components.push_back(number_or_throw(comp, pwhere));
        points.push_back(CoordinatePoint::of(std::move(components)));
      } else {
        throw ParseError(pwhere + " must be a number or an array of numbers");
      }
      ++point_index;
    }
    std::vector<double> weights;
    std::size_t weight_index = 0;
    for (const auto& wj : cj["weights"]) {
      weights.push_back(
          number_or_throw(wj, where + ".weights[" + std::to_string(weight_index) + "]"));
      ++weight_index;
    }
    try {
      coords.emplace_back(std::move(points), std::move(weights));
    } catch (const std::runtime_error& e) {
      throw ParseError(where + ": " + e.what());
    }
    ++coord_index;
  }

  std::vector<double> values;
  std::size_t value_index = 0;
  bool positive = true;
  for (const auto& vj : j["values"]) {
    const double v = number_or_throw(vj, "values[" + std::to_string(value_index) + "]");
    positive = positive && v > 0.0;
    values.push_back(v);
    ++value_index;
  }

  try {
    ProductSpace space(std::move(coords));
    return FunctionTable(std::move(space), std::move(values), positive);
  } catch (const ParseError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw ParseError(std::string("table: ") + e.what());
  }
}

FunctionTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return table_from_json(j);
}

json delta_report_to_json(const DeltaReport& report) {
  return json{{"choice", to_string(report.choice)},
              {"sup_norm", report.sup_norm},
              {"delta_sq", report.delta_sq.values()}};
}

json simulation_config_to_json(const SimulationConfig& config) {
  return json{{"ensemble", to_string(config.ensemble)},
              {"n", config.n},
              {"N", config.cols},
              {"k", config.k},
              {"dist", to_string(config.dist)},
              {"samples", config.samples},
              {"pilot_samples", config.pilot_samples},
              {"t_grid", config.t_grid},
              {"seed", config.base_seed},
              {"centering", to_string(config.centering)}};
}

SimulationConfig simulation_config_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("simulation config must be an object");
  require_keys(j,
               {"ensemble", "n", "N", "k", "dist", "samples", "pilot_samples", "t_grid", "seed",
                "centering"},
               "simulation config");
  SimulationConfig config;
  if (j.contains("ensemble")) config.ensemble = ensemble_from_string(j["ensemble"].get<std::string>());
  if (j.contains("n")) config.n = j["n"].get<int>();
  if (j.contains("N")) config.cols = j["N"].get<int>();
  if (j.contains("k")) config.k = j["k"].get<int>();
  if (j.contains("dist")) config.dist = entry_distribution_from_string(j["dist"].get<std::string>());
  if (j.contains("samples")) config.samples = j["samples"].get<std::int64_t>();
  if (j.contains("pilot_samples")) config.pilot_samples = j["pilot_samples"].get<std::int64_t>();
  if (j.contains("t_grid")) config.t_grid = j["t_grid"].get<std::vector<double>>();
  if (j.contains("seed")) config.base_seed = j["seed"].get<std::uint64_t>();
  if (j.contains("centering")) config.centering = centering_from_string(j["centering"].get<std::string>());
  return config;
}

std::string tail_report_to_csv(const TailReport& report) {
  std::ostringstream out;
  out << "t,emp_right,emp_left,ci_half,bound_right,bound_left,pass_right,pass_left\n";
  for (const auto& row : report.rows) {
    const double ci_half = std::max(row.ci_half_right, row.ci_half_left);
    out << format_double(row.t) << ',' << format_double(row.emp_right) << ','
        << format_double(row.emp_left) << ',' << format_double(ci_half) << ','
        << format_double(row.bound_right) << ',' << format_double(row.bound_left) << ','
        << (row.pass_right ? 1 : 0) << ',' << (row.pass_left ? 1 : 0) << '\n';
  }
  return out.str();
}

json tail_report_to_json(const TailReport& report) {
  json rows = json::array();
  bool all_pass = true;
  for (const auto& row : report.rows) {
    all_pass = all_pass && row.pass_right && row.pass_left;
    rows.push_back({{"t", row.t},
                    {"emp_right", row.emp_right},
                    {"emp_left", row.emp_left},
                    {"ci_half_right", row.ci_half_right},
                    {"ci_half_left", row.ci_half_left},
                    {"bound_right", row.bound_right},
                    {"bound_left", row.bound_left},
                    {"pass_right", row.pass_right},
                    {"pass_left", row.pass_left}});
  }
  return json{{"config", simulation_config_to_json(report.config)},
              {"center", {{"mean", report.center.mean}, {"std_error", report.center.std_error}}},
              {"rows", rows},
              {"all_pass", all_pass}};
}

std::string spectra_to_csv(std::span<const Spectrum> spectra) {
  std::ostringstream out;
  out << "sample_index,k,lambda\n";
  for (std::size_t s = 0; s < spectra.size(); ++s) {
    for (std::size_t i = 0; i < spectra[s].eigenvalues.size(); ++i) {
      out << s << ',' << (i + 1) << ',' << format_double(spectra[s].eigenvalues[i]) << '\n';
    }
  }
  return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path.string() + "' for writing");
  out << content;
  if (!out) throw ParseError("failed writing '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace tailforge

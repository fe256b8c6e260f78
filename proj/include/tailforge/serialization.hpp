#pragma once

// File formats: JSON for tables and report envelopes, CSV for tabular
// report data. All emitters are deterministic functions of their inputs.

#include <filesystem>
#include <nlohmann/json_fwd.hpp>
#include <span>
#include <string>

#include "tailforge/delta.hpp"
#include "tailforge/montecarlo.hpp"
#include "tailforge/product_space.hpp"
#include "tailforge/spectra.hpp"

namespace tailforge {

// Shortest round-trip decimal representation of a double.
std::string format_double(double x);

// {"coordinates": [{"points": [...], "weights": [...]}], "values": [...]}
// Scalar points serialize as numbers, vector points as arrays. The
// positivity flag is inferred on load: positive iff every value > 0.
nlohmann::json table_to_json(const FunctionTable& table);
FunctionTable table_from_json(const nlohmann::json& j);
FunctionTable load_table(const std::filesystem::path& path);

// {"choice": ..., "sup_norm": ..., "delta_sq": [...]}
nlohmann::json delta_report_to_json(const DeltaReport& report);

nlohmann::json simulation_config_to_json(const SimulationConfig& config);
SimulationConfig simulation_config_from_json(const nlohmann::json& j);

// CSV columns: t, emp_right, emp_left, ci_half, bound_right, bound_left,
// pass_right, pass_left. ci_half is the wider of the two per-side
// Clopper-Pearson half-widths; the JSON envelope carries both exactly.
std::string tail_report_to_csv(const TailReport& report);
nlohmann::json tail_report_to_json(const TailReport& report);

// CSV columns: sample_index, k, lambda (k 1-based, eigenvalues descending).
std::string spectra_to_csv(std::span<const Spectrum> spectra);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace tailforge

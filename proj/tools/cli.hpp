#pragma once

// Command implementations behind the tailforge CLI. Each run_* function is a
// pure function of its options: repeated runs write byte-identical outputs.
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage/config errors.

#include <cstdint>
#include <optional>
#include <string>

namespace tailforge::cli {

struct CommonOptions {
  std::optional<std::string> config_path;
  std::optional<std::string> out_path;
  std::optional<std::string> format;  // "csv" or "json"; empty = both where applicable
  std::optional<std::uint64_t> seed;
  int workers = 0;  // 0 = hardware concurrency
};

struct EntropyCheckOptions {
  CommonOptions common;
  std::optional<std::string> input_path;
  std::optional<std::int64_t> random_tables;
  std::optional<int> max_coords;
  std::optional<int> max_points;
};

struct DeltaOptions {
  CommonOptions common;
  std::optional<std::string> input_path;
  std::optional<std::string> choice;  // "maurer" or "left"
};

struct SimulateOptions {
  CommonOptions common;
};

struct MpCheckOptions {
  CommonOptions common;
  std::optional<std::string> spectra_out;
};

int run_entropy_check(const EntropyCheckOptions& options);
int run_delta(const DeltaOptions& options);
int run_simulate(const SimulateOptions& options);
int run_mp_check(const MpCheckOptions& options);
int run_print_config();

}  // namespace tailforge::cli

#pragma once

// Reproducible Monte Carlo estimation of eigenvalue tail probabilities
// against the closed-form sub-Gaussian bounds. Every sample derives its own
// RNG stream from (base_seed, stream, sample_index), workers write into
// disjoint slots, and all reductions run single-threaded in index order, so
// reports are bitwise identical for any worker count.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tailforge/spectra.hpp"

namespace tailforge {

enum class EnsembleKind {
  kCovariance,  // lambda_k of (1/N) X X^* for an n x N sample
  kSymmetric,   // lambda_k of an n x n bounded symmetric sample
};

enum class Centering {
  kPilotMean,   // mean of an independent pilot batch (disjoint seeds)
  kPooledMean,  // mean of the tail batch itself (biased; for diagnostics)
};

std::string to_string(EnsembleKind kind);
std::string to_string(Centering centering);
EnsembleKind ensemble_from_string(const std::string& name);
Centering centering_from_string(const std::string& name);

struct SimulationConfig {
  EnsembleKind ensemble = EnsembleKind::kCovariance;
  int n = 4;
  int cols = 16;  // N; ignored for the symmetric ensemble
  int k = 1;      // eigenvalue index, 1-based
  EntryDistribution dist = EntryDistribution::kRademacher;
  std::int64_t samples = 20000;
  std::int64_t pilot_samples = 2000;
  std::vector<double> t_grid = default_t_grid();
  std::uint64_t base_seed = 0;
  Centering centering = Centering::kPilotMean;

  static std::vector<double> default_t_grid();  // {0.25, 0.5, ..., 2.0}

  // Throws ConfigError enumerating every problem; nothing is sampled first.
  void validate() const;
};

struct CenterEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

struct TailRow {
  double t = 0.0;
  double emp_right = 0.0;
  double emp_left = 0.0;
  double ci_half_right = 0.0;  // 99% Clopper-Pearson half-width, right tail count
  double ci_half_left = 0.0;
  double bound_right = 0.0;
  double bound_left = 0.0;
  bool pass_right = false;
  bool pass_left = false;
};

struct TailReport {
  SimulationConfig config;
  CenterEstimate center;
  std::vector<TailRow> rows;
};

struct CompareResult {
  bool ok = false;
  std::string summary;
};

// Exact two-sided Clopper-Pearson interval for a binomial proportion.
std::pair<double, double> clopper_pearson(std::int64_t successes, std::int64_t trials,
                                          double confidence = 0.99);

// The pass rule for one tail at one threshold; the boundary is inclusive.
bool tail_passes(double emp, double bound, double ci_half, double center_std_error);

// Theoretical tail bounds (right, left) at threshold t for the configured
// ensemble. Equal on both sides for the covariance ensemble; the symmetric
// ensemble uses the k-th eigenvalue bounds with the wider left tail.
std::pair<double, double> theoretical_bounds(const SimulationConfig& config, double t);

// Mean of lambda_k over an independent pilot batch, with its standard error.
CenterEstimate estimate_center(const SimulationConfig& config, int workers = 1);

// Empirical tail frequencies of lambda_k - center at every t in the grid,
// with Clopper-Pearson intervals, theoretical bounds, and pass flags.
// A row passes when emp <= bound + ci_half + 3 * center std error.
TailReport tail_estimate(const SimulationConfig& config, int workers = 1);

// Overall verdict: ok iff every threshold passes on both sides. The summary
// names the tightest margin and enumerates all failing rows.
CompareResult compare_report(const TailReport& report);

}  // namespace tailforge

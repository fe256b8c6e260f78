#include "tailforge/montecarlo.hpp"

#include <algorithm>
#include <boost/math/distributions/beta.hpp>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "tailforge/errors.hpp"
#include "tailforge/summation.hpp"

namespace tailforge {

namespace {

constexpr std::uint64_t kPilotStream = 1;
constexpr std::uint64_t kTailStream = 2;

double sample_lambda_k(const SimulationConfig& config, const SeedTag& tag) {
  if (config.ensemble == EnsembleKind::kCovariance) {
    const auto sample = sample_rectangular(config.n, config.cols, config.dist, tag);
    return covariance_spectrum(sample).lambda(config.k);
  }
  const auto sample = sample_symmetric(config.n, config.dist, tag);
  return symmetric_spectrum(sample).lambda(config.k);
}

// Workers own disjoint index ranges of a preallocated vector; any exception
// is rethrown on the calling thread with its sample's seed tag intact.
std::vector<double> run_batch(const SimulationConfig& config, std::uint64_t stream,
                              std::int64_t count, int workers) {
  std::vector<double> values(static_cast<std::size_t>(count));
  const int pool = std::max(1, workers);
  const std::int64_t chunk = (count + pool - 1) / pool;

  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(pool));
  for (int w = 0; w < pool; ++w) {
    const std::int64_t begin = std::min<std::int64_t>(count, w * chunk);
    const std::int64_t end = std::min<std::int64_t>(count, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, w, begin, end] {
      try {
        for (std::int64_t i = begin; i < end; ++i) {
          const SeedTag tag{config.base_seed, stream, static_cast<std::uint64_t>(i)};
          values[static_cast<std::size_t>(i)] = sample_lambda_k(config, tag);
        }
      } catch (...) {
        failures[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& thread : threads) thread.join();
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return values;
}

CenterEstimate mean_and_std_error(const std::vector<double>& values) {
  const double count = static_cast<double>(values.size());
  NeumaierSum total;
  for (double v : values) total.add(v);
  const double mean = total.value() / count;

  NeumaierSum sq;
  for (double v : values) sq.add((v - mean) * (v - mean));
  const double variance = values.size() > 1 ? sq.value() / (count - 1.0) : 0.0;
  return {mean, std::sqrt(std::max(0.0, variance) / count)};
}

std::string format_g(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

}  // namespace

std::string to_string(EnsembleKind kind) {
  return kind == EnsembleKind::kCovariance ? "covariance" : "symmetric";
}

std::string to_string(Centering centering) {
  return centering == Centering::kPilotMean ? "pilot_mean" : "pooled_mean";
}

EnsembleKind ensemble_from_string(const std::string& name) {
  if (name == "covariance") return EnsembleKind::kCovariance;
  if (name == "symmetric") return EnsembleKind::kSymmetric;
  throw ConfigError("unknown ensemble '" + name + "'");
}

Centering centering_from_string(const std::string& name) {
  if (name == "pilot_mean") return Centering::kPilotMean;
  if (name == "pooled_mean") return Centering::kPooledMean;
  throw ConfigError("unknown centering '" + name + "'");
}

std::vector<double> SimulationConfig::default_t_grid() {
  return {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
}

void SimulationConfig::validate() const {
  std::vector<std::string> problems;
  if (n < 1) problems.push_back("n must be >= 1");
  if (ensemble == EnsembleKind::kCovariance && cols < 1) problems.push_back("N must be >= 1");
  if (k < 1 || k > n) problems.push_back("eigenvalue index k must satisfy 1 <= k <= n");
  if (samples < 100) problems.push_back("samples must be >= 100");
  if (centering == Centering::kPilotMean && pilot_samples < 100) {
    problems.push_back("pilot_samples must be >= 100 for pilot-mean centering");
  }
  if (t_grid.empty()) problems.push_back("t_grid must not be empty");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] >= 0.0)) {
      problems.push_back("t_grid[" + std::to_string(i) + "] must be >= 0");
    }
    if (i > 0 && t_grid[i] < t_grid[i - 1]) {
      problems.push_back("t_grid must be sorted ascending");
      break;
    }
  }
  if (ensemble == EnsembleKind::kSymmetric && !is_real_distribution(dist)) {
    problems.push_back("symmetric ensemble requires a real entry distribution");
  }
  if (!problems.empty()) {
    std::string joined = "invalid simulation config:";
    for (const auto& problem : problems) joined += "\n  - " + problem;
    throw ConfigError(joined);
  }
}

std::pair<double, double> clopper_pearson(std::int64_t successes, std::int64_t trials,
                                          double confidence) {
  if (trials < 1 || successes < 0 || successes > trials) {
    throw DomainError("clopper_pearson requires 0 <= successes <= trials, trials >= 1");
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw DomainError("confidence must lie in (0, 1)");
  }
  const double alpha = 1.0 - confidence;
  const double k = static_cast<double>(successes);
  const double m = static_cast<double>(trials);
  double lo = 0.0;
  double hi = 1.0;
  if (successes > 0) {
    lo = boost::math::quantile(boost::math::beta_distribution<>(k, m - k + 1.0), alpha / 2.0);
  }
  if (successes < trials) {
    hi = boost::math::quantile(boost::math::beta_distribution<>(k + 1.0, m - k), 1.0 - alpha / 2.0);
  }
  return {lo, hi};
}

bool tail_passes(double emp, double bound, double ci_half, double center_std_error) {
  return emp <= bound + ci_half + 3.0 * center_std_error;
}

std::pair<double, double> theoretical_bounds(const SimulationConfig& config, double t) {
  if (config.ensemble == EnsembleKind::kCovariance) {
    const double n = static_cast<double>(config.n);
    const double sup_norm = n * n / static_cast<double>(config.cols);  // Delta^2 <= n^2/N
    const double bound = tail_bound(t, sup_norm, TailSide::kRight);
    return {bound, bound};
  }
  return maurer_eig_bounds(config.k, t);
}

CenterEstimate estimate_center(const SimulationConfig& config, int workers) {
  config.validate();
  const auto values = run_batch(config, kPilotStream, config.pilot_samples, workers);
  return mean_and_std_error(values);
}

TailReport tail_estimate(const SimulationConfig& config, int workers) {
  config.validate();
  const auto values = run_batch(config, kTailStream, config.samples, workers);

  CenterEstimate center;
  if (config.centering == Centering::kPilotMean) {
    const auto pilot = run_batch(config, kPilotStream, config.pilot_samples, workers);
    center = mean_and_std_error(pilot);
  } else {
    center = mean_and_std_error(values);
  }

  TailReport report;
  report.config = config;
  report.center = center;
  const double m = static_cast<double>(values.size());
  for (const double t : config.t_grid) {
    std::int64_t count_right = 0;
    std::int64_t count_left = 0;
    for (const double v : values) {
      if (v - center.mean >= t) ++count_right;
      if (v - center.mean <= -t) ++count_left;
    }
    TailRow row;
    row.t = t;
    row.emp_right = static_cast<double>(count_right) / m;
    row.emp_left = static_cast<double>(count_left) / m;
    const auto [lo_r, hi_r] = clopper_pearson(count_right, config.samples);
    const auto [lo_l, hi_l] = clopper_pearson(count_left, config.samples);
    row.ci_half_right = 0.5 * (hi_r - lo_r);
    row.ci_half_left = 0.5 * (hi_l - lo_l);
    std::tie(row.bound_right, row.bound_left) = theoretical_bounds(config, t);
    row.pass_right = tail_passes(row.emp_right, row.bound_right, row.ci_half_right,
                                 center.std_error);
    row.pass_left = tail_passes(row.emp_left, row.bound_left, row.ci_half_left, center.std_error);
    report.rows.push_back(row);
  }
  return report;
}

CompareResult compare_report(const TailReport& report) {
  CompareResult result;
  result.ok = true;
  double tightest = std::numeric_limits<double>::infinity();
  double tightest_t = 0.0;
  std::string tightest_side;
  std::vector<std::string> failures;
  const double center_slack = 3.0 * report.center.std_error;

  for (const auto& row : report.rows) {
    const double margin_right = row.bound_right + row.ci_half_right + center_slack - row.emp_right;
    const double margin_left = row.bound_left + row.ci_half_left + center_slack - row.emp_left;
    if (margin_right < tightest) {
      tightest = margin_right;
      tightest_t = row.t;
      tightest_side = "right";
    }
    if (margin_left < tightest) {
      tightest = margin_left;
      tightest_t = row.t;
      tightest_side = "left";
    }
    if (!row.pass_right) {
      result.ok = false;
      failures.push_back("t=" + format_g(row.t) + " right: emp " + format_g(row.emp_right) +
                         " > bound " + format_g(row.bound_right) + " + slack " +
                         format_g(row.ci_half_right + center_slack));
    }
    if (!row.pass_left) {
      result.ok = false;
      failures.push_back("t=" + format_g(row.t) + " left: emp " + format_g(row.emp_left) +
                         " > bound " + format_g(row.bound_left) + " + slack " +
                         format_g(row.ci_half_left + center_slack));
    }
  }

  std::ostringstream out;
  if (result.ok) {
    out << "all " << report.rows.size() << " thresholds pass on both sides";
  } else {
    out << failures.size() << " failing row(s):";
    for (const auto& failure : failures) out << "\n  " << failure;
    out << "\n";
  }
  out << "; tightest margin " << format_g(tightest) << " at t=" << format_g(tightest_t) << " ("
      << tightest_side << " tail); center " << format_g(report.center.mean) << " +- "
      << format_g(report.center.std_error);
  result.summary = out.str();
  return result;
}

}  // namespace tailforge

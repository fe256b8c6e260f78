#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "tailforge/delta.hpp"
#include "tailforge/entropy.hpp"
#include "tailforge/errors.hpp"
#include "tailforge/montecarlo.hpp"
#include "tailforge/mp_law.hpp"
#include "tailforge/random_tables.hpp"
#include "tailforge/serialization.hpp"
#include "tailforge/spectra.hpp"
#include "tailforge/toml_lite.hpp"

namespace tailforge::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kTableStream = 0;
constexpr std::uint64_t kMpStream = 3;

const std::set<std::string> kKnownSections = {"", "entropy_check", "delta", "simulate",
                                              "mp_check"};

bool ends_with(const std::string& text, const std::string& suffix) {
  return text.size() >= suffix.size() &&
         text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

json load_config_document(const std::optional<std::string>& path) {
  if (!path) return json::object();
  const std::string text = read_text_file(*path);
  json doc;
  if (ends_with(*path, ".json")) {
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(*path + ": " + e.what());
    }
  } else {
    doc = parse_toml(text);
  }
  if (!doc.is_object()) throw ParseError(*path + ": config root must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (!kKnownSections.contains(key)) {
      throw ConfigError(*path + ": unknown config section '" + key + "'");
    }
    if (!value.is_object()) {
      throw ConfigError(*path + ": section '" + key + "' must be a table/object");
    }
  }
  return doc;
}

// The command's section merged over any un-sectioned top-level keys.
json section_of(const json& doc, const std::string& name) {
  json section = doc.contains("") ? doc.at("") : json::object();
  if (doc.contains(name)) {
    for (const auto& [key, value] : doc.at(name).items()) section[key] = value;
  }
  return section;
}

// Tracks consumed keys so typos in config files fail loudly.
class SectionReader {
 public:
  SectionReader(json section, std::string name)
      : section_(std::move(section)), name_(std::move(name)) {}

  template <typename T>
  T get(const std::string& key, T fallback) {
    consumed_.insert(key);
    if (!section_.contains(key)) return fallback;
    try {
      return section_.at(key).get<T>();
    } catch (const json::exception& e) {
      throw ConfigError("config key '" + key + "' in [" + name_ + "]: " + e.what());
    }
  }

  std::optional<std::string> get_optional_string(const std::string& key) {
    consumed_.insert(key);
    if (!section_.contains(key)) return std::nullopt;
    return section_.at(key).get<std::string>();
  }

  void finish() const {
    for (const auto& [key, value] : section_.items()) {
      if (!consumed_.contains(key)) {
        throw ConfigError("unknown config key '" + key + "' in [" + name_ + "]");
      }
    }
  }

  const json& raw() const { return section_; }

 private:
  json section_;
  std::string name_;
  std::set<std::string> consumed_;
};

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void emit(const std::optional<std::string>& format, const std::optional<std::string>& out,
          const std::string& default_base, const std::string& csv, const json& j) {
  if (format && *format != "csv" && *format != "json") {
    throw ConfigError("unknown format '" + *format + "' (expected csv or json)");
  }
  if (format && *format == "csv") {
    write_text_file(out.value_or(default_base + ".csv"), csv);
    return;
  }
  if (format && *format == "json") {
    write_text_file(out.value_or(default_base + ".json"), j.dump(2) + "\n");
    return;
  }
  const std::string base = out.value_or(default_base);
  write_text_file(base + ".csv", csv);
  write_text_file(base + ".json", j.dump(2) + "\n");
}

struct CheckRow {
  std::string check;
  std::string choice;
  double lambda = std::numeric_limits<double>::quiet_NaN();
  std::int64_t count = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  std::int64_t violations = 0;

  void record(double margin, double tol) {
    ++count;
    min_margin = std::min(min_margin, margin);
    if (margin < -tol) ++violations;
  }
};

}  // namespace

int run_entropy_check(const EntropyCheckOptions& options) {
  const json doc = load_config_document(options.common.config_path);
  SectionReader section(section_of(doc, "entropy_check"), "entropy_check");

  auto input = options.input_path ? options.input_path : section.get_optional_string("input");
  std::int64_t random_tables = section.get<std::int64_t>("random", 0);
  if (options.random_tables) random_tables = *options.random_tables;
  const int max_coords = options.max_coords.value_or(section.get<int>("max_coords", 4));
  const int max_points = options.max_points.value_or(section.get<int>("max_points", 4));
  const std::uint64_t seed = options.common.seed.value_or(section.get<std::uint64_t>("seed", 0));
  const std::vector<double> lambda_grid =
      section.get<std::vector<double>>("lambda_grid", {0.1, 0.5, 1.0, 2.0});
  const double value_lo = section.get<double>("value_lo", 0.2);
  const double value_hi = section.get<double>("value_hi", 5.0);
  const double exact_tol = section.get<double>("exact_tol", 1e-12);
  const double exp_tol = section.get<double>("exp_tol", 1e-10);
  section.finish();

  if (input && random_tables > 0) {
    throw ConfigError("choose either an input table or --random, not both");
  }
  if (!input && random_tables <= 0) {
    throw ConfigError("entropy-check needs an input table (--input) or --random N");
  }
  for (double lambda : lambda_grid) {
    if (!(lambda > 0.0)) throw ConfigError("lambda_grid entries must be > 0 (signs are derived)");
  }

  std::vector<FunctionTable> tables;
  if (input) {
    FunctionTable table = load_table(*input);
    if (!table.positive()) {
      throw DomainError("input table must be strictly positive for entropy checks");
    }
    tables.push_back(std::move(table));
  } else {
    for (std::int64_t i = 0; i < random_tables; ++i) {
      auto eng = make_engine(SeedTag{seed, kTableStream, static_cast<std::uint64_t>(i)});
      const ProductSpace space = random_product_space(eng, max_coords, max_points);
      tables.push_back(random_table(eng, space, value_lo, value_hi));
    }
  }

  CheckRow tensorization_row{"tensorization", "", std::numeric_limits<double>::quiet_NaN()};
  std::vector<CheckRow> lsi_rows;
  std::vector<CheckRow> herbst_rows;
  for (const auto choice : {PerturbationChoice::kMaurerInf, PerturbationChoice::kLeftSup}) {
    for (double lambda : lambda_grid) {
      const double signed_lambda = choice == PerturbationChoice::kMaurerInf ? lambda : -lambda;
      lsi_rows.push_back({"log_sobolev", to_string(choice), signed_lambda});
      herbst_rows.push_back({"herbst", to_string(choice), signed_lambda});
    }
  }

  for (const auto& table : tables) {
    tensorization_row.record(tensorization_gap(table), exact_tol);
    std::size_t row = 0;
    for (const auto choice : {PerturbationChoice::kMaurerInf, PerturbationChoice::kLeftSup}) {
      const DeltaReport report = delta_squared(table, choice);
      for (double lambda : lambda_grid) {
        const double signed_lambda = choice == PerturbationChoice::kMaurerInf ? lambda : -lambda;
        lsi_rows[row].record(log_sobolev_gap(table, signed_lambda, report.perturbed), exp_tol);
        const auto [lhs, rhs] =
            herbst_mgf_check(table, signed_lambda, report.sup_norm, side_of(choice));
        herbst_rows[row].record(rhs - lhs, exp_tol);
        ++row;
      }
    }
  }

  std::vector<CheckRow> rows;
  rows.push_back(tensorization_row);
  rows.insert(rows.end(), lsi_rows.begin(), lsi_rows.end());
  rows.insert(rows.end(), herbst_rows.begin(), herbst_rows.end());

  std::int64_t total_violations = 0;
  std::ostringstream csv;
  csv << "check,choice,lambda,count,min_margin,violations\n";
  json jrows = json::array();
  for (const auto& row : rows) {
    total_violations += row.violations;
    csv << row.check << ',' << row.choice << ','
        << (std::isnan(row.lambda) ? "" : format_double(row.lambda)) << ',' << row.count << ','
        << format_double(row.min_margin) << ',' << row.violations << '\n';
    json jr = {{"check", row.check},
               {"count", row.count},
               {"min_margin", row.min_margin},
               {"violations", row.violations}};
    if (!row.choice.empty()) jr["choice"] = row.choice;
    if (!std::isnan(row.lambda)) jr["lambda"] = row.lambda;
    jrows.push_back(jr);
  }
  const bool pass = total_violations == 0;
  const json envelope = {{"tables", tables.size()}, {"rows", jrows}, {"pass", pass}};
  emit(options.common.format, options.common.out_path, "entropy_check", csv.str(), envelope);

  std::cout << "entropy-check: " << tables.size() << " table(s), " << total_violations
            << " violation(s), min tensorization gap "
            << format_double(tensorization_row.min_margin) << "\n";
  return pass ? 0 : 1;
}

int run_delta(const DeltaOptions& options) {
  const json doc = load_config_document(options.common.config_path);
  SectionReader section(section_of(doc, "delta"), "delta");

  auto input = options.input_path ? options.input_path : section.get_optional_string("input");
  const std::string choice_name =
      options.choice.value_or(section.get<std::string>("choice", "maurer"));
  const double t_max = section.get<double>("t_max", 2.0);
  const int t_steps = section.get<int>("t_steps", 8);
  section.finish();

  if (!input) throw ConfigError("delta needs an input table (--input)");
  if (t_steps < 1) throw ConfigError("t_steps must be >= 1");
  if (!(t_max > 0.0)) throw ConfigError("t_max must be > 0");
  PerturbationChoice choice;
  if (choice_name == "maurer") {
    choice = PerturbationChoice::kMaurerInf;
  } else if (choice_name == "left") {
    choice = PerturbationChoice::kLeftSup;
  } else {
    throw ConfigError("unknown choice '" + choice_name + "' (expected maurer or left)");
  }

  const FunctionTable z = load_table(*input);
  const DeltaReport report = delta_squared(z, choice);

  std::ostringstream csv;
  csv << "t,bound\n";
  json curve = json::array();
  for (int i = 0; i <= t_steps; ++i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(t_steps);
    const double bound = tail_bound(t, report.sup_norm, side_of(choice));
    csv << format_double(t) << ',' << format_double(bound) << '\n';
    curve.push_back({{"t", t}, {"bound", bound}});
  }
  json envelope = delta_report_to_json(report);
  envelope["tail_curve"] = curve;
  emit(options.common.format, options.common.out_path, "delta_report", csv.str(), envelope);

  std::cout << "delta: choice=" << to_string(choice)
            << " sup_norm=" << format_double(report.sup_norm) << "\n";
  return 0;
}

int run_simulate(const SimulateOptions& options) {
  const json doc = load_config_document(options.common.config_path);
  const json section = section_of(doc, "simulate");
  SimulationConfig config;
  try {
    config = simulation_config_from_json(section);
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  }
  if (options.common.seed) config.base_seed = *options.common.seed;
  config.validate();

  const int workers = resolve_workers(options.common.workers);
  const TailReport report = tail_estimate(config, workers);
  const CompareResult verdict = compare_report(report);

  emit(options.common.format, options.common.out_path, "tail_report", tail_report_to_csv(report),
       tail_report_to_json(report));
  std::cout << "simulate: " << verdict.summary << "\n";
  return verdict.ok ? 0 : 1;
}

int run_mp_check(const MpCheckOptions& options) {
  const json doc = load_config_document(options.common.config_path);
  SectionReader section(section_of(doc, "mp_check"), "mp_check");

  const int n = section.get<int>("n", 400);
  const int cols = section.get<int>("N", 800);
  const std::string dist_name = section.get<std::string>("dist", "rademacher");
  const std::int64_t samples = section.get<std::int64_t>("samples", 20);
  const std::uint64_t seed = options.common.seed.value_or(section.get<std::uint64_t>("seed", 0));
  const double threshold = section.get<double>("threshold", 0.05);
  const int size_floor = section.get<int>("size_floor", 100);
  const int bins = section.get<int>("bins", 40);
  section.finish();

  if (n < 1 || cols < 1) throw ConfigError("n and N must be >= 1");
  if (samples < 1) throw ConfigError("samples must be >= 1");
  if (bins < 1) throw ConfigError("bins must be >= 1");
  if (!(threshold > 0.0)) throw ConfigError("threshold must be > 0");
  const EntryDistribution dist = entry_distribution_from_string(dist_name);
  if (dist != EntryDistribution::kRademacher && dist != EntryDistribution::kComplexRademacher) {
    throw ConfigError("mp-check requires a unit-variance entry distribution "
                      "(rademacher or complex_rademacher)");
  }

  std::vector<Spectrum> spectra;
  spectra.reserve(static_cast<std::size_t>(samples));
  for (std::int64_t i = 0; i < samples; ++i) {
    const SeedTag tag{seed, kMpStream, static_cast<std::uint64_t>(i)};
    spectra.push_back(covariance_spectrum(sample_rectangular(n, cols, dist, tag)));
  }

  const double c = static_cast<double>(n) / static_cast<double>(cols);
  const double distance = mp_distance(spectra, c);
  const bool threshold_active = n >= size_floor;
  const bool pass = !threshold_active || distance < threshold;

  // Binned empirical-vs-theoretical masses for plotting.
  std::vector<double> pooled;
  for (const auto& spectrum : spectra) {
    pooled.insert(pooled.end(), spectrum.eigenvalues.begin(), spectrum.eigenvalues.end());
  }
  const auto [a, b] = mp_support(c);
  const auto [min_it, max_it] = std::minmax_element(pooled.begin(), pooled.end());
  const double lo = std::min(a, *min_it);
  const double hi = std::max(b, *max_it) + 1e-12;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(bins), 0);
  for (double v : pooled) {
    auto bin = static_cast<std::size_t>((v - lo) / (hi - lo) * bins);
    bin = std::min(bin, static_cast<std::size_t>(bins - 1));
    ++counts[bin];
  }
  std::ostringstream csv;
  csv << "bin_lo,bin_hi,esd_mass,mp_mass\n";
  json jbins = json::array();
  for (int i = 0; i < bins; ++i) {
    const double bin_lo = lo + (hi - lo) * i / bins;
    const double bin_hi = lo + (hi - lo) * (i + 1) / bins;
    const double esd_mass = static_cast<double>(counts[static_cast<std::size_t>(i)]) /
                            static_cast<double>(pooled.size());
    const double mp_mass = mp_cdf(bin_hi, c) - mp_cdf(bin_lo, c);
    csv << format_double(bin_lo) << ',' << format_double(bin_hi) << ',' << format_double(esd_mass)
        << ',' << format_double(mp_mass) << '\n';
    jbins.push_back(
        {{"bin_lo", bin_lo}, {"bin_hi", bin_hi}, {"esd_mass", esd_mass}, {"mp_mass", mp_mass}});
  }

  const json envelope = {{"config",
                          {{"n", n},
                           {"N", cols},
                           {"dist", to_string(dist)},
                           {"samples", samples},
                           {"seed", seed},
                           {"threshold", threshold},
                           {"size_floor", size_floor},
                           {"bins", bins}}},
                         {"c", c},
                         {"ks_distance", distance},
                         {"threshold_active", threshold_active},
                         {"pass", pass},
                         {"bins", jbins}};
  emit(options.common.format, options.common.out_path, "mp_report", csv.str(), envelope);
  if (options.spectra_out) {
    write_text_file(*options.spectra_out, spectra_to_csv(spectra));
  }

  std::cout << "mp-check: ks_distance=" << format_double(distance) << " threshold="
            << format_double(threshold) << (threshold_active ? "" : " (disabled below size floor)")
            << " pass=" << (pass ? "true" : "false") << "\n";
  return pass ? 0 : 1;
}

int run_print_config() {
  std::cout << R"(# tailforge default configuration (TOML; a .json file with the same
# section/key structure is accepted everywhere a config is read)

[entropy_check]
# input = "table.json"   # mutually exclusive with random > 0
random = 0
max_coords = 4
max_points = 4
seed = 0
lambda_grid = [0.1, 0.5, 1.0, 2.0]  # positive magnitudes; signs follow the choice
value_lo = 0.2
value_hi = 5.0
exact_tol = 1e-12
exp_tol = 1e-10

[delta]
# input = "table.json"
choice = "maurer"  # or "left"
t_max = 2.0
t_steps = 8

[simulate]
ensemble = "covariance"  # or "symmetric"
n = 4
N = 16
k = 1
dist = "rademacher"  # uniform_real | complex_rademacher | complex_disk
samples = 20000
pilot_samples = 2000
t_grid = [0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0]
seed = 0
centering = "pilot_mean"  # or "pooled_mean"

[mp_check]
n = 400
N = 800
dist = "rademacher"  # unit-variance laws only
samples = 20
seed = 0
threshold = 0.05
size_floor = 100  # the threshold is reported but not enforced for n below this
bins = 40
)";
  return 0;
}

}  // namespace tailforge::cli

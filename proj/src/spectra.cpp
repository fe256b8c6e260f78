#include "tailforge/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "tailforge/errors.hpp"
#include "tailforge/mp_law.hpp"

namespace tailforge {

namespace {

constexpr double kEntryModulusSlack = 1e-15;
constexpr double kEigenvalueClamp = 1e-10;

std::complex<double> draw_entry(EntryDistribution dist, std::mt19937_64& eng) {
  switch (dist) {
    case EntryDistribution::kRademacher:
      return {rademacher(eng), 0.0};
    case EntryDistribution::kUniformReal:
      return {uniform_pm1(eng), 0.0};
    case EntryDistribution::kComplexRademacher:
      switch (eng() & 3ULL) {
        case 0: return {1.0, 0.0};
        case 1: return {-1.0, 0.0};
        case 2: return {0.0, 1.0};
        default: return {0.0, -1.0};
      }
    case EntryDistribution::kComplexDisk:
      for (;;) {
        const double re = uniform_pm1(eng);
        const double im = uniform_pm1(eng);
        if (re * re + im * im <= 1.0) return {re, im};
      }
  }
  throw DomainError("unknown entry distribution");
}

EntryDistribution real_counterpart(EntryDistribution dist) {
  switch (dist) {
    case EntryDistribution::kComplexRademacher: return EntryDistribution::kRademacher;
    case EntryDistribution::kComplexDisk: return EntryDistribution::kUniformReal;
    default: return dist;
  }
}

void require_dims(int n, int cols) {
  if (n < 1 || cols < 1) throw DomainError("matrix dimensions must be >= 1");
}

std::vector<double> descending_selfadjoint_eigenvalues(const Eigen::MatrixXcd& m,
                                                       const SeedTag& tag) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigensolver did not converge for sample " + tag.to_string());
  }
  const auto& ascending = solver.eigenvalues();
  std::vector<double> eigs(static_cast<std::size_t>(ascending.size()));
  for (Eigen::Index i = 0; i < ascending.size(); ++i) {
    eigs[static_cast<std::size_t>(ascending.size() - 1 - i)] = ascending(i);
  }
  return eigs;
}

void check_candidates(const MatrixSample& sample, const std::vector<Eigen::VectorXcd>& candidates,
                      std::size_t candidate_cap) {
  if (candidates.empty()) throw DomainError("candidate set must be non-empty");
  if (candidates.size() > candidate_cap) {
    throw CapacityError("candidate set of size " + std::to_string(candidates.size()) +
                        " exceeds the cap of " + std::to_string(candidate_cap));
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (static_cast<std::size_t>(candidates[i].size()) != sample.rows()) {
      throw ShapeError("candidate column " + std::to_string(i) + " has size " +
                       std::to_string(candidates[i].size()) + ", expected " +
                       std::to_string(sample.rows()));
    }
    for (Eigen::Index l = 0; l < candidates[i].size(); ++l) {
      if (std::abs(candidates[i](l)) > 1.0 + kEntryModulusSlack) {
        throw DomainError("candidate column " + std::to_string(i) + " entry " +
                          std::to_string(l) + " has modulus > 1");
      }
    }
  }
}

}  // namespace

bool is_real_distribution(EntryDistribution dist) {
  return dist == EntryDistribution::kRademacher || dist == EntryDistribution::kUniformReal;
}

std::string to_string(EntryDistribution dist) {
  switch (dist) {
    case EntryDistribution::kRademacher: return "rademacher";
    case EntryDistribution::kUniformReal: return "uniform_real";
    case EntryDistribution::kComplexRademacher: return "complex_rademacher";
    case EntryDistribution::kComplexDisk: return "complex_disk";
  }
  return "unknown";
}

EntryDistribution entry_distribution_from_string(const std::string& name) {
  if (name == "rademacher") return EntryDistribution::kRademacher;
  if (name == "uniform_real") return EntryDistribution::kUniformReal;
  if (name == "complex_rademacher") return EntryDistribution::kComplexRademacher;
  if (name == "complex_disk") return EntryDistribution::kComplexDisk;
  throw ConfigError("unknown entry distribution '" + name + "'");
}

double Spectrum::lambda(int k) const {
  if (k < 1 || static_cast<std::size_t>(k) > eigenvalues.size()) {
    throw DomainError("eigenvalue index k=" + std::to_string(k) + " out of range");
  }
  return eigenvalues[static_cast<std::size_t>(k - 1)];
}

MatrixSample sample_rectangular(int n, int cols, EntryDistribution dist, const SeedTag& tag) {
  require_dims(n, cols);
  auto eng = make_engine(tag);
  Eigen::MatrixXcd m(n, cols);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < cols; ++j) {
      m(i, j) = draw_entry(dist, eng);
    }
  }
  return MatrixSample{MatrixShape::kRectangular, std::move(m), tag};
}

MatrixSample sample_symmetric(int n, EntryDistribution dist, const SeedTag& tag) {
  require_dims(n, n);
  if (!is_real_distribution(dist)) {
    throw ConfigError("symmetric ensemble requires a real entry distribution; use "
                      "sample_hermitian for complex entries");
  }
  auto eng = make_engine(tag);
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const auto v = draw_entry(dist, eng);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return MatrixSample{MatrixShape::kSymmetric, std::move(m), tag};
}

MatrixSample sample_hermitian(int n, EntryDistribution dist, const SeedTag& tag) {
  require_dims(n, n);
  if (is_real_distribution(dist)) return sample_symmetric(n, dist, tag);
  auto eng = make_engine(tag);
  const EntryDistribution diag_dist = real_counterpart(dist);
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (i == j) {
        m(i, i) = draw_entry(diag_dist, eng);
      } else {
        const auto v = draw_entry(dist, eng);
        m(i, j) = v;
        m(j, i) = std::conj(v);
      }
    }
  }
  return MatrixSample{MatrixShape::kSymmetric, std::move(m), tag};
}

Spectrum covariance_spectrum(const MatrixSample& sample) {
  if (sample.shape != MatrixShape::kRectangular) {
    throw ShapeError("covariance_spectrum requires a rectangular sample");
  }
  const double inv_cols = 1.0 / static_cast<double>(sample.cols());
  const Eigen::MatrixXcd gram = inv_cols * (sample.entries * sample.entries.adjoint());
  auto eigs = descending_selfadjoint_eigenvalues(gram, sample.seed_tag);
  for (double& value : eigs) {
    if (value < 0.0) {
      if (value < -kEigenvalueClamp) {
        throw NumericError("covariance eigenvalue " + std::to_string(value) +
                           " below the clamp window for sample " + sample.seed_tag.to_string());
      }
      value = 0.0;
    }
  }
  return Spectrum{std::move(eigs), SpectrumScaling::kCovariance};
}

Spectrum symmetric_spectrum(const MatrixSample& sample) {
  if (sample.shape != MatrixShape::kSymmetric) {
    throw ShapeError("symmetric_spectrum requires a symmetric sample");
  }
  return Spectrum{descending_selfadjoint_eigenvalues(sample.entries, sample.seed_tag),
                  SpectrumScaling::kUnnormalized};
}

double column_perturbation_extreme(const MatrixSample& sample, std::size_t t0, int k,
                                   PerturbationChoice choice,
                                   const std::vector<Eigen::VectorXcd>& candidates,
                                   std::size_t candidate_cap) {
  if (sample.shape != MatrixShape::kRectangular) {
    throw ShapeError("column_perturbation_extreme requires a rectangular sample");
  }
  if (t0 >= sample.cols()) throw DomainError("column index out of range");
  if (k < 1 || static_cast<std::size_t>(k) > sample.rows()) {
    throw DomainError("eigenvalue index k out of range");
  }
  check_candidates(sample, candidates, candidate_cap);

  const bool take_min = choice == PerturbationChoice::kMaurerInf;
  double extreme = take_min ? std::numeric_limits<double>::infinity()
                            : -std::numeric_limits<double>::infinity();
  Eigen::MatrixXcd work = sample.entries;
  for (const auto& candidate : candidates) {
    work.col(static_cast<Eigen::Index>(t0)) = candidate;
    MatrixSample swapped{MatrixShape::kRectangular, work, sample.seed_tag};
    const double lam = covariance_spectrum(swapped).lambda(k);
    extreme = take_min ? std::min(extreme, lam) : std::max(extreme, lam);
  }
  return extreme;
}

ColumnDeltaReport column_delta_check(const MatrixSample& sample, int k,
                                     const std::vector<Eigen::VectorXcd>& candidates,
                                     double tolerance, std::size_t candidate_cap) {
  if (sample.shape != MatrixShape::kRectangular) {
    throw ShapeError("column_delta_check requires a rectangular sample");
  }
  if (k < 1 || static_cast<std::size_t>(k) > sample.rows()) {
    throw DomainError("eigenvalue index k out of range");
  }
  check_candidates(sample, candidates, candidate_cap);

  const std::size_t n = sample.rows();
  const std::size_t cols = sample.cols();
  ColumnDeltaReport report;
  report.k = k;
  report.n = n;
  report.cols = cols;
  report.step_bound = static_cast<double>(n) / static_cast<double>(cols);
  report.delta_bound = static_cast<double>(n) * static_cast<double>(n) / static_cast<double>(cols);
  report.tolerance = tolerance;

  const double z = covariance_spectrum(sample).lambda(k);
  auto complain = [&](std::size_t column, const std::string& what) {
    report.violations.push_back({column, what});
  };

  double delta_inf_sq = 0.0;
  double delta_sup_sq = 0.0;
  for (std::size_t t0 = 0; t0 < cols; ++t0) {
    const double z_inf =
        column_perturbation_extreme(sample, t0, k, PerturbationChoice::kMaurerInf, candidates,
                                    candidate_cap);
    const double z_sup =
        column_perturbation_extreme(sample, t0, k, PerturbationChoice::kLeftSup, candidates,
                                    candidate_cap);
    report.rows.push_back({t0, z, z_inf, z_sup});

    const double down = z - z_inf;
    const double up = z_sup - z;
    if (down < -tolerance) {
      complain(t0, "Z - Z_inf = " + std::to_string(down) + " < 0");
    }
    if (down > report.step_bound + tolerance) {
      complain(t0, "Z - Z_inf = " + std::to_string(down) + " exceeds n/N = " +
                       std::to_string(report.step_bound));
    }
    if (up < -tolerance) {
      complain(t0, "Z_sup - Z = " + std::to_string(up) + " < 0");
    }
    if (up > report.step_bound + tolerance) {
      complain(t0, "Z_sup - Z = " + std::to_string(up) + " exceeds n/N = " +
                       std::to_string(report.step_bound));
    }
    delta_inf_sq += down * down;
    delta_sup_sq += up * up;
  }
  report.delta_inf_sq = delta_inf_sq;
  report.delta_sup_sq = delta_sup_sq;
  if (delta_inf_sq > report.delta_bound + tolerance) {
    complain(cols, "Delta_inf^2 = " + std::to_string(delta_inf_sq) + " exceeds n^2/N = " +
                       std::to_string(report.delta_bound));
  }
  if (delta_sup_sq > report.delta_bound + tolerance) {
    complain(cols, "Delta_sup^2 = " + std::to_string(delta_sup_sq) + " exceeds n^2/N = " +
                       std::to_string(report.delta_bound));
  }
  report.all_ok = report.violations.empty();
  return report;
}

std::vector<Eigen::VectorXcd> rademacher_columns(int n) {
  if (n < 1) throw DomainError("column size must be >= 1");
  if (n >= 17) {
    throw CapacityError("refusing to enumerate 2^" + std::to_string(n) + " sign columns");
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<Eigen::VectorXcd> columns;
  columns.reserve(count);
  for (std::size_t bits = 0; bits < count; ++bits) {
    Eigen::VectorXcd col(n);
    for (int l = 0; l < n; ++l) {
      col(l) = (bits >> (n - 1 - l)) & 1 ? 1.0 : -1.0;
    }
    columns.push_back(std::move(col));
  }
  return columns;
}

double mp_distance(const std::vector<Spectrum>& spectra, double c) {
  std::vector<double> pooled;
  for (const auto& spectrum : spectra) {
    pooled.insert(pooled.end(), spectrum.eigenvalues.begin(), spectrum.eigenvalues.end());
  }
  if (pooled.empty()) throw DomainError("mp_distance requires at least one eigenvalue");
  return mp_ks_distance(pooled, c);
}

}  // namespace tailforge

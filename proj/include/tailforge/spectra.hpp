#pragma once

// Bounded-entry random matrix ensembles and their eigenvalue statistics:
// sampling, dense hermitian eigensolves, the single-column perturbation
// extremes behind the sample-covariance tail bounds, and the
// Marchenko-Pastur sanity distance.
//
// Conventions: eigenvalue indices k are 1-based (lambda_1 is the largest);
// column and matrix-entry indices are 0-based.

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "tailforge/delta.hpp"
#include "tailforge/rng.hpp"

namespace tailforge {

// Entry laws, all supported on the closed unit disk (interval for the real ones).
enum class EntryDistribution {
  kRademacher,         // +-1 with equal weight
  kUniformReal,        // uniform on [-1, 1]
  kComplexRademacher,  // uniform on {1, -1, i, -i}
  kComplexDisk,        // uniform on the closed unit disk
};

bool is_real_distribution(EntryDistribution dist);
std::string to_string(EntryDistribution dist);
EntryDistribution entry_distribution_from_string(const std::string& name);

enum class MatrixShape { kSymmetric, kRectangular };

// One matrix realization together with the counter that produced it.
struct MatrixSample {
  MatrixShape shape;
  Eigen::MatrixXcd entries;
  SeedTag seed_tag;

  std::size_t rows() const { return static_cast<std::size_t>(entries.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(entries.cols()); }
};

enum class SpectrumScaling {
  kCovariance,    // eigenvalues of (1/N) X X^*
  kUnnormalized,  // eigenvalues of X itself
};

// Real eigenvalues in descending order.
struct Spectrum {
  std::vector<double> eigenvalues;
  SpectrumScaling scaling;

  double lambda(int k) const;  // 1-based
};

// n x N matrix with i.i.d. entries from dist, reproducible from the tag alone.
MatrixSample sample_rectangular(int n, int cols, EntryDistribution dist, const SeedTag& tag);

// n x n real symmetric matrix: entries on and above the diagonal i.i.d.,
// mirrored below. Complex distributions are rejected; use sample_hermitian.
MatrixSample sample_symmetric(int n, EntryDistribution dist, const SeedTag& tag);

// Hermitian variant: off-diagonal entries from dist mirrored by conjugation,
// diagonal from the real counterpart of dist (+-1 for the complex Rademacher
// law, uniform on [-1, 1] for the disk).
MatrixSample sample_hermitian(int n, EntryDistribution dist, const SeedTag& tag);

// Descending eigenvalues of (1/N) X X^*. Values in [-1e-10, 0) are clamped to
// zero; anything lower raises NumericError carrying the sample's seed tag.
Spectrum covariance_spectrum(const MatrixSample& sample);

// Descending eigenvalues of a symmetric/hermitian sample itself.
Spectrum symmetric_spectrum(const MatrixSample& sample);

inline constexpr std::size_t kDefaultCandidateCap = std::size_t{1} << 16;

// Extreme of lambda_k((1/N) Y Y^*) over all Y obtained from X by replacing
// column t0 with one of the candidate columns (infimum for kMaurerInf,
// supremum for kLeftSup). Candidate entries must have modulus <= 1.
double column_perturbation_extreme(const MatrixSample& sample, std::size_t t0, int k,
                                   PerturbationChoice choice,
                                   const std::vector<Eigen::VectorXcd>& candidates,
                                   std::size_t candidate_cap = kDefaultCandidateCap);

struct ColumnDeltaRow {
  std::size_t column;
  double z;      // lambda_k of the original matrix
  double z_inf;  // infimum over candidate replacements of this column
  double z_sup;  // supremum over candidate replacements of this column
};

struct ColumnDeltaViolation {
  std::size_t column;
  std::string description;
};

// Per-column verification that one column swap moves lambda_k by at most n/N
// in either direction, plus the resulting Delta^2 sums against n^2/N.
struct ColumnDeltaReport {
  int k = 1;
  std::size_t n = 0;
  std::size_t cols = 0;
  double step_bound = 0.0;   // n/N
  double delta_bound = 0.0;  // n^2/N
  double delta_inf_sq = 0.0;
  double delta_sup_sq = 0.0;
  double tolerance = 0.0;
  std::vector<ColumnDeltaRow> rows;
  std::vector<ColumnDeltaViolation> violations;
  bool all_ok = false;
};

// Runs the column-swap check over every column of the sample. The candidate
// set must cover the support of the column distribution (in particular it
// must contain each actual column) for the bracketing to hold.
ColumnDeltaReport column_delta_check(const MatrixSample& sample, int k,
                                     const std::vector<Eigen::VectorXcd>& candidates,
                                     double tolerance = 1e-9,
                                     std::size_t candidate_cap = kDefaultCandidateCap);

// All 2^n sign columns in {-1, +1}^n, ordered with the last entry fastest.
std::vector<Eigen::VectorXcd> rademacher_columns(int n);

// Kolmogorov-Smirnov distance between the pooled empirical spectral
// distribution and the Marchenko-Pastur law for ratio c.
double mp_distance(const std::vector<Spectrum>& spectra, double c);

}  // namespace tailforge

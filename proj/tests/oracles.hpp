#pragma once

// Independent oracles for the test suites. Everything here recomputes the
// quantities under test from scratch: plain nested loops, plain summation,
// closed-form root formulas. None of it calls into the library's own
// computation paths, so agreement is evidence rather than tautology.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

namespace oracle {

// Odometer over a multi-index; returns false after the last combination.
inline bool advance(std::vector<std::size_t>& multi, const std::vector<std::size_t>& sizes) {
  for (std::size_t k = multi.size(); k-- > 0;) {
    if (++multi[k] < sizes[k]) return true;
    multi[k] = 0;
  }
  return false;
}

// Flat index with coordinate 0 slowest, built by left fold.
inline std::size_t flat_of(const std::vector<std::size_t>& multi,
                           const std::vector<std::size_t>& sizes) {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < multi.size(); ++k) flat = flat * sizes[k] + multi[k];
  return flat;
}

inline double point_weight(const std::vector<std::size_t>& multi,
                           const std::vector<std::vector<double>>& weights) {
  double w = 1.0;
  for (std::size_t k = 0; k < multi.size(); ++k) w *= weights[k][multi[k]];
  return w;
}

inline std::vector<std::size_t> sizes_of(const std::vector<std::vector<double>>& weights) {
  std::vector<std::size_t> sizes;
  for (const auto& w : weights) sizes.push_back(w.size());
  return sizes;
}

// Direct-summation entropy: E[G log G] - EG log EG, plain accumulation.
inline double entropy_direct(const std::vector<std::vector<double>>& weights,
                             const std::vector<double>& values) {
  const auto sizes = sizes_of(weights);
  std::vector<std::size_t> multi(weights.size(), 0);
  double eg = 0.0;
  double eg_log_g = 0.0;
  do {
    const double w = point_weight(multi, weights);
    const double g = values[flat_of(multi, sizes)];
    eg += w * g;
    eg_log_g += w * g * std::log(g);
  } while (advance(multi, sizes));
  return eg_log_g - eg * std::log(eg);
}

// Partial entropy over coordinate k: one value per assignment of the other
// coordinates, enumerated in row-major order of the reduced multi-index.
inline std::vector<double> partial_entropy_direct(const std::vector<std::vector<double>>& weights,
                                                  const std::vector<double>& values,
                                                  std::size_t k) {
  const auto sizes = sizes_of(weights);
  std::vector<std::size_t> reduced_sizes;
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    if (j != k) reduced_sizes.push_back(sizes[j]);
  }
  std::vector<double> out;
  std::vector<std::size_t> reduced(reduced_sizes.size(), 0);
  do {
    std::vector<std::size_t> multi(sizes.size(), 0);
    for (std::size_t j = 0, r = 0; j < sizes.size(); ++j) {
      if (j != k) multi[j] = reduced[r++];
    }
    double ekg = 0.0;
    double ekg_log_g = 0.0;
    for (std::size_t i = 0; i < sizes[k]; ++i) {
      multi[k] = i;
      const double g = values[flat_of(multi, sizes)];
      ekg += weights[k][i] * g;
      ekg_log_g += weights[k][i] * g * std::log(g);
    }
    out.push_back(ekg_log_g - ekg * std::log(ekg));
  } while (!reduced.empty() && advance(reduced, reduced_sizes));
  if (out.empty()) out.push_back(0.0);  // unreachable; keeps the empty case total
  return out;
}

inline double expectation_direct(const std::vector<std::vector<double>>& weights,
                                 const std::vector<double>& values) {
  const auto sizes = sizes_of(weights);
  std::vector<std::size_t> multi(weights.size(), 0);
  double e = 0.0;
  do {
    e += point_weight(multi, weights) * values[flat_of(multi, sizes)];
  } while (advance(multi, sizes));
  return e;
}

inline double tensorization_gap_direct(const std::vector<std::vector<double>>& weights,
                                       const std::vector<double>& values) {
  double sum = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    std::vector<std::vector<double>> reduced_weights;
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if (j != k) reduced_weights.push_back(weights[j]);
    }
    const auto hk = partial_entropy_direct(weights, values, k);
    if (reduced_weights.empty()) {
      sum += hk[0];
    } else {
      sum += expectation_direct(reduced_weights, hk);
    }
  }
  return sum - entropy_direct(weights, values);
}

inline double duality_direct(const std::vector<std::vector<double>>& weights,
                             const std::vector<double>& g, const std::vector<double>& t) {
  const double log_et = std::log(expectation_direct(weights, t));
  const auto sizes = sizes_of(weights);
  std::vector<std::size_t> multi(weights.size(), 0);
  double sum = 0.0;
  do {
    const std::size_t i = flat_of(multi, sizes);
    sum += point_weight(multi, weights) * g[i] * (std::log(t[i]) - log_et);
  } while (advance(multi, sizes));
  return sum;
}

inline double variation_direct(const std::vector<std::vector<double>>& weights,
                               const std::vector<double>& g, double c) {
  const auto sizes = sizes_of(weights);
  std::vector<std::size_t> multi(weights.size(), 0);
  double sum = 0.0;
  do {
    const std::size_t i = flat_of(multi, sizes);
    sum += point_weight(multi, weights) * (g[i] * (std::log(g[i]) - std::log(c)) - (g[i] - c));
  } while (advance(multi, sizes));
  return sum;
}

// Perturbed table over coordinate k by explicit substitution of every
// candidate index, one point at a time.
inline std::vector<double> perturbed_direct(const std::vector<std::vector<double>>& weights,
                                            const std::vector<double>& values, std::size_t k,
                                            bool take_min) {
  const auto sizes = sizes_of(weights);
  std::vector<double> out(values.size());
  std::vector<std::size_t> multi(weights.size(), 0);
  do {
    auto probe = multi;
    double extreme = take_min ? std::numeric_limits<double>::infinity()
                              : -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sizes[k]; ++i) {
      probe[k] = i;
      const double v = values[flat_of(probe, sizes)];
      extreme = take_min ? std::min(extreme, v) : std::max(extreme, v);
    }
    out[flat_of(multi, sizes)] = extreme;
  } while (advance(multi, sizes));
  return out;
}

// Log-Sobolev slack recomputed from raw sums.
inline double log_sobolev_gap_direct(const std::vector<std::vector<double>>& weights,
                                     const std::vector<double>& z, double lambda,
                                     const std::vector<std::vector<double>>& zk) {
  const auto sizes = sizes_of(weights);
  std::vector<std::size_t> multi(weights.size(), 0);
  double e_exp = 0.0;
  double e_z_exp = 0.0;
  double e_exp_delta = 0.0;
  do {
    const std::size_t i = flat_of(multi, sizes);
    const double w = point_weight(multi, weights);
    const double e = std::exp(lambda * z[i]);
    double delta_sq = 0.0;
    for (const auto& table : zk) {
      const double d = z[i] - table[i];
      delta_sq += d * d;
    }
    e_exp += w * e;
    e_z_exp += w * lambda * z[i] * e;
    e_exp_delta += w * e * delta_sq;
  } while (advance(multi, sizes));
  return 0.5 * lambda * lambda * e_exp_delta - (e_z_exp - e_exp * std::log(e_exp));
}

// Eigenvalues of a real symmetric 2x2 matrix, descending, via trace and
// determinant.
inline std::array<double, 2> symmetric_2x2_eigs(double a00, double a01, double a11) {
  const double mean = 0.5 * (a00 + a11);
  const double det = a00 * a11 - a01 * a01;
  const double disc = std::sqrt(std::max(0.0, mean * mean - det));
  return {mean + disc, mean - disc};
}

// Eigenvalues of a real symmetric 3x3 matrix, descending, via the
// trigonometric solution of the characteristic cubic.
inline std::array<double, 3> symmetric_3x3_eigs(const std::array<std::array<double, 3>, 3>& a) {
  const double p1 = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
  if (p1 == 0.0) {
    std::array<double, 3> diag{a[0][0], a[1][1], a[2][2]};
    std::sort(diag.begin(), diag.end(), std::greater<>());
    return diag;
  }
  const double q = (a[0][0] + a[1][1] + a[2][2]) / 3.0;
  const double p2 = (a[0][0] - q) * (a[0][0] - q) + (a[1][1] - q) * (a[1][1] - q) +
                    (a[2][2] - q) * (a[2][2] - q) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  std::array<std::array<double, 3>, 3> b{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      b[i][j] = (a[i][j] - (i == j ? q : 0.0)) / p;
    }
  }
  const double det_b = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                       b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                       b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
  const double r = std::clamp(det_b / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double eig1 = q + 2.0 * p * std::cos(phi);
  const double eig3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  return {eig1, 3.0 * q - eig1 - eig3, eig3};
}

}  // namespace oracle

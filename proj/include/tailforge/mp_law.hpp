#pragma once

// Marchenko-Pastur law for sample covariance matrices with unit-variance
// entries and aspect ratio c = n/N. Standard formulas from the random matrix
// literature; the CDF is the closed-form antiderivative of the density.

#include <cstddef>
#include <span>
#include <utility>

namespace tailforge {

// Support edges ((1 - sqrt(c))^2, (1 + sqrt(c))^2). Requires 0 < c < inf.
std::pair<double, double> mp_support(double c);

// Density of the absolutely continuous part, sqrt((b-x)(x-a)) / (2 pi c x)
// on [a, b], zero elsewhere. For c > 1 it integrates to 1/c; the remaining
// mass 1 - 1/c sits in an atom at zero.
double mp_density(double x, double c);

// Cumulative distribution including the atom at zero when c > 1.
double mp_cdf(double x, double c);

// Kolmogorov-Smirnov distance between the empirical distribution of the
// given values and the Marchenko-Pastur CDF for ratio c.
double mp_ks_distance(std::span<const double> values, double c);

}  // namespace tailforge

#include "tailforge/mp_law.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "tailforge/errors.hpp"

namespace tailforge {

namespace {

void require_ratio(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("aspect ratio c must lie in (0, inf)");
  }
}

}  // namespace

std::pair<double, double> mp_support(double c) {
  require_ratio(c);
  const double s = std::sqrt(c);
  return {(1.0 - s) * (1.0 - s), (1.0 + s) * (1.0 + s)};
}

double mp_density(double x, double c) {
  const auto [a, b] = mp_support(c);
  if (x <= a || x >= b) return 0.0;
  return std::sqrt((b - x) * (x - a)) / (2.0 * std::numbers::pi * c * x);
}

double mp_cdf(double x, double c) {
  const auto [a, b] = mp_support(c);
  const double atom = c > 1.0 ? 1.0 - 1.0 / c : 0.0;
  if (x < 0.0) return 0.0;
  if (x < a) return atom;
  if (x >= b) return 1.0;

  // Antiderivative of the density under x = a + (b - a) sin^2(theta):
  //   (a+b) theta + (b-a) sin(theta) cos(theta) - 2 sqrt(ab) atan2(sqrt(b) sin, sqrt(a) cos),
  // scaled by 1/(2 pi c). The atan2 form stays finite at theta = pi/2.
  const double ratio = std::clamp((x - a) / (b - a), 0.0, 1.0);
  const double theta = std::asin(std::sqrt(ratio));
  const double sin_t = std::sin(theta);
  const double cos_t = std::cos(theta);
  double integral = (a + b) * theta + (b - a) * sin_t * cos_t;
  if (a > 0.0) {
    integral -= 2.0 * std::sqrt(a * b) * std::atan2(std::sqrt(b) * sin_t, std::sqrt(a) * cos_t);
  }
  const double cdf = atom + integral / (2.0 * std::numbers::pi * c);
  return std::clamp(cdf, 0.0, 1.0);
}

double mp_ks_distance(std::span<const double> values, double c) {
  require_ratio(c);
  if (values.empty()) throw DomainError("mp_ks_distance requires at least one value");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double dist = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = mp_cdf(sorted[i], c);
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    dist = std::max(dist, std::max(f - lo, hi - f));
  }
  return dist;
}

}  // namespace tailforge

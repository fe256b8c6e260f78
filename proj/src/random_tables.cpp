#include "tailforge/random_tables.hpp"

#include "tailforge/errors.hpp"
#include "tailforge/rng.hpp"

namespace tailforge {

ProductSpace random_product_space(std::mt19937_64& eng, int max_coords, int max_points) {
  if (max_coords < 1 || max_points < 2) {
    throw DomainError("random_product_space requires max_coords >= 1 and max_points >= 2");
  }
  const int num_coords = 1 + static_cast<int>(eng() % static_cast<std::uint64_t>(max_coords));
  std::vector<CoordinateSpace> coords;
  coords.reserve(static_cast<std::size_t>(num_coords));
  for (int c = 0; c < num_coords; ++c) {
    const int size = 2 + static_cast<int>(eng() % static_cast<std::uint64_t>(max_points - 1));
    std::vector<double> points(static_cast<std::size_t>(size));
    std::vector<double> weights(static_cast<std::size_t>(size));
    double total = 0.0;
    for (int i = 0; i < size; ++i) {
      points[static_cast<std::size_t>(i)] = static_cast<double>(i);
      weights[static_cast<std::size_t>(i)] = 0.05 + 0.95 * uniform01(eng);
      total += weights[static_cast<std::size_t>(i)];
    }
    for (auto& w : weights) w /= total;
    coords.push_back(CoordinateSpace::scalar(points, std::move(weights)));
  }
  return ProductSpace(std::move(coords));
}

FunctionTable random_table(std::mt19937_64& eng, const ProductSpace& space, double lo, double hi) {
  if (!(hi > lo)) throw DomainError("random_table requires hi > lo");
  std::vector<double> values(space.total_points());
  for (auto& v : values) v = lo + (hi - lo) * uniform01(eng);
  return FunctionTable(space, std::move(values), /*positive=*/lo > 0.0);
}

}  // namespace tailforge

#pragma once

// Randomized product spaces and tables for property checks and the
// table-generating CLI mode.

#include <random>

#include "tailforge/product_space.hpp"

namespace tailforge {

// Random space with 1..max_coords coordinates of 2..max_points scalar points
// each (integer supports 0, 1, ...), weights drawn uniform in [0.05, 1] and
// normalized.
ProductSpace random_product_space(std::mt19937_64& eng, int max_coords, int max_points);

// Values i.i.d. uniform in [lo, hi]; the positivity flag follows lo > 0.
FunctionTable random_table(std::mt19937_64& eng, const ProductSpace& space, double lo, double hi);

}  // namespace tailforge

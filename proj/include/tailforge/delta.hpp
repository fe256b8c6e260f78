#pragma once

// Coordinate perturbation oracles on product spaces. For each coordinate the
// table is re-evaluated with that coordinate swept over its whole support and
// the infimum (right tail) or supremum (left tail) is kept. The squared gaps
// summed over coordinates give the Delta^2 field whose sup-norm drives the
// sub-Gaussian tail bounds.

#include <string>
#include <utility>
#include <vector>

#include "tailforge/entropy.hpp"
#include "tailforge/product_space.hpp"

namespace tailforge {

enum class PerturbationChoice {
  kMaurerInf,  // coordinate-wise infimum; pairs with the right tail
  kLeftSup,    // coordinate-wise supremum; pairs with the left tail
};

TailSide side_of(PerturbationChoice choice);
std::string to_string(PerturbationChoice choice);

// Per-point perturbed values Z_k for every coordinate, the Delta^2 field,
// and its sup-norm.
struct DeltaReport {
  PerturbationChoice choice;
  std::vector<FunctionTable> perturbed;  // one table per coordinate, constant along it
  FunctionTable delta_sq;
  double sup_norm = 0.0;
};

// Extreme of Z over all substitutions of coordinate k by values from its own
// support, holding the other coordinates fixed. The result is constant along
// coordinate k and brackets Z pointwise (below for kMaurerInf, above for
// kLeftSup), since the point's own value is among the candidates.
FunctionTable perturbed_values(const FunctionTable& z, std::size_t k, PerturbationChoice choice);

// Full report: all perturbed tables, Delta^2(x) = sum_k (Z - Z_k)^2, and
// sup_norm = max_x Delta^2(x) (exact maximum of the stored values).
DeltaReport delta_squared(const FunctionTable& z, PerturbationChoice choice);

// Sub-Gaussian tail bound exp(-t^2 / (2 sup_norm)) for t >= 0. The caller
// supplies the sup-norm matching the side (infimum-based for kRight,
// supremum-based for kLeft). sup_norm == 0 is the deterministic degenerate
// case: 1 at t == 0 and 0 for t > 0.
double tail_bound(double t, double sup_norm, TailSide side);

// Concentration bounds for the k-th eigenvalue of a bounded-entry symmetric
// matrix: (exp(-t^2/(16 k^2)), exp(-t^2/(16 k^2 + 2 k t))). The left bound is
// strictly larger for t > 0.
std::pair<double, double> maurer_eig_bounds(int k, double t);

}  // namespace tailforge

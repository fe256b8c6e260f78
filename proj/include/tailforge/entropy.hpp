#pragma once

// Exact entropy functionals on finite product spaces: the entropy H(G), the
// per-coordinate partial entropies, the duality/variation representations,
// the tensorization inequality, and the log-Sobolev / Herbst layer for
// exponential tilts e^{lambda Z}.

#include <span>
#include <utility>

#include "tailforge/product_space.hpp"

namespace tailforge {

// Which tail a bound or sign condition targets. The right tail pairs with the
// coordinate-infimum perturbation and lambda >= 0, the left tail with the
// coordinate-supremum perturbation and lambda <= 0.
enum class TailSide { kRight, kLeft };

// H(G) = E[G log G] - EG log EG for a strictly positive table. Nonnegative up
// to roundoff; zero exactly when G is constant.
double entropy(const FunctionTable& g);

// Partial entropy H_k(G): entropy with integration over coordinate k only.
// Returns a table over the remaining coordinates (a single value when the
// space is univariate).
FunctionTable partial_entropy(const FunctionTable& g, std::size_t k);

// E[G (log T - log ET)]; at most entropy(G) for every positive T, with
// equality at T = G.
double duality_value(const FunctionTable& g, const FunctionTable& t);

// E[G (log G - log c) - (G - c)] for c > 0; at least entropy(G), with
// equality at c = EG.
double variation_value(const FunctionTable& g, double c);

// sum_k E[H_k(G)] - H(G). Nonnegative up to roundoff (tensorization).
double tensorization_gap(const FunctionTable& g);

// Slack in the log-Sobolev inequality for e^{lambda Z}:
//   (lambda^2/2) E[e^{lambda Z} Delta^2] - H(e^{lambda Z}),
// where Delta^2(x) = sum_k (Z(x) - Z_k(x))^2 from the supplied per-coordinate
// perturbed tables. Requires -lambda (Z - Z_k) <= 0 at every point for every
// k; the first violation is reported with its (point, coordinate).
double log_sobolev_gap(const FunctionTable& z, double lambda,
                       std::span<const FunctionTable> zk_tables);

// Herbst moment bound: returns (E e^{lambda (Z - EZ)}, exp(sup_delta lambda^2 / 2)).
// sup_delta must be the sup-norm of Delta^2 for the matching perturbation;
// kRight admits lambda >= 0, kLeft admits lambda <= 0.
std::pair<double, double> herbst_mgf_check(const FunctionTable& z, double lambda, double sup_delta,
                                           TailSide side);

}  // namespace tailforge

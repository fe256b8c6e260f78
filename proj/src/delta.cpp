#include "tailforge/delta.hpp"

#include <algorithm>
#include <cmath>

#include "tailforge/errors.hpp"

namespace tailforge {

TailSide side_of(PerturbationChoice choice) {
  return choice == PerturbationChoice::kMaurerInf ? TailSide::kRight : TailSide::kLeft;
}

std::string to_string(PerturbationChoice choice) {
  return choice == PerturbationChoice::kMaurerInf ? "maurer" : "left";
}

FunctionTable perturbed_values(const FunctionTable& z, std::size_t k, PerturbationChoice choice) {
  const auto& space = z.space();
  const std::size_t n = space.num_coordinates();
  if (k >= n) throw DomainError("coordinate index " + std::to_string(k) + " out of range");

  const std::size_t size_k = space.coordinate(k).size();
  const std::size_t stride = space.stride(k);
  const std::size_t outer_count = space.total_points() / (size_k * stride);
  const bool take_min = choice == PerturbationChoice::kMaurerInf;

  std::vector<double> out(z.size());
  for (std::size_t outer = 0; outer < outer_count; ++outer) {
    for (std::size_t inner = 0; inner < stride; ++inner) {
      const std::size_t base = outer * size_k * stride + inner;
      double extreme = z.at(base);
      for (std::size_t j = 1; j < size_k; ++j) {
        const double v = z.at(base + j * stride);
        extreme = take_min ? std::min(extreme, v) : std::max(extreme, v);
      }
      for (std::size_t j = 0; j < size_k; ++j) {
        out[base + j * stride] = extreme;
      }
    }
  }
  return FunctionTable(space, std::move(out), /*positive=*/false);
}

DeltaReport delta_squared(const FunctionTable& z, PerturbationChoice choice) {
  const auto& space = z.space();
  const std::size_t n = space.num_coordinates();

  std::vector<FunctionTable> perturbed;
  perturbed.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    perturbed.push_back(perturbed_values(z, k, choice));
  }

  std::vector<double> delta(z.size(), 0.0);
  double sup = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double d = z.at(i) - perturbed[k].at(i);
      total += d * d;
    }
    delta[i] = total;
    sup = std::max(sup, total);
  }
  return DeltaReport{choice, std::move(perturbed),
                     FunctionTable(space, std::move(delta), /*positive=*/false), sup};
}

double tail_bound(double t, double sup_norm, TailSide /*side*/) {
  if (!(t >= 0.0)) throw DomainError("tail_bound requires t >= 0");
  if (!(sup_norm >= 0.0)) throw DomainError("tail_bound requires sup_norm >= 0");
  if (sup_norm == 0.0) {
    return t == 0.0 ? 1.0 : 0.0;
  }
  return std::exp(-t * t / (2.0 * sup_norm));
}

std::pair<double, double> maurer_eig_bounds(int k, double t) {
  if (k < 1) throw DomainError("maurer_eig_bounds requires k >= 1");
  if (!(t >= 0.0)) throw DomainError("maurer_eig_bounds requires t >= 0");
  const double kk = static_cast<double>(k);
  const double right = std::exp(-t * t / (16.0 * kk * kk));
  const double left = std::exp(-t * t / (16.0 * kk * kk + 2.0 * kk * t));
  return {right, left};
}

}  // namespace tailforge

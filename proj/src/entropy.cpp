#include "tailforge/entropy.hpp"

#include <cmath>
#include <string>

#include "tailforge/errors.hpp"
#include "tailforge/summation.hpp"

namespace tailforge {

// Computed as E[G (log G - log EG)]: the same per-point arithmetic the
// duality functional runs at T = G, so the attainment identity holds to
// roundoff even for near-constant tables.
double entropy(const FunctionTable& g) {
  require_positive(g, "entropy");
  const double log_eg = std::log(g.expectation());
  const auto& space = g.space();
  NeumaierSum sum;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double v = g.at(i);
    sum.add(space.weight(i) * v * (std::log(v) - log_eg));
  }
  return sum.value();
}

FunctionTable partial_entropy(const FunctionTable& g, std::size_t k) {
  require_positive(g, "partial_entropy");
  const auto& space = g.space();
  const std::size_t n = space.num_coordinates();
  if (k >= n) throw DomainError("coordinate index " + std::to_string(k) + " out of range");

  const auto& coord = space.coordinate(k);
  const std::size_t size_k = coord.size();
  const std::size_t stride = space.stride(k);
  const std::size_t outer_count = space.total_points() / (size_k * stride);

  ProductSpace reduced = space.drop_coordinate(k);
  std::vector<double> out(reduced.total_points());
  for (std::size_t outer = 0; outer < outer_count; ++outer) {
    for (std::size_t inner = 0; inner < stride; ++inner) {
      const std::size_t base = outer * size_k * stride + inner;
      NeumaierSum mean;
      for (std::size_t j = 0; j < size_k; ++j) {
        mean.add(coord.weights()[j] * g.at(base + j * stride));
      }
      const double log_ekg = std::log(mean.value());
      NeumaierSum sum;
      for (std::size_t j = 0; j < size_k; ++j) {
        const double v = g.at(base + j * stride);
        sum.add(coord.weights()[j] * v * (std::log(v) - log_ekg));
      }
      out[outer * stride + inner] = sum.value();
    }
  }
  return FunctionTable(std::move(reduced), std::move(out), /*positive=*/false);
}

double duality_value(const FunctionTable& g, const FunctionTable& t) {
  require_positive(g, "duality_value");
  require_positive(t, "duality_value");
  require_same_space(g, t, "duality_value");
  const double log_et = std::log(t.expectation());
  const auto& space = g.space();
  NeumaierSum sum;
  for (std::size_t i = 0; i < g.size(); ++i) {
    sum.add(space.weight(i) * g.at(i) * (std::log(t.at(i)) - log_et));
  }
  return sum.value();
}

// Split as E[G (log G - log c)] - (EG - c), using E[1] = 1 for the constant
// term. The first sum coincides with the entropy loop at c = EG, so the
// attainment is exact there.
double variation_value(const FunctionTable& g, double c) {
  require_positive(g, "variation_value");
  if (!(c > 0.0)) throw DomainError("variation_value requires c > 0");
  const double log_c = std::log(c);
  const auto& space = g.space();
  NeumaierSum relative;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double v = g.at(i);
    relative.add(space.weight(i) * v * (std::log(v) - log_c));
  }
  return relative.value() - (g.expectation() - c);
}

double tensorization_gap(const FunctionTable& g) {
  NeumaierSum partial_sum;
  for (std::size_t k = 0; k < g.space().num_coordinates(); ++k) {
    partial_sum.add(partial_entropy(g, k).expectation());
  }
  return partial_sum.value() - entropy(g);
}

double log_sobolev_gap(const FunctionTable& z, double lambda,
                       std::span<const FunctionTable> zk_tables) {
  const auto& space = z.space();
  const std::size_t n = space.num_coordinates();
  if (zk_tables.size() != n) {
    throw ShapeError("expected " + std::to_string(n) + " perturbed tables, got " +
                     std::to_string(zk_tables.size()));
  }
  for (std::size_t k = 0; k < n; ++k) {
    require_same_space(z, zk_tables[k], "log_sobolev_gap");
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (-lambda * (z.at(i) - zk_tables[k].at(i)) > 0.0) {
        throw PreconditionError(
            "sign condition -lambda (Z - Z_k) <= 0 fails at point " + std::to_string(i) +
                ", coordinate " + std::to_string(k) + " (Z=" + std::to_string(z.at(i)) +
                ", Z_k=" + std::to_string(zk_tables[k].at(i)) +
                ", lambda=" + std::to_string(lambda) + ")",
            i, k);
      }
    }
  }

  NeumaierSum exp_delta;   // E[e^{lambda Z} Delta^2]
  NeumaierSum z_exp;       // E[lambda Z e^{lambda Z}]
  NeumaierSum exp_mean;    // E[e^{lambda Z}]
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double w = space.weight(i);
    const double zi = z.at(i);
    const double e = std::exp(lambda * zi);
    double delta_sq = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double d = zi - zk_tables[k].at(i);
      delta_sq += d * d;
    }
    exp_delta.add(w * e * delta_sq);
    z_exp.add(w * lambda * zi * e);
    exp_mean.add(w * e);
  }
  const double e_exp = exp_mean.value();
  const double tilt_entropy = z_exp.value() - e_exp * std::log(e_exp);
  return 0.5 * lambda * lambda * exp_delta.value() - tilt_entropy;
}

std::pair<double, double> herbst_mgf_check(const FunctionTable& z, double lambda, double sup_delta,
                                           TailSide side) {
  if (!(sup_delta >= 0.0)) throw DomainError("herbst_mgf_check requires sup_delta >= 0");
  if (side == TailSide::kRight && lambda < 0.0) {
    throw PreconditionError("right-tail Herbst bound requires lambda >= 0, got " +
                            std::to_string(lambda));
  }
  if (side == TailSide::kLeft && lambda > 0.0) {
    throw PreconditionError("left-tail Herbst bound requires lambda <= 0, got " +
                            std::to_string(lambda));
  }
  const double ez = z.expectation();
  const auto& space = z.space();
  NeumaierSum mgf;
  for (std::size_t i = 0; i < z.size(); ++i) {
    mgf.add(space.weight(i) * std::exp(lambda * (z.at(i) - ez)));
  }
  return {mgf.value(), std::exp(0.5 * sup_delta * lambda * lambda)};
}

}  // namespace tailforge

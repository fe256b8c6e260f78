#pragma once

// Finite product probability spaces and tables of function values on them.
// These are the domain of every exact entropy computation: expectations are
// weighted sums, never samples.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tailforge {

// One point of a coordinate. Scalars are stored as single-component vectors;
// the flag only affects how the point is serialized.
struct CoordinatePoint {
  std::vector<double> components;
  bool scalar = true;

  static CoordinatePoint of(double x) { return {{x}, true}; }
  static CoordinatePoint of(std::vector<double> xs) { return {std::move(xs), false}; }

  friend bool operator==(const CoordinatePoint& a, const CoordinatePoint& b) {
    return a.components == b.components;
  }
};

// The law of a single coordinate: an ordered finite support with one
// probability weight per point.
class CoordinateSpace {
 public:
  CoordinateSpace(std::vector<CoordinatePoint> points, std::vector<double> weights,
                  double weight_tol = kDefaultWeightTol);

  // Scalar support helper: points {xs[0], xs[1], ...}.
  static CoordinateSpace scalar(const std::vector<double>& xs, std::vector<double> weights,
                                double weight_tol = kDefaultWeightTol);
  // Uniform weights over a scalar support.
  static CoordinateSpace uniform(const std::vector<double>& xs);

  std::size_t size() const { return points_.size(); }
  const std::vector<CoordinatePoint>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }

  friend bool operator==(const CoordinateSpace& a, const CoordinateSpace& b) {
    return a.points_ == b.points_ && a.weights_ == b.weights_;
  }

  static constexpr double kDefaultWeightTol = 1e-12;

 private:
  std::vector<CoordinatePoint> points_;
  std::vector<double> weights_;
};

// Ordered product of coordinate spaces. Points are addressed row-major with
// coordinate 0 slowest, so the flat order is deterministic for serialization.
//
// A product of zero coordinates is the single-point space of the empty
// product; it appears as the value space of partial entropies of univariate
// tables. Externally parsed spaces must have at least one coordinate.
class ProductSpace {
 public:
  static constexpr std::uint64_t kDefaultPointCap = 1000000;

  explicit ProductSpace(std::vector<CoordinateSpace> coordinates,
                        std::uint64_t point_cap = kDefaultPointCap);

  std::size_t num_coordinates() const { return coordinates_.size(); }
  const CoordinateSpace& coordinate(std::size_t k) const { return coordinates_[k]; }
  const std::vector<CoordinateSpace>& coordinates() const { return coordinates_; }

  std::size_t total_points() const { return total_points_; }

  // Number of flat-index steps between consecutive values of coordinate k.
  std::size_t stride(std::size_t k) const { return strides_[k]; }

  std::size_t flat_index(std::span<const std::size_t> multi) const;
  std::vector<std::size_t> multi_index(std::size_t flat) const;

  // Product of per-coordinate weights at a flat index.
  double weight(std::size_t flat) const;

  // The space with coordinate k removed.
  ProductSpace drop_coordinate(std::size_t k) const;

  friend bool operator==(const ProductSpace& a, const ProductSpace& b) {
    return a.coordinates_ == b.coordinates_;
  }

 private:
  std::vector<CoordinateSpace> coordinates_;
  std::vector<std::size_t> strides_;
  std::size_t total_points_ = 1;
};

// Values of a function at every point of a product space, flat row-major.
// The positivity flag marks tables that may enter entropy functionals.
class FunctionTable {
 public:
  FunctionTable(ProductSpace space, std::vector<double> values, bool positive);

  static FunctionTable constant(ProductSpace space, double value);

  const ProductSpace& space() const { return space_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& mutable_values() { return values_; }
  bool positive() const { return positive_; }

  double at(std::size_t flat) const { return values_[flat]; }
  std::size_t size() const { return values_.size(); }

  // Exact weighted mean under the product measure (compensated summation).
  double expectation() const;

 private:
  ProductSpace space_;
  std::vector<double> values_;
  bool positive_;
};

void require_positive(const FunctionTable& table, const char* op_name);
void require_same_space(const FunctionTable& a, const FunctionTable& b, const char* op_name);

}  // namespace tailforge

#include "tailforge/product_space.hpp"

#include <cmath>
#include <string>

#include "tailforge/errors.hpp"
#include "tailforge/summation.hpp"

namespace tailforge {

CoordinateSpace::CoordinateSpace(std::vector<CoordinatePoint> points, std::vector<double> weights,
                                 double weight_tol)
    : points_(std::move(points)), weights_(std::move(weights)) {
  if (points_.empty()) {
    throw DomainError("coordinate space must have at least one point");
  }
  if (points_.size() != weights_.size()) {
    throw ShapeError("coordinate space has " + std::to_string(points_.size()) + " points but " +
                     std::to_string(weights_.size()) + " weights");
  }
  NeumaierSum total;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] >= 0.0)) {
      throw DomainError("weight " + std::to_string(i) + " is negative or NaN");
    }
    total.add(weights_[i]);
  }
  if (std::abs(total.value() - 1.0) > weight_tol) {
    throw DomainError("weights sum to " + std::to_string(total.value()) + ", expected 1 within " +
                      std::to_string(weight_tol));
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (points_[i] == points_[j]) {
        throw DomainError("duplicate points at indices " + std::to_string(i) + " and " +
                          std::to_string(j));
      }
    }
  }
}

CoordinateSpace CoordinateSpace::scalar(const std::vector<double>& xs, std::vector<double> weights,
                                        double weight_tol) {
  std::vector<CoordinatePoint> pts;
  pts.reserve(xs.size());
  for (double x : xs) pts.push_back(CoordinatePoint::of(x));
  return CoordinateSpace(std::move(pts), std::move(weights), weight_tol);
}

CoordinateSpace CoordinateSpace::uniform(const std::vector<double>& xs) {
  if (xs.empty()) throw DomainError("coordinate space must have at least one point");
  std::vector<double> w(xs.size(), 1.0 / static_cast<double>(xs.size()));
  return scalar(xs, std::move(w));
}

ProductSpace::ProductSpace(std::vector<CoordinateSpace> coordinates, std::uint64_t point_cap)
    : coordinates_(std::move(coordinates)) {
  std::uint64_t total = 1;
  for (const auto& coord : coordinates_) {
    const std::uint64_t size = coord.size();
    if (total > point_cap / size) {
      throw CapacityError("product space exceeds the point cap of " + std::to_string(point_cap));
    }
    total *= size;
  }
  total_points_ = static_cast<std::size_t>(total);
  strides_.assign(coordinates_.size(), 1);
  for (std::size_t k = coordinates_.size(); k-- > 1;) {
    strides_[k - 1] = strides_[k] * coordinates_[k].size();
  }
}

std::size_t ProductSpace::flat_index(std::span<const std::size_t> multi) const {
  if (multi.size() != coordinates_.size()) {
    throw ShapeError("multi-index arity mismatch");
  }
  std::size_t flat = 0;
  for (std::size_t k = 0; k < multi.size(); ++k) {
    if (multi[k] >= coordinates_[k].size()) {
      throw DomainError("multi-index out of range at coordinate " + std::to_string(k));
    }
    flat += multi[k] * strides_[k];
  }
  return flat;
}

std::vector<std::size_t> ProductSpace::multi_index(std::size_t flat) const {
  if (flat >= total_points_) throw DomainError("flat index out of range");
  std::vector<std::size_t> multi(coordinates_.size());
  for (std::size_t k = 0; k < coordinates_.size(); ++k) {
    multi[k] = (flat / strides_[k]) % coordinates_[k].size();
  }
  return multi;
}

double ProductSpace::weight(std::size_t flat) const {
  double w = 1.0;
  for (std::size_t k = 0; k < coordinates_.size(); ++k) {
    w *= coordinates_[k].weights()[(flat / strides_[k]) % coordinates_[k].size()];
  }
  return w;
}

ProductSpace ProductSpace::drop_coordinate(std::size_t k) const {
  if (k >= coordinates_.size()) throw DomainError("coordinate index out of range");
  std::vector<CoordinateSpace> rest;
  rest.reserve(coordinates_.size() - 1);
  for (std::size_t j = 0; j < coordinates_.size(); ++j) {
    if (j != k) rest.push_back(coordinates_[j]);
  }
  return ProductSpace(std::move(rest));
}

FunctionTable::FunctionTable(ProductSpace space, std::vector<double> values, bool positive)
    : space_(std::move(space)), values_(std::move(values)), positive_(positive) {
  if (values_.size() != space_.total_points()) {
    throw ShapeError("table has " + std::to_string(values_.size()) + " values but the space has " +
                     std::to_string(space_.total_points()) + " points");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (std::isnan(values_[i])) {
      throw DomainError("value at flat index " + std::to_string(i) + " is NaN");
    }
    if (positive_ && !(values_[i] > 0.0)) {
      throw DomainError("positive table has non-positive value " + std::to_string(values_[i]) +
                        " at flat index " + std::to_string(i));
    }
  }
}

FunctionTable FunctionTable::constant(ProductSpace space, double value) {
  const std::size_t n = space.total_points();
  return FunctionTable(std::move(space), std::vector<double>(n, value), value > 0.0);
}

double FunctionTable::expectation() const {
  NeumaierSum sum;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    sum.add(space_.weight(i) * values_[i]);
  }
  return sum.value();
}

void require_positive(const FunctionTable& table, const char* op_name) {
  if (!table.positive()) {
    throw DomainError(std::string(op_name) + " requires a strictly positive table");
  }
}

void require_same_space(const FunctionTable& a, const FunctionTable& b, const char* op_name) {
  if (!(a.space() == b.space())) {
    throw ShapeError(std::string(op_name) + " requires both tables on the same space");
  }
}

}  // namespace tailforge

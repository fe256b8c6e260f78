#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace tailforge {

// Neumaier compensated accumulator. The exact-layer checks compare sums
// evaluated along different algebraic routes at 1e-12 relative, which plain
// left-to-right accumulation does not reliably deliver.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
  NeumaierSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

}  // namespace tailforge

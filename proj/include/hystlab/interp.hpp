#pragma once

#include <vector>

namespace hystlab {

// Shape-preserving cubic through tabulated nodes (Fritsch-Carlson limited slopes).
// Values never overshoot the adjacent node values, so a positive table
// interpolates positive and a monotone table interpolates monotone.
// Outside the table the value is clamped to the end nodes.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  double value(double x) const;
  double derivative(double x) const;  // 0 outside the table
  // Solves value(t) = y on the table range; data must be strictly monotone.
  double inverse(double y) const;

  bool strictly_increasing() const;
  bool strictly_decreasing() const;

  const std::vector<double>& xs() const { return x_; }
  const std::vector<double>& ys() const { return y_; }

 private:
  int interval(double x) const;

  std::vector<double> x_, y_, m_;  // nodes and node slopes
};

}  // namespace hystlab

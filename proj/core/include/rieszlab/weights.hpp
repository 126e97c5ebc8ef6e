#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rieszlab/intervals.hpp"

namespace rieszlab {

/// Weight on the real line for weighted L^2 inner products. Two families
/// are supported exactly: piecewise-constant weights, and the power weight
/// w(x) = x^alpha on [0,1] (alpha > -1). Anything else is out of scope.
class WeightSpec {
 public:
  enum class Kind { kUnit, kPiecewiseConstant, kPower };

  WeightSpec() = default;  // unit weight

  static WeightSpec unit();
  /// pieces: (interval, value) with values >= 0. Off-piece weight is 0.
  static WeightSpec piecewise(std::vector<std::pair<Interval, double>> pieces);
  /// w(x) = x^alpha on [0,1]; alpha > -1 so the integral is finite.
  static WeightSpec power(double alpha);

  Kind kind() const { return kind_; }
  bool is_unit() const { return kind_ == Kind::kUnit; }
  double power_alpha() const { return alpha_; }
  const std::vector<std::pair<Interval, double>>& pieces() const { return pieces_; }

  /// Pointwise value (0 outside the support of a piecewise weight; power
  /// weight is 0 outside [0,1]).
  double value(double x) const;

  /// Integral of w over an interval set, in closed form.
  double integral(const IntervalSet& domain) const;

  /// Maximum of the weight over its relevant range (for diagnostics).
  double sup_value() const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::kUnit;
  double alpha_ = 0.0;
  std::vector<std::pair<Interval, double>> pieces_;
};

}  // namespace rieszlab

#pragma once

#include <string>

#include "rieszlab/expansion.hpp"

namespace rieszlab {

/// Finite sections below this floor (absolute, on lambda_min) are reported
/// as numerically singular: their true smallest eigenvalue is below what a
/// double-precision eigensolver can resolve, so 1/lower is meaningless and
/// the constant is floored at 1/kSingularFloor as a resolution-limited
/// lower estimate.
inline constexpr double kSingularFloor = 1e-12;

/// Two-sided Riesz bounds of a finite section: the extreme eigenvalues of
/// its Gram matrix and the constant K = max(upper, 1/lower). On domains of
/// measure != 1 the measure-normalized pair is carried alongside.
struct RieszBounds {
  double lower = 0.0;
  double upper = 0.0;
  double constant = 0.0;
  std::string truncation;          // human-readable description of Lambda
  double domain_measure = 0.0;     // weighted measure of the domain
  bool measure_normalized_flag = false;  // set when measure differs from 1
  double normalized_lower = 0.0;
  double normalized_upper = 0.0;
  bool singular = false;           // lower at or below the resolution floor
  bool estimated = false;          // extremes from Lanczos, not dense

  std::string to_json() const;
};

RieszBounds riesz_bounds(const ExponentialSystem& system, const IntervalSet& domain,
                         const WeightSpec& w = WeightSpec::unit());
RieszBounds riesz_bounds(const ExponentialSystem2D& system, const Disk& domain);

/// Builds RieszBounds from precomputed extremes (shared by both overloads
/// and by pipelines that already have the eigenvalues).
RieszBounds bounds_from_extremes(double lower, double upper, double measure,
                                 std::string truncation, bool estimated);

/// Perturbed-integer experiment: Gamma = {k + delta_k}, delta_k = +delta for
/// even k and -delta for odd k, k in [-n, n], on S = [0,1]. Requires
/// 0 <= delta < 0.5 so perturbed frequencies cannot collide.
RieszBounds kadec_experiment(double delta, int n);

}  // namespace rieszlab

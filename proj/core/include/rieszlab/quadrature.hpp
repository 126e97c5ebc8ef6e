#pragma once

#include <functional>

#include "rieszlab/disk.hpp"
#include "rieszlab/intervals.hpp"
#include "rieszlab/transforms.hpp"

namespace rieszlab {

/// Composite Simpson over every interval of the set with `nodes` points per
/// interval (rounded up to an odd count >= 3). Error is O(nodes^-4) for
/// smooth integrands. Kept deliberately independent of the closed-form
/// transforms so it can serve as their oracle.
Complex simpson(const std::function<Complex(double)>& f, const IntervalSet& domain, int nodes);
double simpson_real(const std::function<double(double)>& f, const IntervalSet& domain, int nodes);

/// Tensor polar quadrature of f over a full disk: Gauss-Legendre in radius,
/// uniform (trapezoidal) in angle.
double polar_disk_integral(const std::function<double(Vec2)>& f, const Disk& disk,
                           int radial_nodes, int angular_nodes);

/// Integral of f over {x in base : |x - cut.center| > cut.radius}, i.e. the
/// base disk minus another disk. Per angular ray from the base center, the
/// excluded radii form one interval found from the circle-cut quadratic, so
/// the region is integrated without boundary-crossing cells. Set
/// `keep_inside_cut` to integrate over the intersection instead.
double disk_minus_disk_integral(const std::function<double(Vec2)>& f, const Disk& base,
                                const Disk& cut, int radial_nodes, int angular_nodes,
                                bool keep_inside_cut = false);

}  // namespace rieszlab

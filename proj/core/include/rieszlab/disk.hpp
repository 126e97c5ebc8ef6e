#pragma once

#include <array>

namespace rieszlab {

using Vec2 = std::array<double, 2>;

/// Planar disk; the default is the area-1 disk centered at the origin.
struct Disk {
  double radius;
  Vec2 center{0.0, 0.0};

  double area() const;
};

/// The area-1 disk, radius 1/sqrt(pi).
Disk unit_area_disk();

/// Area of D \ (D + t) for two radius-r disks whose centers are distance d
/// apart: pi r^2 - 2 r^2 acos(d / 2r) + (d/2) sqrt(4 r^2 - d^2) for d < 2r,
/// and the full pi r^2 once the disks are disjoint.
/// Throws std::invalid_argument for r <= 0 or d < 0.
double disk_lune_area(double r, double d);

}  // namespace rieszlab

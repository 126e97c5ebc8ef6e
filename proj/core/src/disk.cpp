#include "rieszlab/disk.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rieszlab {

double Disk::area() const { return std::numbers::pi * radius * radius; }

Disk unit_area_disk() { return Disk{1.0 / std::sqrt(std::numbers::pi)}; }

double disk_lune_area(double r, double d) {
  if (!(r > 0.0) || d < 0.0) {
    throw std::invalid_argument("disk_lune_area: need r > 0 and d >= 0");
  }
  const double full = std::numbers::pi * r * r;
  if (d >= 2.0 * r) return full;
  const double half = d / (2.0 * r);
  const double lens = 2.0 * r * r * std::acos(half) - 0.5 * d * std::sqrt(4.0 * r * r - d * d);
  return full - lens;
}

}  // namespace rieszlab

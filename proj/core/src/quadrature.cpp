#include "rieszlab/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace rieszlab {

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; mirror).
constexpr std::array<double, 8> kGlNodes = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
constexpr std::array<double, 8> kGlWeights = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

template <typename F>
double gl16(const F& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    sum += kGlWeights[i] * (f(mid - half * kGlNodes[i]) + f(mid + half * kGlNodes[i]));
  }
  return half * sum;
}

int odd_at_least_3(int nodes) {
  if (nodes < 2) throw std::invalid_argument("simpson: need at least 2 nodes");
  int n = std::max(nodes, 3);
  if (n % 2 == 0) ++n;
  return n;
}

}  // namespace

Complex simpson(const std::function<Complex(double)>& f, const IntervalSet& domain, int nodes) {
  const int n = odd_at_least_3(nodes);
  Complex total{0.0, 0.0};
  for (const Interval& iv : domain.parts()) {
    const double h = iv.length() / double(n - 1);
    Complex sum = f(iv.lo) + f(iv.hi);
    for (int i = 1; i < n - 1; ++i) {
      sum += (i % 2 == 1 ? 4.0 : 2.0) * f(iv.lo + h * i);
    }
    total += sum * (h / 3.0);
  }
  return total;
}

double simpson_real(const std::function<double(double)>& f, const IntervalSet& domain,
                    int nodes) {
  return simpson([&f](double x) { return Complex(f(x), 0.0); }, domain, nodes).real();
}

double polar_disk_integral(const std::function<double(Vec2)>& f, const Disk& disk,
                           int radial_nodes, int angular_nodes) {
  if (radial_nodes < 1 || angular_nodes < 4) {
    throw std::invalid_argument("polar_disk_integral: bad node counts");
  }
  const double dphi = 2.0 * std::numbers::pi / angular_nodes;
  const int panels = (radial_nodes + 15) / 16;
  double total = 0.0;
  for (int a = 0; a < angular_nodes; ++a) {
    const double phi = (a + 0.5) * dphi;
    const double cph = std::cos(phi), sph = std::sin(phi);
    auto ray = [&](double rho) {
      return rho * f({disk.center[0] + rho * cph, disk.center[1] + rho * sph});
    };
    double along = 0.0;
    const double seg = disk.radius / panels;
    for (int p = 0; p < panels; ++p) along += gl16(ray, p * seg, (p + 1) * seg);
    total += along;
  }
  return total * dphi;
}

double disk_minus_disk_integral(const std::function<double(Vec2)>& f, const Disk& base,
                                const Disk& cut, int radial_nodes, int angular_nodes,
                                bool keep_inside_cut) {
  if (radial_nodes < 1 || angular_nodes < 4) {
    throw std::invalid_argument("disk_minus_disk_integral: bad node counts");
  }
  const double dphi = 2.0 * std::numbers::pi / angular_nodes;
  const double cx = cut.center[0] - base.center[0];
  const double cy = cut.center[1] - base.center[1];
  const double c2 = cx * cx + cy * cy;
  const double R = base.radius;
  const double r2 = cut.radius * cut.radius;
  const int panels_per_unit = std::max(1, (radial_nodes + 15) / 16);

  double total = 0.0;
  for (int a = 0; a < angular_nodes; ++a) {
    const double phi = (a + 0.5) * dphi;
    const double cph = std::cos(phi), sph = std::sin(phi);
    // Inside the cut disk along this ray iff rho in (rho_minus, rho_plus):
    // |rho e_phi - c|^2 < r^2  ->  rho^2 - 2 rho <c, e_phi> + |c|^2 - r^2 < 0.
    const double proj = cx * cph + cy * sph;
    const double disc = proj * proj - (c2 - r2);
    double cut_lo = 0.0, cut_hi = 0.0;  // empty
    if (disc > 0.0) {
      const double root = std::sqrt(disc);
      cut_lo = std::clamp(proj - root, 0.0, R);
      cut_hi = std::clamp(proj + root, 0.0, R);
    }
    std::vector<std::pair<double, double>> segs;
    if (keep_inside_cut) {
      if (cut_hi > cut_lo) segs.push_back({cut_lo, cut_hi});
    } else {
      if (cut_lo > 0.0) segs.push_back({0.0, cut_lo});
      if (cut_hi < R) segs.push_back({cut_hi, R});
    }
    auto ray = [&](double rho) {
      return rho * f({base.center[0] + rho * cph, base.center[1] + rho * sph});
    };
    double along = 0.0;
    for (const auto& [lo, hi] : segs) {
      if (hi - lo <= 0.0) continue;
      const int panels = std::max(1, int(std::ceil((hi - lo) / R * panels_per_unit)));
      const double seg = (hi - lo) / panels;
      for (int p = 0; p < panels; ++p) along += gl16(ray, lo + p * seg, lo + (p + 1) * seg);
    }
    total += along;
  }
  return total * dphi;
}

}  // namespace rieszlab

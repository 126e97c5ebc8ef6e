#include "rieszlab/pigeonhole.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "json.hpp"

namespace rieszlab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

SectorSumResult sector_sum_lowerbound(const std::vector<Complex>& values) {
  std::vector<double> args;
  SectorSumResult out;
  Complex sum{0.0, 0.0};
  for (const Complex& v : values) {
    sum += v;
    out.sum_of_moduli += std::abs(v);
    if (std::abs(v) > 0.0) {
      double a = std::arg(v);
      if (a < 0.0) a += kTwoPi;
      args.push_back(a);
    }
  }
  out.modulus_of_sum = std::abs(sum);

  // Confined to a 120-degree sector iff the largest circular gap between
  // consecutive arguments is at least 240 degrees.
  if (args.size() >= 2) {
    std::sort(args.begin(), args.end());
    double max_gap = args.front() + kTwoPi - args.back();
    for (std::size_t i = 1; i < args.size(); ++i) {
      max_gap = std::max(max_gap, args[i] - args[i - 1]);
    }
    if (max_gap < 2.0 * kTwoPi / 3.0 - 1e-9) {
      throw std::invalid_argument("sector_sum_lowerbound: values span more than 120 degrees");
    }
  }
  return out;
}

PigeonholeResult sector_pigeonhole_select(const CMatrix& samples, const std::vector<double>& grid,
                                          double a_measure, double m_bound) {
  const Eigen::Index n = samples.rows();
  const Eigen::Index pts = samples.cols();
  if (n < 1 || pts < 1) throw std::invalid_argument("sector_pigeonhole_select: empty samples");
  if (grid.size() != std::size_t(pts)) {
    throw std::invalid_argument("sector_pigeonhole_select: grid size mismatch");
  }
  if (!(a_measure > 0.0) || !(m_bound > 0.0)) {
    throw std::invalid_argument("sector_pigeonhole_select: need |A| > 0 and M > 0");
  }

  // Witness point: grid column with the largest stacked energy.
  Eigen::Index x0 = 0;
  double best = -1.0;
  for (Eigen::Index p = 0; p < pts; ++p) {
    const double col = samples.col(p).squaredNorm();
    if (col > best) {
      best = col;
      x0 = p;
    }
  }

  // Three half-open sectors of arg g_i(x0).
  std::vector<std::vector<Eigen::Index>> sectors(3);
  std::vector<double> weight(3, 0.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex v = samples(i, x0);
    double a = std::arg(v);
    if (a < 0.0) a += kTwoPi;
    int j = int(a / (kTwoPi / 3.0));
    j = std::clamp(j, 0, 2);
    sectors[std::size_t(j)].push_back(i);
    weight[std::size_t(j)] += std::abs(v);
  }
  const int heavy =
      int(std::max_element(weight.begin(), weight.end()) - weight.begin());
  const auto& chosen = sectors[std::size_t(heavy)];

  PigeonholeResult out;
  out.sector = heavy + 1;
  out.witness_point = grid[std::size_t(x0)];
  out.bound = 6.0 * m_bound * m_bound * a_measure / std::sqrt(double(n));
  out.sector_size = int(chosen.size());

  // Grid energies (equal-weight rule over A) and the minimizing member.
  if (chosen.empty()) {
    // Degenerate: all g_i(x0) vanish and land in sector 1 by convention, so
    // an empty chosen sector cannot happen; guard anyway.
    throw std::logic_error("sector_pigeonhole_select: empty winning sector");
  }
  double best_energy = std::numeric_limits<double>::infinity();
  for (const Eigen::Index i : chosen) {
    const double energy = a_measure * samples.row(i).squaredNorm() / double(pts);
    if (energy < best_energy) {
      best_energy = energy;
      out.index = int(i);
    }
  }
  out.energy = best_energy;

  // Hypothesis check for the returned sector set.
  const double allowed = m_bound * std::sqrt(double(chosen.size()));
  double margin = -std::numeric_limits<double>::infinity();
  for (Eigen::Index p = 0; p < pts; ++p) {
    Complex s{0.0, 0.0};
    for (const Eigen::Index i : chosen) s += samples(i, p);
    margin = std::max(margin, std::abs(s) - allowed);
  }
  out.hypothesis_margin = margin;
  out.hypothesis_ok = margin <= 1e-12 * std::max(1.0, allowed);
  return out;
}

std::string PigeonholeResult::to_json() const {
  nlohmann::json js;
  js["index"] = index;
  js["energy"] = energy;
  js["bound"] = bound;
  js["sector"] = sector;
  js["witness_point"] = witness_point;
  js["sector_size"] = sector_size;
  js["hypothesis_ok"] = hypothesis_ok;
  js["hypothesis_margin"] = hypothesis_margin;
  return js.dump();
}

}  // namespace rieszlab

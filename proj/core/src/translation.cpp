#include "rieszlab/translation.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rieszlab {

CVector translate_coefficients(const CVector& c, const ExponentialSystem& system, double t) {
  if (c.size() != Eigen::Index(system.size())) {
    throw std::invalid_argument("translate_coefficients: length mismatch");
  }
  if (!std::isfinite(t)) throw std::invalid_argument("translate_coefficients: non-finite shift");
  CVector d(c.size());
  for (Eigen::Index j = 0; j < c.size(); ++j) {
    d[j] = c[j] * unit_phase(-system[std::size_t(j)] * t);
  }
  return d;
}

CVector translate_coefficients(const CVector& c, const ExponentialSystem2D& system,
                               const Vec2& t) {
  if (c.size() != Eigen::Index(system.size())) {
    throw std::invalid_argument("translate_coefficients: length mismatch");
  }
  CVector d(c.size());
  for (Eigen::Index j = 0; j < c.size(); ++j) {
    const Vec2& lam = system.freqs()[std::size_t(j)];
    d[j] = c[j] * unit_phase(-(lam[0] * t[0] + lam[1] * t[1]));
  }
  return d;
}

TranslationReport translation_diagnostic(const ExpansionEngine& engine, const FunctionSpec& f,
                                         const ExponentialSystem& system, double t) {
  const ExpansionResult ex = engine.expand(f);
  const CVector d = translate_coefficients(ex.coefficients, system, t);

  TranslationReport rep;
  rep.shift = t;
  rep.coeff_energy = ex.coefficients.squaredNorm();
  rep.f_energy = ex.expanded_energy;
  rep.g_energy = engine.energy(d);
  rep.residual_energy = ex.residual_energy;
  rep.function_norm_sq = ex.function_norm_sq;
  rep.solver_iterations = ex.solve_stats.iterations;
  const double r = rep.g_energy / rep.f_energy;
  rep.implied_K = std::sqrt(std::max(r, 1.0 / r));
  return rep;
}

TranslationReport translation_diagnostic(const IntervalSet& domain, const WeightSpec& w,
                                         const ExponentialSystem& system, const FunctionSpec& f,
                                         double t, double ridge) {
  const ExpansionEngine engine(system, domain, w, ridge);
  return translation_diagnostic(engine, f, system, t);
}

WeightedScanResult weighted_scan(const WeightSpec& w, const std::vector<double>& eps_grid,
                                 double truncation_F) {
  if (eps_grid.empty()) throw std::invalid_argument("weighted_scan: empty eps grid");
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    if (!(eps_grid[i] > 0.0) || eps_grid[i] >= 0.5) {
      throw std::invalid_argument("weighted_scan: eps values must lie in (0, 0.5)");
    }
    if (i > 0 && !(eps_grid[i] < eps_grid[i - 1])) {
      throw std::invalid_argument("weighted_scan: eps grid must be strictly decreasing");
    }
  }
  if (w.kind() == WeightSpec::Kind::kPower) {
    const double a = w.power_alpha();
    if (a < 0.0 || std::abs(a - std::round(a)) > 1e-12) {
      throw std::invalid_argument(
          "weighted_scan: power weights need integer alpha >= 0 (closed-form entries)");
    }
  }
  if (!(truncation_F >= 1.0)) throw std::invalid_argument("weighted_scan: truncation too small");

  const IntervalSet unit = IntervalSet::normalized({{0.0, 1.0}});
  const long F = long(std::floor(truncation_F + 1e-9));
  const ExponentialSystem lattice = ExponentialSystem::lattice(1.0, -F, F);
  const ExpansionEngine engine(lattice, unit, w, 0.0);

  WeightedScanResult out;
  out.weight = w.describe();
  out.truncation = double(F);
  for (double eps : eps_grid) {
    const FunctionSpec f = unit_l2_indicator(IntervalSet::normalized({{0.0, eps}}));
    const double t = 1.0 - 2.0 * eps;
    WeightedScanRow row;
    row.eps = eps;
    row.shift = t;
    row.report = translation_diagnostic(engine, f, lattice, t);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string TranslationReport::to_json() const {
  nlohmann::json js;
  js["shift"] = shift;
  js["coeff_energy"] = coeff_energy;
  js["f_energy"] = f_energy;
  js["g_energy"] = g_energy;
  js["implied_K"] = implied_K;
  js["residual_energy"] = residual_energy;
  js["function_norm_sq"] = function_norm_sq;
  js["solver_iterations"] = solver_iterations;
  return js.dump();
}

std::string WeightedScanResult::to_json() const {
  nlohmann::json js;
  js["weight"] = weight;
  js["truncation"] = truncation;
  js["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json rj = nlohmann::json::parse(row.report.to_json());
    rj["eps"] = row.eps;
    js["rows"].push_back(rj);
  }
  return js.dump();
}

std::string WeightedScanResult::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "eps,shift,implied_K,coeff_energy,f_energy,g_energy,residual_energy,iterations\n";
  for (const auto& row : rows) {
    os << row.eps << "," << row.shift << "," << row.report.implied_K << ","
       << row.report.coeff_energy << "," << row.report.f_energy << "," << row.report.g_energy
       << "," << row.report.residual_energy << "," << row.report.solver_iterations << "\n";
  }
  return os.str();
}

}  // namespace rieszlab

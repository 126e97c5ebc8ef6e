#include "rieszlab/pipelines.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <Eigen/Cholesky>

#include "json.hpp"

#include "rieszlab/quadrature.hpp"
#include "rieszlab/spectral.hpp"

namespace rieszlab {

double golden_threshold() { return std::sqrt(0.5 * (1.0 + std::sqrt(5.0))); }

namespace {

constexpr const char* kScaleNote =
    "split counts are parametric stand-ins: the doubly-exponential interval counts "
    "the construction calls for are out of desk scale, so the final comparison is "
    "reported as data, not as a conclusion";

}  // namespace

Theorem2Report theorem2_run(const Theorem2Params& params) {
  if (params.ell < 4) throw std::invalid_argument("theorem2_run: ell must be an integer >= 4");
  if (!(params.truncation >= 1.0)) throw std::invalid_argument("theorem2_run: truncation too small");
  if (params.grid_per_interval < 2) {
    throw std::invalid_argument("theorem2_run: grid_per_interval too small");
  }
  const int n = params.stages;
  std::vector<int> splits = params.split_counts;
  if (splits.empty() && n > 1) splits = default_split_counts(n);
  const NestedSplitFamily family = make_split_family(n, splits);
  const SplitStage& top = family.stage(n);
  const IntervalSet& S = top.set;

  Theorem2Report rep;
  rep.stages = n;
  rep.split_counts = splits;
  rep.ell = params.ell;
  rep.truncation = params.truncation;
  rep.eps = top.eps;
  rep.set_measure = S.measure();
  rep.usable_count = int(top.usable.size());
  rep.scale_note = kScaleNote;

  const ExponentialSystem lattice =
      ExponentialSystem::lattice_in_band(params.ell, params.truncation);
  rep.khat = riesz_bounds(lattice, S);

  if (n == 1) {
    rep.outcome = "degenerate";
    return rep;
  }

  const LeftEdgeRegion edge = left_edge_region(family, n, top.eps);
  rep.long_interval_count = edge.long_interval_count;
  rep.edge_region_measure = edge.region.measure();
  rep.edge_region_merged = edge.merged;

  rep.ridge = 1e-10 * rep.set_measure;
  const ExpansionEngine engine(lattice, S, WeightSpec::unit(), rep.ridge);

  const Eigen::Index m = Eigen::Index(lattice.size());
  const int count = rep.usable_count;
  CMatrix smoothed(m, count);  // column i: c_i * hhat elementwise
  CVector hhat(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    hhat[j] = Complex(mollifier_ft(rep.eps, lattice[std::size_t(j)]), 0.0);
  }

  double worst_residual = 0.0;
  for (int i = 0; i < count; ++i) {
    const FunctionSpec f = unit_l2_indicator(IntervalSet::normalized(
        {{top.usable[std::size_t(i)].lo, top.usable[std::size_t(i)].hi}}));
    const ExpansionResult ex = engine.expand(f);
    rep.residuals.push_back(ex.residual_energy);
    rep.coeff_energies.push_back(ex.coefficients.squaredNorm());
    worst_residual = std::max(worst_residual, ex.residual_energy);
    smoothed.col(i) = ex.coefficients.cwiseProduct(hhat);
  }
  rep.outcome = worst_residual > params.residual_gate ? "truncation_insufficient" : "ok";

  // Sample the smoothed functions over A on an equal-weight grid.
  std::vector<double> grid;
  for (const Interval& iv : edge.region.parts()) {
    const double h = iv.length() / params.grid_per_interval;
    for (int p = 0; p < params.grid_per_interval; ++p) {
      grid.push_back(iv.lo + (p + 0.5) * h);
    }
  }
  const Eigen::Index pts = Eigen::Index(grid.size());
  CMatrix phases(pts, m);
  for (Eigen::Index p = 0; p < pts; ++p) {
    for (Eigen::Index j = 0; j < m; ++j) {
      phases(p, j) = unit_phase(lattice[std::size_t(j)] * grid[std::size_t(p)]);
    }
  }
  const CMatrix samples = (phases * smoothed).transpose();  // count x pts

  rep.m_bound = 2.0 * rep.khat.constant / std::sqrt(rep.eps);
  rep.selection =
      sector_pigeonhole_select(samples, grid, rep.edge_region_measure, rep.m_bound);

  const Eigen::Index i0 = rep.selection.index;
  const CVector a0 = smoothed.col(i0);
  rep.ah_sum = a0.squaredNorm();
  rep.ah_claimed_lower = 0.5 / rep.khat.constant;
  rep.coeff_energy_i0 = rep.coeff_energies[std::size_t(i0)];
  rep.period_energy = double(params.ell) * rep.ah_sum;
  rep.period_claimed_upper = rep.khat.constant * rep.khat.constant;

  for (int k = 1; k <= n - 1; ++k) {
    const CVector dk = translate_coefficients(a0, lattice, double(k) * rep.eps);
    rep.gk_energies.push_back(engine.energy(dk));
  }
  rep.gk_claimed_lower = rep.ah_sum / rep.khat.constant;

  const ToeplitzGram edge_gram(lattice, edge.region);
  rep.edge_leakage = edge_gram.quadratic_form(a0);

  rep.final_lhs = double(n - 1) * (rep.gk_claimed_lower - rep.edge_leakage);
  rep.final_rhs = rep.khat.constant * rep.khat.constant;
  return rep;
}

// ---------------------------------------------------------------------------
// Disk pipeline
// ---------------------------------------------------------------------------

SynthesisEvaluator2D::SynthesisEvaluator2D(const ExponentialSystem2D& system, CVector coeffs)
    : freqs_(system.freqs()), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != Eigen::Index(system.size())) {
    throw std::invalid_argument("SynthesisEvaluator2D: coefficient length mismatch");
  }
  if (system.integer_box()) {
    const auto& box = *system.integer_box();
    lo_x_ = box.lo_x;
    lo_y_ = box.lo_y;
    const Eigen::Index wx = box.hi_x - box.lo_x + 1;
    const Eigen::Index wy = box.hi_y - box.lo_y + 1;
    box_coeffs_ = CMatrix::Zero(wx, wy);
    for (std::size_t i = 0; i < system.size(); ++i) {
      const Vec2& f = system.freqs()[i];
      const Eigen::Index ix = Eigen::Index(std::lround(f[0])) - lo_x_;
      const Eigen::Index iy = Eigen::Index(std::lround(f[1])) - lo_y_;
      box_coeffs_(ix, iy) = coeffs_[Eigen::Index(i)];
    }
    boxed_ = true;
  }
}

Complex SynthesisEvaluator2D::operator()(const Vec2& x) const {
  if (boxed_) {
    const Eigen::Index wx = box_coeffs_.rows();
    const Eigen::Index wy = box_coeffs_.cols();
    CVector ux(wx), vy(wy);
    const Complex sx = unit_phase(x[0]);
    const Complex sy = unit_phase(x[1]);
    ux[0] = unit_phase(double(lo_x_) * x[0]);
    for (Eigen::Index i = 1; i < wx; ++i) ux[i] = ux[i - 1] * sx;
    vy[0] = unit_phase(double(lo_y_) * x[1]);
    for (Eigen::Index i = 1; i < wy; ++i) vy[i] = vy[i - 1] * sy;
    return ux.transpose() * (box_coeffs_ * vy);
  }
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < freqs_.size(); ++i) {
    const Vec2& f = freqs_[i];
    sum += coeffs_[Eigen::Index(i)] * unit_phase(f[0] * x[0] + f[1] * x[1]);
  }
  return sum;
}

double SynthesisEvaluator2D::abs2(const Vec2& x) const { return std::norm((*this)(x)); }

DiskReport disk_run(const ExponentialSystem2D& system, const DiskRunParams& params) {
  const Disk D = unit_area_disk();
  if (!(params.eps > 0.0) || params.eps >= 0.5 * D.radius + 1e-15) {
    // eps must stay below 1/(2 sqrt(pi)) so both translated disks make sense
    throw std::invalid_argument("disk_run: eps out of range (0, 1/(2 sqrt(pi)))");
  }
  if (params.theta_count < 8) throw std::invalid_argument("disk_run: theta_count must be >= 8");

  DiskReport rep;
  rep.eps = params.eps;
  rep.theta_count = params.theta_count;
  rep.threshold = golden_threshold();

  const GramMatrix gram = gram_matrix(system, D);
  const auto [lo, hi] = extreme_eigenvalues(gram);
  {
    std::ostringstream os;
    os << "2d:" << system.size() << " freqs, separation " << system.separation();
    rep.bounds = bounds_from_extremes(lo, hi, D.area(), os.str(), gram.dim() > 2048);
  }

  // Moments of f = (1/(sqrt(pi) eps)) 1_{eps D}.
  const Eigen::Index m = gram.dim();
  CVector b(m);
  const double fnorm = 1.0 / (std::sqrt(std::numbers::pi) * params.eps);
  for (Eigen::Index j = 0; j < m; ++j) {
    const Vec2& f = system.freqs()[std::size_t(j)];
    b[j] = Complex(fnorm * disk_indicator_ft(params.eps, std::hypot(f[0], f[1])), 0.0);
  }
  CMatrix shifted = gram.entries;
  if (params.ridge != 0.0) shifted.diagonal().array() += params.ridge;
  Eigen::LDLT<CMatrix> ldlt(shifted);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
    throw std::runtime_error("disk_run: singular disk Gram; consider a ridge");
  }
  const CVector c = ldlt.solve(b);
  rep.expanded_norm = c.dot(gram.entries.selfadjointView<Eigen::Lower>() * c).real();
  rep.residual = 1.0 - 2.0 * b.dot(c).real() + rep.expanded_norm;  // ||f||^2 = 1

  const SynthesisEvaluator2D eval(system, c);
  auto abs2 = [&eval](const Vec2& x) { return eval.abs2(x); };

  double best_k = 0.0;
  double fubini = 0.0;
  const double dtheta = 2.0 * std::numbers::pi / params.theta_count;
  for (int it = 0; it < params.theta_count; ++it) {
    const double theta = it * dtheta;
    const double cth = std::cos(theta), sth = std::sin(theta);
    const Vec2 t{(D.radius - params.eps) * cth, (D.radius - params.eps) * sth};
    const Vec2 s{(D.radius + params.eps) * cth, (D.radius + params.eps) * sth};
    const Disk shifted_t{D.radius, {-t[0], -t[1]}};
    const Disk shifted_s{D.radius, {-s[0], -s[1]}};

    DiskThetaRow row;
    row.theta = theta;
    row.upper_lune = disk_minus_disk_integral(abs2, shifted_t, D, params.radial_nodes,
                                              params.angular_nodes);
    row.lower_lune = disk_minus_disk_integral(abs2, shifted_s, D, params.radial_nodes,
                                              params.angular_nodes);
    row.middle = disk_minus_disk_integral(abs2, shifted_s, shifted_t, params.radial_nodes,
                                          params.angular_nodes);
    row.k_from_upper = std::sqrt(1.0 + row.upper_lune);
    row.k_from_lower = row.lower_lune > 0.0 ? 1.0 / std::sqrt(row.lower_lune)
                                            : std::numeric_limits<double>::infinity();
    best_k = std::max({best_k, row.k_from_upper, row.k_from_lower});
    fubini += row.middle * dtheta;
    rep.rows.push_back(row);
  }
  rep.fubini_theta_integral = fubini;
  rep.implied_k_lower = best_k;
  return rep;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string Theorem2Report::to_json() const {
  nlohmann::json js;
  js["stages"] = stages;
  js["split_counts"] = split_counts;
  js["ell"] = ell;
  js["truncation"] = truncation;
  js["ridge"] = ridge;
  js["eps"] = eps;
  js["set_measure"] = set_measure;
  js["usable_count"] = usable_count;
  js["long_interval_count"] = long_interval_count;
  js["edge_region_measure"] = edge_region_measure;
  js["edge_region_merged"] = edge_region_merged;
  js["khat"] = nlohmann::json::parse(khat.to_json());
  js["residuals"] = residuals;
  js["coeff_energies"] = coeff_energies;
  js["outcome"] = outcome;
  js["m_bound"] = m_bound;
  js["selection"] = nlohmann::json::parse(selection.to_json());
  js["ah_sum"] = ah_sum;
  js["ah_claimed_lower"] = ah_claimed_lower;
  js["coeff_energy_i0"] = coeff_energy_i0;
  js["period_energy"] = period_energy;
  js["period_claimed_upper"] = period_claimed_upper;
  js["gk_energies"] = gk_energies;
  js["gk_claimed_lower"] = gk_claimed_lower;
  js["edge_leakage"] = edge_leakage;
  js["final_lhs"] = final_lhs;
  js["final_rhs"] = final_rhs;
  js["scale_note"] = scale_note;
  return js.dump();
}

std::string Theorem2Report::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "k,gk_energy,gk_claimed_lower,edge_leakage,period_energy,khat\n";
  for (std::size_t k = 0; k < gk_energies.size(); ++k) {
    os << (k + 1) << "," << gk_energies[k] << "," << gk_claimed_lower << "," << edge_leakage
       << "," << period_energy << "," << khat.constant << "\n";
  }
  return os.str();
}

std::string DiskReport::to_json() const {
  nlohmann::json js;
  js["eps"] = eps;
  js["theta_count"] = theta_count;
  js["bounds"] = nlohmann::json::parse(bounds.to_json());
  js["expanded_norm"] = expanded_norm;
  js["residual"] = residual;
  nlohmann::json rows_js = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json rj;
    rj["theta"] = row.theta;
    rj["upper_lune"] = row.upper_lune;
    rj["lower_lune"] = row.lower_lune;
    rj["middle"] = row.middle;
    rj["k_from_upper"] = row.k_from_upper;
    rj["k_from_lower"] = row.k_from_lower;
    rows_js.push_back(rj);
  }
  js["rows"] = rows_js;
  js["fubini_theta_integral"] = fubini_theta_integral;
  js["implied_k_lower"] = implied_k_lower;
  js["threshold"] = threshold;
  return js.dump();
}

std::string DiskReport::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "theta,upper_lune,lower_lune,middle,k_from_upper,k_from_lower\n";
  for (const auto& row : rows) {
    os << row.theta << "," << row.upper_lune << "," << row.lower_lune << "," << row.middle << ","
       << row.k_from_upper << "," << row.k_from_lower << "\n";
  }
  return os.str();
}

}  // namespace rieszlab

#include "rieszlab/expansion.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Cholesky>

#include "json.hpp"

#include "rieszlab/report_io.hpp"
#include "rieszlab/spectral.hpp"

namespace rieszlab {

namespace {
constexpr Eigen::Index kDenseSolveCap = 4096;
}

NormalizedIndicator unit_l2_indicator(const IntervalSet& region) {
  const double meas = region.measure();
  if (!(meas > 0.0)) {
    throw std::invalid_argument("unit_l2_indicator: region must have positive measure");
  }
  return NormalizedIndicator{region, 1.0 / std::sqrt(meas)};
}

CVector moment_vector(const FunctionSpec& f, const ExponentialSystem& system,
                      const IntervalSet& domain, const WeightSpec& w) {
  const Eigen::Index m = Eigen::Index(system.size());
  CVector b(m);
  if (const auto* ind = std::get_if<NormalizedIndicator>(&f)) {
    const IntervalSet support = ind->region.intersect(domain);
    if (!(support.measure() > 0.0)) {
      throw std::invalid_argument("moment_vector: indicator region has zero measure in domain");
    }
    for (Eigen::Index j = 0; j < m; ++j) {
      b[j] = ind->normalization * weighted_ft(support, w, -system[std::size_t(j)]);
    }
    return b;
  }
  if (const auto* ex = std::get_if<SingleExponential>(&f)) {
    for (Eigen::Index j = 0; j < m; ++j) {
      b[j] = weighted_ft(domain, w, ex->lam0 - system[std::size_t(j)]);
    }
    return b;
  }
  throw std::invalid_argument("moment_vector: synthesis moments need the ExpansionEngine");
}

double function_norm_sq(const FunctionSpec& f, const IntervalSet& domain, const WeightSpec& w) {
  if (const auto* ind = std::get_if<NormalizedIndicator>(&f)) {
    const IntervalSet support = ind->region.intersect(domain);
    return ind->normalization * ind->normalization * w.integral(support);
  }
  if (const auto* ex = std::get_if<SingleExponential>(&f)) {
    (void)ex;
    return w.integral(domain);
  }
  throw std::invalid_argument("function_norm_sq: synthesis norm needs the ExpansionEngine");
}

ExpansionEngine::ExpansionEngine(const ExponentialSystem& system, const IntervalSet& domain,
                                 const WeightSpec& w, double ridge)
    : system_(system), domain_(domain), weight_(w), ridge_(ridge) {
  if (ridge < 0.0) throw std::invalid_argument("ExpansionEngine: ridge must be >= 0");
  const Eigen::Index m = Eigen::Index(system.size());
  if (m <= kDenseSolveCap) {
    if (system.progression()) {
      dense_ = ToeplitzGram(system, domain, w).dense();
    } else {
      dense_ = gram_matrix(system, domain, w).entries;
    }
    CMatrix shifted = *dense_;
    if (ridge_ != 0.0) shifted.diagonal().array() += ridge_;
    ldlt_.emplace(shifted);
    if (ldlt_->info() != Eigen::Success || !ldlt_->isPositive()) {
      if (ridge_ == 0.0) {
        throw std::runtime_error(
            "ExpansionEngine: singular Gram; retry with a small ridge "
            "(suggested 1e-12 * trace/dim)");
      }
      throw std::runtime_error("ExpansionEngine: factorization failed even with ridge");
    }
  } else {
    if (!system.progression()) {
      throw std::invalid_argument(
          "ExpansionEngine: sections above dense capacity need an arithmetic progression");
    }
    toeplitz_.emplace(system, domain, w);
  }
}

Eigen::Index ExpansionEngine::dim() const { return Eigen::Index(system_.size()); }

CVector ExpansionEngine::solve(const CVector& b, ToeplitzGram::SolveStats* stats) const {
  if (ldlt_) {
    CVector c = ldlt_->solve(b);
    if (!c.allFinite()) {
      throw std::runtime_error(
          "ExpansionEngine: singular Gram; retry with a small ridge "
          "(suggested 1e-12 * trace/dim)");
    }
    return c;
  }
  ToeplitzGram::SolveStats st;
  CVector c = toeplitz_->solve_cg(b, 1e-10, 20000, ridge_, &st);
  if (stats) *stats = st;
  if (!st.converged) {
    throw std::runtime_error("ExpansionEngine: CG did not converge; consider a ridge");
  }
  return c;
}

double ExpansionEngine::energy(const CVector& coeffs) const {
  if (dense_) {
    return coeffs.dot(dense_->selfadjointView<Eigen::Lower>() * coeffs).real();
  }
  return toeplitz_->quadratic_form(coeffs);
}

std::pair<double, double> ExpansionEngine::gram_extremes() const {
  if (!extremes_) {
    if (dense_) {
      extremes_ = extreme_eigenvalues(*dense_);
      extremes_estimated_ = dense_->rows() > 2048;
    } else {
      extremes_ = lanczos_extremes(
          [this](const CVector& x) { return toeplitz_->matvec(x); }, dim(), 96);
      extremes_estimated_ = true;
    }
  }
  return *extremes_;
}

ExpansionResult ExpansionEngine::expand(const FunctionSpec& f) const {
  ExpansionResult out;
  CVector b;
  if (const auto* syn = std::get_if<SynthesisCoefficients>(&f)) {
    if (syn->coeffs.size() != dim()) {
      throw std::invalid_argument("ExpansionEngine: synthesis coefficient length mismatch");
    }
    b = dense_ ? CVector(dense_->selfadjointView<Eigen::Lower>() * syn->coeffs)
               : toeplitz_->matvec(syn->coeffs);
    out.function_norm_sq = syn->coeffs.dot(b).real();
  } else {
    b = moment_vector(f, system_, domain_, weight_);
    out.function_norm_sq = function_norm_sq(f, domain_, weight_);
  }

  out.coefficients = solve(b, &out.solve_stats);
  out.expanded_energy = energy(out.coefficients);
  out.residual_energy =
      out.function_norm_sq - 2.0 * b.dot(out.coefficients).real() + out.expanded_energy;

  const auto [lo, hi] = gram_extremes();
  out.conditioning = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  out.conditioning_estimated = extremes_estimated_;
  out.domain_fingerprint = fingerprint(domain_.to_json());
  out.system_fingerprint = fingerprint(system_.to_json());
  out.weight_fingerprint = fingerprint(weight_.describe());
  return out;
}

ExpansionResult expand_function(const FunctionSpec& f, const ExponentialSystem& system,
                                const IntervalSet& domain, const WeightSpec& w, double ridge) {
  return ExpansionEngine(system, domain, w, ridge).expand(f);
}

double energy_quadratic_form(const CVector& coeffs, const ExponentialSystem& system,
                             const IntervalSet& domain, const WeightSpec& w) {
  if (coeffs.size() != Eigen::Index(system.size())) {
    throw std::invalid_argument("energy_quadratic_form: coefficient length mismatch");
  }
  if (system.progression() && Eigen::Index(system.size()) > kDenseSolveCap) {
    return ToeplitzGram(system, domain, w).quadratic_form(coeffs);
  }
  const GramMatrix g = gram_matrix(system, domain, w);
  return coeffs.dot(g.entries.selfadjointView<Eigen::Lower>() * coeffs).real();
}

std::string ExpansionResult::to_json() const {
  nlohmann::json js;
  js["residual_energy"] = residual_energy;
  js["expanded_energy"] = expanded_energy;
  js["function_norm_sq"] = function_norm_sq;
  js["conditioning"] = conditioning;
  js["conditioning_estimated"] = conditioning_estimated;
  js["solver_iterations"] = solve_stats.iterations;
  js["domain_fingerprint"] = domain_fingerprint;
  js["system_fingerprint"] = system_fingerprint;
  js["weight_fingerprint"] = weight_fingerprint;
  return js.dump();
}

}  // namespace rieszlab

#pragma once

#include <optional>
#include <variant>

#include "rieszlab/gram.hpp"
#include "rieszlab/quadrature.hpp"

namespace rieszlab {

/// f = normalization * 1_region. unit_l2_indicator builds the L^2-normalized
/// version (normalization = 1/sqrt(measure), so ||f||_{L^2} = 1 unweighted).
struct NormalizedIndicator {
  IntervalSet region;
  double normalization = 1.0;
};
NormalizedIndicator unit_l2_indicator(const IntervalSet& region);

/// f = e(lam0 x).
struct SingleExponential {
  double lam0 = 0.0;
};

/// f = sum_k coeffs_k e(lam_k x) over the system the expansion works with.
struct SynthesisCoefficients {
  CVector coeffs;
};

using FunctionSpec = std::variant<NormalizedIndicator, SingleExponential, SynthesisCoefficients>;

/// Moment vector b_j = int_domain f(x) e(-lam_j x) w(x) dx, in closed form.
/// Indicator regions intersect with the domain; a zero-measure intersection
/// is an input error. Synthesis moments require the Gram and are handled by
/// the ExpansionEngine.
CVector moment_vector(const FunctionSpec& f, const ExponentialSystem& system,
                      const IntervalSet& domain, const WeightSpec& w = WeightSpec::unit());

/// ||f||^2_{L^2(domain, w)} in closed form (indicator and exponential only).
double function_norm_sq(const FunctionSpec& f, const IntervalSet& domain,
                        const WeightSpec& w = WeightSpec::unit());

struct ExpansionResult {
  CVector coefficients;
  double residual_energy = 0.0;     // ||f - P||^2_{L^2(domain,w)}
  double expanded_energy = 0.0;     // ||P||^2 = c^H G c
  double function_norm_sq = 0.0;    // ||f||^2
  double conditioning = 0.0;        // upper/lower Gram eigenvalue ratio
  bool conditioning_estimated = false;
  ToeplitzGram::SolveStats solve_stats;  // meaningful on the iterative path
  std::string domain_fingerprint;
  std::string system_fingerprint;
  std::string weight_fingerprint;

  std::string to_json() const;  // all fields except the raw coefficient list
};

/// ||sum_k c_k e(lam_k x)||^2_{L^2(domain, w)} evaluated exactly as the
/// Gram quadratic form c^H G c (no sampling).
double energy_quadratic_form(const CVector& coeffs, const ExponentialSystem& system,
                             const IntervalSet& domain,
                             const WeightSpec& w = WeightSpec::unit());

/// Normal-equation solver for one (system, domain, weight) triple; caches the
/// factorization so several functions can be expanded against it. Dense
/// Hermitian factorization up to dimension 4096; beyond that the system must
/// be an arithmetic progression and the Toeplitz CG path is used.
class ExpansionEngine {
 public:
  ExpansionEngine(const ExponentialSystem& system, const IntervalSet& domain,
                  const WeightSpec& w, double ridge);

  ExpansionResult expand(const FunctionSpec& f) const;

  /// Quadratic form c^H G c of the ridge-free Gram.
  double energy(const CVector& coeffs) const;

  double ridge() const { return ridge_; }
  Eigen::Index dim() const;
  std::pair<double, double> gram_extremes() const;  // may be a Lanczos estimate
  bool extremes_estimated() const { return extremes_estimated_; }

 private:
  ExponentialSystem system_;
  IntervalSet domain_;
  WeightSpec weight_;
  double ridge_ = 0.0;

  std::optional<CMatrix> dense_;
  std::optional<Eigen::LDLT<CMatrix>> ldlt_;
  std::optional<ToeplitzGram> toeplitz_;
  mutable std::optional<std::pair<double, double>> extremes_;
  mutable bool extremes_estimated_ = false;

  CVector solve(const CVector& b, ToeplitzGram::SolveStats* stats) const;
};

/// One-shot convenience wrapper around ExpansionEngine.
ExpansionResult expand_function(const FunctionSpec& f, const ExponentialSystem& system,
                                const IntervalSet& domain,
                                const WeightSpec& w = WeightSpec::unit(), double ridge = 0.0);

}  // namespace rieszlab

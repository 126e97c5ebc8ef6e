#pragma once

#include <string>
#include <vector>

#include "rieszlab/expansion.hpp"

namespace rieszlab {

/// Formal translation by -t in coefficient space: d_lam = c_lam e(-lam t).
/// Exactly l^2-norm preserving (the phases are unimodular).
CVector translate_coefficients(const CVector& c, const ExponentialSystem& system, double t);
CVector translate_coefficients(const CVector& c, const ExponentialSystem2D& system,
                               const Vec2& t);

/// Energy chain of the translation test: expand f, translate the
/// coefficients, re-evaluate the synthesized energy on the same weighted
/// domain. f_energy is the energy of the expanded function P (equal to
/// ||f||^2 when the expansion is exact; the residual is carried so
/// truncation loss is visible). implied_K = sqrt(max(r, 1/r)) with
/// r = g_energy / f_energy.
struct TranslationReport {
  double shift = 0.0;
  double coeff_energy = 0.0;     // sum |c|^2 = sum |d|^2
  double f_energy = 0.0;         // c^H G c
  double g_energy = 0.0;         // d^H G d
  double implied_K = 0.0;
  double residual_energy = 0.0;  // ||f - P||^2
  double function_norm_sq = 0.0; // true ||f||^2
  int solver_iterations = 0;     // 0 on the dense path

  std::string to_json() const;
};

TranslationReport translation_diagnostic(const IntervalSet& domain, const WeightSpec& w,
                                         const ExponentialSystem& system, const FunctionSpec& f,
                                         double t, double ridge = 0.0);

/// Same chain evaluated against a prebuilt engine (saves refactorizations
/// when scanning many shifts).
TranslationReport translation_diagnostic(const ExpansionEngine& engine, const FunctionSpec& f,
                                         const ExponentialSystem& system, double t);

/// One row of the weighted blow-up scan.
struct WeightedScanRow {
  double eps = 0.0;
  double shift = 0.0;
  TranslationReport report;
};

struct WeightedScanResult {
  std::string weight;
  double truncation = 0.0;
  std::vector<WeightedScanRow> rows;

  std::string to_json() const;
  std::string to_csv() const;
};

/// Runs the translation diagnostic on ([0,1], w) with Lambda = Z cap [-F, F],
/// f = the L^2-normalized indicator of A(eps) = [0, eps] and shift
/// t(eps) = 1 - 2 eps, for each eps in the (strictly decreasing) grid.
/// Supported weights: unit, piecewise-constant, and integer-power x^alpha;
/// others are an input error (no closed-form Gram entries).
WeightedScanResult weighted_scan(const WeightSpec& w, const std::vector<double>& eps_grid,
                                 double truncation_F);

}  // namespace rieszlab

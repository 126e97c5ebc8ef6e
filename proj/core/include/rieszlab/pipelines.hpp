#pragma once

#include <string>
#include <vector>

#include "rieszlab/pigeonhole.hpp"
#include "rieszlab/riesz.hpp"
#include "rieszlab/split_family.hpp"
#include "rieszlab/translation.hpp"

namespace rieszlab {

/// Positive root of K^4 - K^2 - 1 = 0, i.e. sqrt((1 + sqrt 5)/2).
double golden_threshold();

// ---------------------------------------------------------------------------
// Nested-split-family inequality chain (CLI subcommand `theorem2`)
// ---------------------------------------------------------------------------

struct Theorem2Params {
  int stages = 2;                  // n
  std::vector<int> split_counts;   // empty -> default_split_counts(stages)
  int ell = 4;                     // Lambda = (1/ell) Z cap [-F, F]
  double truncation = 256.0;       // F
  double residual_gate = 0.1;      // expansion-quality gate
  int grid_per_interval = 64;      // pigeonhole sampling density over A
};

struct Theorem2Report {
  // configuration echo
  int stages = 1;
  std::vector<int> split_counts;
  int ell = 4;
  double truncation = 0.0;
  double ridge = 0.0;

  // geometry of stage n
  double eps = 0.0;                // kept length at stage n
  double set_measure = 0.0;
  int usable_count = 0;            // N_n
  int long_interval_count = 0;     // e
  double edge_region_measure = 0.0;  // |A| = e (n+1) eps when windows stay disjoint
  bool edge_region_merged = false;

  // finite-section constant standing in for the hypothetical K
  RieszBounds khat;

  // expansion quality, one entry per usable interval
  std::vector<double> residuals;
  std::vector<double> coeff_energies;
  std::string outcome;             // "ok" | "truncation_insufficient" | "degenerate"

  // selection and chain values (meaningful for stages >= 2)
  double m_bound = 0.0;            // M = 2 Khat / sqrt(eps)
  PigeonholeResult selection;
  double ah_sum = 0.0;             // sum |c_lam hhat(lam)|^2 for i0
  double ah_claimed_lower = 0.0;   // 1 / (2 Khat)
  double coeff_energy_i0 = 0.0;    // sum |c_lam|^2 for i0
  double period_energy = 0.0;      // ell * ah_sum (Plancherel on [0, ell])
  double period_claimed_upper = 0.0;  // Khat^2
  std::vector<double> gk_energies;    // int_S |G_k|^2, k = 1..n-1
  double gk_claimed_lower = 0.0;      // ah_sum / Khat
  double edge_leakage = 0.0;          // int_A |g_{i0}|^2, exact quadratic form
  double final_lhs = 0.0;             // (n-1) (gk_claimed_lower - edge_leakage)
  double final_rhs = 0.0;             // Khat^2
  std::string scale_note;

  std::string to_json() const;
  std::string to_csv() const;  // one row per translation index k
};

Theorem2Report theorem2_run(const Theorem2Params& params);

// ---------------------------------------------------------------------------
// Disk lune-energy experiment (CLI subcommand `disk`)
// ---------------------------------------------------------------------------

struct DiskRunParams {
  double eps = 0.1;        // radius of the expanded indicator's disk
  int theta_count = 64;
  int radial_nodes = 256;
  int angular_nodes = 512;
  double ridge = 0.0;
};

struct DiskThetaRow {
  double theta = 0.0;
  double upper_lune = 0.0;   // int_{(D - t_theta) \ D} |P|^2
  double lower_lune = 0.0;   // int_{(D - s_theta) \ D} |P|^2
  double middle = 0.0;       // int_{(D - s_theta) \ (D - t_theta)} |P|^2
  double k_from_upper = 0.0; // sqrt(1 + upper_lune)
  double k_from_lower = 0.0; // 1 / sqrt(lower_lune)
};

struct DiskReport {
  double eps = 0.0;
  int theta_count = 0;
  RieszBounds bounds;          // finite-section bounds of (Lambda, D)
  double expanded_norm = 0.0;  // ||P||^2; approaches ||f||^2 = 1 with truncation
  double residual = 0.0;
  std::vector<DiskThetaRow> rows;
  double fubini_theta_integral = 0.0;  // integral over theta of the middle term
  double implied_k_lower = 0.0;        // best lower bound across theta
  double threshold = 0.0;              // golden_threshold()

  std::string to_json() const;
  std::string to_csv() const;  // one row per theta
};

DiskReport disk_run(const ExponentialSystem2D& system, const DiskRunParams& params);

/// |P(x)|-style synthesized evaluation over 2-D points, with a separated
/// phase fast path on full integer boxes.
class SynthesisEvaluator2D {
 public:
  SynthesisEvaluator2D(const ExponentialSystem2D& system, CVector coeffs);
  Complex operator()(const Vec2& x) const;
  double abs2(const Vec2& x) const;

 private:
  std::vector<Vec2> freqs_;
  CVector coeffs_;
  bool boxed_ = false;
  int lo_x_ = 0, lo_y_ = 0;
  CMatrix box_coeffs_;  // (x-extent) x (y-extent)
};

}  // namespace rieszlab

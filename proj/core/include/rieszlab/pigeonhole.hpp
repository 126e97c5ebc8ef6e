#pragma once

#include <string>
#include <vector>

#include "rieszlab/system.hpp"

namespace rieszlab {

/// Both sides of the sector lemma: values confined to a sector of opening
/// 120 degrees satisfy |sum| >= (1/2) sum of moduli. Zero values carry no
/// argument and are ignored by the sector check. Throws if the nonzero
/// values do not fit in any 120-degree sector.
struct SectorSumResult {
  double modulus_of_sum = 0.0;
  double sum_of_moduli = 0.0;
};
SectorSumResult sector_sum_lowerbound(const std::vector<Complex>& values);

/// Result of the three-sector selection over N sampled functions on a
/// common grid covering the region A.
struct PigeonholeResult {
  int index = -1;           // i0, 0-based row of the sample matrix
  double energy = 0.0;      // grid estimate of int_A |g_{i0}|^2
  double bound = 0.0;       // 6 M^2 |A| / sqrt(N)
  int sector = 0;           // chosen j in {1, 2, 3}
  double witness_point = 0.0;  // x0
  int sector_size = 0;      // |U_j|
  bool hypothesis_ok = true;   // grid check of |sum_{i in U} g_i(x)| <= M sqrt(|U|)
  double hypothesis_margin = 0.0;  // max over grid of |sum| - M sqrt(|U|)

  std::string to_json() const;
};

/// Proof-as-algorithm selection: find the grid point x0 maximizing
/// sum_i |g_i(x0)|^2, split indices into three half-open 120-degree sectors
/// by arg g_i(x0), take the heaviest sector by sum of moduli, and return
/// the member with minimal grid energy together with the claimed bound.
/// The subset-sum hypothesis is verified on the grid for the returned
/// sector set and any violation is flagged (not thrown).
///
/// `samples` holds g_i(x) with one row per function i and one column per
/// grid point; grid points are assumed equally weighted over A, so the grid
/// energy of row i is a_measure * mean |g_i|^2.
PigeonholeResult sector_pigeonhole_select(const CMatrix& samples, const std::vector<double>& grid,
                                          double a_measure, double m_bound);

}  // namespace rieszlab

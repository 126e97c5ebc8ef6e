#pragma once

#include <string>
#include <vector>

#include "rieszlab/intervals.hpp"

namespace rieszlab {

/// Metadata for one refinement stage of the nested split family.
/// Stage 1 is the seed set [0,1] u [2,3]; at stage k >= 2 the previous
/// continuation interval is cut into split_count + 1 equal pieces and the
/// left 1/k of each piece is kept. Kept pieces then have equal length eps
/// and consecutive gap (k-1)*eps; the first split_count of them are the
/// usable intervals, the last one is the next continuation.
struct SplitStage {
  int index = 1;                       // k
  int split_count = 0;                 // pieces minus one; 0 at stage 1
  double eps = 0.0;                    // kept length at this stage
  std::vector<Interval> usable;        // I_1..I_{split_count}
  Interval continuation{};             // carried into stage k+1
  IntervalSet set;                     // S_k
};

/// The whole family S_1 ⊇ S_2 ⊇ ... ⊇ S_n with per-stage metadata.
struct NestedSplitFamily {
  std::vector<SplitStage> stages;

  const SplitStage& stage(int k) const { return stages.at(std::size_t(k) - 1); }
  const IntervalSet& set(int k) const { return stage(k).set; }
  int depth() const { return int(stages.size()); }

  std::string to_json() const;
};

/// Builds the family down to stage `stages`. `split_counts` holds the
/// stage-k piece counts minus one, for k = 2..stages (so stages-1 entries).
/// Throws std::invalid_argument for stages < 1 or nonpositive counts.
NestedSplitFamily make_split_family(int stages, const std::vector<int>& split_counts);

/// Default split counts N_k = 3^k for k = 2..stages. The construction this
/// family models calls for doubly-exponential counts, which are far beyond
/// desk scale; the parametric default keeps the geometry identical.
std::vector<int> default_split_counts(int stages);

/// Union of windows [a_i - n*eps, a_i + eps] over the left endpoints a_i of
/// all intervals of `set` with length strictly greater than eps. Windows are
/// merged if they overlap; `merged` reports whether that happened (in which
/// case the measure is less than count*(n+1)*eps).
struct LeftEdgeRegion {
  IntervalSet region;
  int long_interval_count = 0;  // e
  bool merged = false;
};

LeftEdgeRegion left_edge_region(const IntervalSet& set, int n, double eps);

/// Stage-checked overload: eps must equal the stage-n kept length.
LeftEdgeRegion left_edge_region(const NestedSplitFamily& family, int n, double eps);

}  // namespace rieszlab

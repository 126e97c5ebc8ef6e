#include "rieszlab/split_family.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace rieszlab {

NestedSplitFamily make_split_family(int stages, const std::vector<int>& split_counts) {
  if (stages < 1) throw std::invalid_argument("make_split_family: stages must be >= 1");
  if (split_counts.size() != std::size_t(stages - 1)) {
    throw std::invalid_argument("make_split_family: need stages-1 split counts");
  }
  for (int n : split_counts) {
    if (n < 1) throw std::invalid_argument("make_split_family: split counts must be positive");
  }

  NestedSplitFamily family;
  SplitStage seed;
  seed.index = 1;
  seed.split_count = 0;
  seed.eps = 1.0;  // length of the stage-1 continuation [2,3]
  seed.continuation = {2.0, 3.0};
  seed.set = IntervalSet::normalized({{0.0, 1.0}, {2.0, 3.0}});
  family.stages.push_back(seed);

  for (int k = 2; k <= stages; ++k) {
    const SplitStage& prev = family.stages.back();
    const int count = split_counts[std::size_t(k) - 2];
    const Interval base = prev.continuation;
    const double piece = base.length() / double(count + 1);
    const double keep = piece / double(k);

    SplitStage st;
    st.index = k;
    st.split_count = count;
    st.eps = keep;
    std::vector<Interval> kept;
    kept.reserve(std::size_t(count) + 1);
    for (int j = 0; j <= count; ++j) {
      const double lo = base.lo + j * piece;
      kept.push_back({lo, lo + keep});
    }
    st.usable.assign(kept.begin(), kept.end() - 1);
    st.continuation = kept.back();

    // S_k = (S_{k-1} minus its last interval) plus the kept pieces.
    std::vector<std::pair<double, double>> raw;
    const auto& prev_parts = prev.set.parts();
    for (std::size_t i = 0; i + 1 < prev_parts.size(); ++i) {
      raw.emplace_back(prev_parts[i].lo, prev_parts[i].hi);
    }
    for (const Interval& iv : kept) raw.emplace_back(iv.lo, iv.hi);
    st.set = IntervalSet::normalized(raw);
    family.stages.push_back(std::move(st));
  }
  return family;
}

std::vector<int> default_split_counts(int stages) {
  std::vector<int> counts;
  int pw = 9;  // 3^2
  for (int k = 2; k <= stages; ++k) {
    counts.push_back(pw);
    pw *= 3;
  }
  return counts;
}

LeftEdgeRegion left_edge_region(const IntervalSet& set, int n, double eps) {
  if (n < 1 || !(eps > 0.0)) {
    throw std::invalid_argument("left_edge_region: need n >= 1 and eps > 0");
  }
  std::vector<std::pair<double, double>> raw;
  int count = 0;
  for (const Interval& iv : set.parts()) {
    if (iv.length() > eps) {
      raw.emplace_back(iv.lo - n * eps, iv.lo + eps);
      ++count;
    }
  }
  LeftEdgeRegion out;
  out.region = IntervalSet::normalized(raw);
  out.long_interval_count = count;
  const double nominal = double(count) * double(n + 1) * eps;
  out.merged = out.region.measure() < nominal - kMergeTol * double(1 + count);
  return out;
}

LeftEdgeRegion left_edge_region(const NestedSplitFamily& family, int n, double eps) {
  if (n < 1 || n > family.depth()) {
    throw std::invalid_argument("left_edge_region: stage out of range");
  }
  const double stage_eps = family.stage(n).eps;
  if (std::abs(eps - stage_eps) > 1e-9 * stage_eps) {
    throw std::invalid_argument("left_edge_region: eps does not match stage kept length");
  }
  return left_edge_region(family.set(n), n, eps);
}

std::string NestedSplitFamily::to_json() const {
  nlohmann::json js;
  js["stages"] = nlohmann::json::array();
  for (const SplitStage& st : stages) {
    nlohmann::json sj;
    sj["index"] = st.index;
    sj["split_count"] = st.split_count;
    sj["eps"] = st.eps;
    sj["continuation"] = {st.continuation.lo, st.continuation.hi};
    nlohmann::json usable = nlohmann::json::array();
    for (const Interval& iv : st.usable) usable.push_back({iv.lo, iv.hi});
    sj["usable"] = usable;
    sj["set"] = nlohmann::json::parse(st.set.to_json());
    sj["measure"] = st.set.measure();
    js["stages"].push_back(sj);
  }
  return js.dump();
}

}  // namespace rieszlab

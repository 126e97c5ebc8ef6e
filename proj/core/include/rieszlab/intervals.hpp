#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rieszlab {

/// Closed interval [lo, hi] with lo < hi. Zero-length sets are represented
/// by absence from an IntervalSet, never by lo == hi.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
};

/// Absolute tolerance below which endpoints are merged during normalization.
inline constexpr double kMergeTol = 1e-12;

/// Finite disjoint union of closed intervals, sorted by left endpoint.
/// Immutable after construction; all operations return new sets.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Builds a normalized set from raw (lo, hi) pairs: sorts, drops
  /// zero-length inputs, merges overlaps and gaps below kMergeTol.
  /// Throws std::invalid_argument on non-finite endpoints or lo > hi.
  static IntervalSet normalized(const std::vector<std::pair<double, double>>& raw);

  /// Wraps intervals already known to be sorted and disjoint (checked).
  static IntervalSet from_sorted(std::vector<Interval> parts);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }

  double measure() const;
  /// hi of last interval minus lo of first; 0 for the empty set.
  double diameter() const;
  double min_coordinate() const;
  double max_coordinate() const;
  bool contains(double x) const;

  IntervalSet translated(double t) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet subtract(const IntervalSet& other) const;

  /// True if every point of this set lies in `other` (up to kMergeTol).
  bool subset_of(const IntervalSet& other) const;

  /// CSV with one "lo,hi" row per interval (header included).
  std::string to_csv() const;
  /// JSON array of [lo, hi] pairs.
  std::string to_json() const;
  static IntervalSet from_csv(const std::string& text);
  static IntervalSet from_json(const std::string& text);

 private:
  std::vector<Interval> parts_;
};

enum class SetOp { kIntersect, kSubtract, kUnion };

/// Dispatch wrapper over the three boolean operations.
IntervalSet set_boolean(const IntervalSet& a, const IntervalSet& b, SetOp op);

}  // namespace rieszlab

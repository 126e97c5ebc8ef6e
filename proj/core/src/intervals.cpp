#include "rieszlab/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rieszlab {

IntervalSet IntervalSet::normalized(const std::vector<std::pair<double, double>>& raw) {
  std::vector<Interval> work;
  work.reserve(raw.size());
  for (const auto& [lo, hi] : raw) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
      throw std::invalid_argument("IntervalSet: non-finite endpoint");
    }
    if (lo > hi) {
      throw std::invalid_argument("IntervalSet: lo > hi");
    }
    if (hi - lo <= kMergeTol) continue;  // zero-length input dropped
    work.push_back({lo, hi});
  }
  std::sort(work.begin(), work.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

  std::vector<Interval> merged;
  for (const Interval& iv : work) {
    if (!merged.empty() && iv.lo <= merged.back().hi + kMergeTol) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  IntervalSet out;
  out.parts_ = std::move(merged);
  return out;
}

IntervalSet IntervalSet::from_sorted(std::vector<Interval> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!(parts[i].lo < parts[i].hi)) {
      throw std::invalid_argument("IntervalSet: empty or inverted interval");
    }
    if (i > 0 && parts[i].lo <= parts[i - 1].hi) {
      throw std::invalid_argument("IntervalSet: intervals not disjoint/sorted");
    }
  }
  IntervalSet out;
  out.parts_ = std::move(parts);
  return out;
}

double IntervalSet::measure() const {
  double sum = 0.0;
  for (const Interval& iv : parts_) sum += iv.length();
  return sum;
}

double IntervalSet::diameter() const {
  if (parts_.empty()) return 0.0;
  return parts_.back().hi - parts_.front().lo;
}

double IntervalSet::min_coordinate() const {
  return parts_.empty() ? 0.0 : parts_.front().lo;
}

double IntervalSet::max_coordinate() const {
  return parts_.empty() ? 0.0 : parts_.back().hi;
}

bool IntervalSet::contains(double x) const {
  for (const Interval& iv : parts_) {
    if (x < iv.lo) return false;
    if (x <= iv.hi) return true;
  }
  return false;
}

IntervalSet IntervalSet::translated(double t) const {
  std::vector<Interval> parts = parts_;
  for (Interval& iv : parts) {
    iv.lo += t;
    iv.hi += t;
  }
  IntervalSet out;
  out.parts_ = std::move(parts);
  return out;
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const Interval& a = parts_[i];
    const Interval& b = other.parts_[j];
    const double lo = std::max(a.lo, b.lo);
    const double hi = std::min(a.hi, b.hi);
    if (hi - lo > kMergeTol) out.push_back({lo, hi});
    if (a.hi < b.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  IntervalSet r;
  r.parts_ = std::move(out);
  return r;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<std::pair<double, double>> raw;
  raw.reserve(parts_.size() + other.parts_.size());
  for (const Interval& iv : parts_) raw.emplace_back(iv.lo, iv.hi);
  for (const Interval& iv : other.parts_) raw.emplace_back(iv.lo, iv.hi);
  return normalized(raw);
}

IntervalSet IntervalSet::subtract(const IntervalSet& other) const {
  std::vector<Interval> out;
  for (const Interval& a : parts_) {
    double cursor = a.lo;
    for (const Interval& b : other.parts_) {
      if (b.hi <= cursor) continue;
      if (b.lo >= a.hi) break;
      if (b.lo > cursor + kMergeTol) out.push_back({cursor, std::min(b.lo, a.hi)});
      cursor = std::max(cursor, b.hi);
      if (cursor >= a.hi) break;
    }
    if (a.hi - cursor > kMergeTol) out.push_back({cursor, a.hi});
  }
  IntervalSet r;
  r.parts_ = std::move(out);
  return r;
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  return subtract(other).measure() <= kMergeTol * double(1 + parts_.size());
}

IntervalSet set_boolean(const IntervalSet& a, const IntervalSet& b, SetOp op) {
  switch (op) {
    case SetOp::kIntersect: return a.intersect(b);
    case SetOp::kSubtract: return a.subtract(b);
    case SetOp::kUnion: return a.unite(b);
  }
  throw std::invalid_argument("set_boolean: unknown op");
}

std::string IntervalSet::to_csv() const {
  std::ostringstream os;
  os << "lo,hi\n";
  os.precision(17);
  for (const Interval& iv : parts_) os << iv.lo << "," << iv.hi << "\n";
  return os.str();
}

std::string IntervalSet::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Interval& iv : parts_) arr.push_back({iv.lo, iv.hi});
  return arr.dump();
}

IntervalSet IntervalSet::from_csv(const std::string& text) {
  std::vector<std::pair<double, double>> raw;
  std::istringstream is(text);
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (first && line.rfind("lo", 0) == 0) {
      first = false;
      continue;
    }
    first = false;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("IntervalSet CSV: missing comma in '" + line + "'");
    }
    raw.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  return normalized(raw);
}

IntervalSet IntervalSet::from_json(const std::string& text) {
  const auto arr = nlohmann::json::parse(text);
  std::vector<std::pair<double, double>> raw;
  for (const auto& pair : arr) {
    raw.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  return normalized(raw);
}

}  // namespace rieszlab

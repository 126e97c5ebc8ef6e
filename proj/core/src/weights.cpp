#include "rieszlab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rieszlab {

WeightSpec WeightSpec::unit() { return WeightSpec{}; }

WeightSpec WeightSpec::piecewise(std::vector<std::pair<Interval, double>> pieces) {
  for (const auto& [iv, v] : pieces) {
    if (!(iv.lo < iv.hi)) throw std::invalid_argument("WeightSpec: empty piece");
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("WeightSpec: piece values must be finite and >= 0");
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i].first.lo < pieces[i - 1].first.hi - kMergeTol) {
      throw std::invalid_argument("WeightSpec: overlapping pieces");
    }
  }
  WeightSpec w;
  w.kind_ = Kind::kPiecewiseConstant;
  w.pieces_ = std::move(pieces);
  return w;
}

WeightSpec WeightSpec::power(double alpha) {
  if (!(alpha > -1.0)) throw std::invalid_argument("WeightSpec: power weight needs alpha > -1");
  WeightSpec w;
  w.kind_ = Kind::kPower;
  w.alpha_ = alpha;
  return w;
}

double WeightSpec::value(double x) const {
  switch (kind_) {
    case Kind::kUnit:
      return 1.0;
    case Kind::kPower:
      if (x < 0.0 || x > 1.0) return 0.0;
      return std::pow(x, alpha_);
    case Kind::kPiecewiseConstant:
      for (const auto& [iv, v] : pieces_) {
        if (x >= iv.lo && x <= iv.hi) return v;
      }
      return 0.0;
  }
  return 0.0;
}

double WeightSpec::integral(const IntervalSet& domain) const {
  switch (kind_) {
    case Kind::kUnit:
      return domain.measure();
    case Kind::kPower: {
      double sum = 0.0;
      for (const Interval& iv : domain.parts()) {
        const double lo = std::clamp(iv.lo, 0.0, 1.0);
        const double hi = std::clamp(iv.hi, 0.0, 1.0);
        if (hi <= lo) continue;
        sum += (std::pow(hi, alpha_ + 1.0) - std::pow(lo, alpha_ + 1.0)) / (alpha_ + 1.0);
      }
      return sum;
    }
    case Kind::kPiecewiseConstant: {
      double sum = 0.0;
      for (const auto& [piece, v] : pieces_) {
        for (const Interval& iv : domain.parts()) {
          const double lo = std::max(iv.lo, piece.lo);
          const double hi = std::min(iv.hi, piece.hi);
          if (hi > lo) sum += v * (hi - lo);
        }
      }
      return sum;
    }
  }
  return 0.0;
}

double WeightSpec::sup_value() const {
  switch (kind_) {
    case Kind::kUnit:
      return 1.0;
    case Kind::kPower:
      return alpha_ >= 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    case Kind::kPiecewiseConstant: {
      double m = 0.0;
      for (const auto& [iv, v] : pieces_) m = std::max(m, v);
      return m;
    }
  }
  return 1.0;
}

std::string WeightSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::kUnit:
      os << "unit";
      break;
    case Kind::kPower:
      os << "power(alpha=" << alpha_ << ")";
      break;
    case Kind::kPiecewiseConstant:
      os << "piecewise[";
      for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (i) os << ";";
        os << "(" << pieces_[i].first.lo << "," << pieces_[i].first.hi << ")="
           << pieces_[i].second;
      }
      os << "]";
      break;
  }
  return os.str();
}

}  // namespace rieszlab

#include "rieszlab/system.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rieszlab {

namespace {

double min_gap_sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < v.size(); ++i) gap = std::min(gap, v[i] - v[i - 1]);
  return gap;
}

}  // namespace

ExponentialSystem::ExponentialSystem(std::vector<double> freqs) : freqs_(std::move(freqs)) {
  if (freqs_.empty()) throw std::invalid_argument("ExponentialSystem: empty frequency list");
  for (double f : freqs_) {
    if (!std::isfinite(f)) throw std::invalid_argument("ExponentialSystem: non-finite frequency");
  }
  if (freqs_.size() > 1) {
    separation_ = min_gap_sorted(freqs_);
    if (!(separation_ > 0.0)) {
      throw std::invalid_argument("ExponentialSystem: duplicate frequencies");
    }
  } else {
    separation_ = std::numeric_limits<double>::infinity();
  }

  if (freqs_.size() >= 2) {
    const double step = freqs_[1] - freqs_[0];
    const double scale = std::max(1.0, std::abs(freqs_.front()) + std::abs(freqs_.back()));
    bool arithmetic = std::abs(step) > 0.0;
    for (std::size_t j = 0; arithmetic && j < freqs_.size(); ++j) {
      const double expect = freqs_[0] + double(j) * step;
      if (std::abs(freqs_[j] - expect) > 1e-12 * scale) arithmetic = false;
    }
    if (arithmetic) progression_ = ArithmeticProgression{freqs_[0], step};
  }
}

ExponentialSystem ExponentialSystem::lattice(double step, long lo_index, long hi_index) {
  if (!(step > 0.0) || hi_index < lo_index) {
    throw std::invalid_argument("ExponentialSystem::lattice: bad parameters");
  }
  std::vector<double> f;
  f.reserve(std::size_t(hi_index - lo_index + 1));
  for (long k = lo_index; k <= hi_index; ++k) f.push_back(step * double(k));
  return ExponentialSystem(std::move(f));
}

ExponentialSystem ExponentialSystem::lattice_in_band(int ell, double cap) {
  if (ell < 1 || !(cap > 0.0)) {
    throw std::invalid_argument("ExponentialSystem::lattice_in_band: bad parameters");
  }
  const long hi = long(std::floor(cap * double(ell) + 1e-9));
  return lattice(1.0 / double(ell), -hi, hi);
}

std::string ExponentialSystem::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (double f : freqs_) arr.push_back(f);
  return arr.dump();
}

ExponentialSystem ExponentialSystem::parse(const std::string& text) {
  std::vector<double> f;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    for (const auto& v : nlohmann::json::parse(text)) f.push_back(v.get<double>());
  } else {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      f.push_back(std::stod(line));
    }
  }
  return ExponentialSystem(std::move(f));
}

ExponentialSystem2D::ExponentialSystem2D(std::vector<Vec2> freqs) : freqs_(std::move(freqs)) {
  if (freqs_.empty()) throw std::invalid_argument("ExponentialSystem2D: empty frequency list");
  separation_ = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < freqs_.size(); ++i) {
    if (!std::isfinite(freqs_[i][0]) || !std::isfinite(freqs_[i][1])) {
      throw std::invalid_argument("ExponentialSystem2D: non-finite frequency");
    }
    for (std::size_t j = i + 1; j < freqs_.size(); ++j) {
      const double dx = freqs_[i][0] - freqs_[j][0];
      const double dy = freqs_[i][1] - freqs_[j][1];
      separation_ = std::min(separation_, std::hypot(dx, dy));
    }
  }
  if (freqs_.size() > 1 && !(separation_ > 0.0)) {
    throw std::invalid_argument("ExponentialSystem2D: duplicate frequencies");
  }

  // Detect a full integer box enumerated in row-major order.
  bool integral = true;
  for (const Vec2& f : freqs_) {
    if (std::abs(f[0] - std::round(f[0])) > 1e-12 || std::abs(f[1] - std::round(f[1])) > 1e-12) {
      integral = false;
      break;
    }
  }
  if (integral) {
    int lox = INT32_MAX, hix = INT32_MIN, loy = INT32_MAX, hiy = INT32_MIN;
    std::set<std::pair<int, int>> seen;
    for (const Vec2& f : freqs_) {
      const int x = int(std::lround(f[0]));
      const int y = int(std::lround(f[1]));
      lox = std::min(lox, x); hix = std::max(hix, x);
      loy = std::min(loy, y); hiy = std::max(hiy, y);
      seen.insert({x, y});
    }
    const std::size_t full = std::size_t(hix - lox + 1) * std::size_t(hiy - loy + 1);
    if (seen.size() == freqs_.size() && full == freqs_.size()) {
      box_ = IntegerBox{lox, hix, loy, hiy};
    }
  }
}

ExponentialSystem2D ExponentialSystem2D::integer_grid(int n) {
  if (n < 0) throw std::invalid_argument("ExponentialSystem2D::integer_grid: n must be >= 0");
  std::vector<Vec2> f;
  f.reserve(std::size_t(2 * n + 1) * std::size_t(2 * n + 1));
  for (int i = -n; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) f.push_back({double(i), double(j)});
  }
  return ExponentialSystem2D(std::move(f));
}

std::string ExponentialSystem2D::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Vec2& f : freqs_) arr.push_back({f[0], f[1]});
  return arr.dump();
}

ExponentialSystem2D ExponentialSystem2D::parse(const std::string& text) {
  std::vector<Vec2> f;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    for (const auto& v : nlohmann::json::parse(text)) {
      f.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
    }
  } else {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::istringstream ls(line);
      double a, b;
      ls >> a >> b;
      if (ls.fail()) throw std::invalid_argument("ExponentialSystem2D: bad line '" + line + "'");
      f.push_back({a, b});
    }
  }
  return ExponentialSystem2D(std::move(f));
}

}  // namespace rieszlab

#include "rieszlab/riesz.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "rieszlab/spectral.hpp"

namespace rieszlab {

RieszBounds bounds_from_extremes(double lower, double upper, double measure,
                                 std::string truncation, bool estimated) {
  RieszBounds rb;
  rb.lower = lower;
  rb.upper = upper;
  rb.truncation = std::move(truncation);
  rb.domain_measure = measure;
  rb.estimated = estimated;
  rb.singular = !(lower > kSingularFloor);
  const double effective_lower = rb.singular ? kSingularFloor : lower;
  rb.constant = std::max(upper, 1.0 / effective_lower);
  rb.measure_normalized_flag = std::abs(measure - 1.0) > 1e-12;
  if (measure > 0.0) {
    rb.normalized_lower = lower / measure;
    rb.normalized_upper = upper / measure;
  }
  return rb;
}

namespace {

std::string lattice_description(const ExponentialSystem& system) {
  std::ostringstream os;
  os.precision(12);
  os << "1d:" << system.size() << " freqs in [" << system.freqs().front() << ", "
     << system.freqs().back() << "], separation " << system.separation();
  return os.str();
}

}  // namespace

RieszBounds riesz_bounds(const ExponentialSystem& system, const IntervalSet& domain,
                         const WeightSpec& w) {
  const Eigen::Index m = Eigen::Index(system.size());
  double lo = 0.0, hi = 0.0;
  bool estimated = false;
  if (m <= 2048) {
    const GramMatrix g = gram_matrix(system, domain, w);
    std::tie(lo, hi) = extreme_eigenvalues(g);
  } else if (system.progression()) {
    const ToeplitzGram t(system, domain, w);
    std::tie(lo, hi) =
        lanczos_extremes([&t](const CVector& x) { return t.matvec(x); }, m, 400);
    estimated = true;
  } else {
    const GramMatrix g = gram_matrix(system, domain, w);
    std::tie(lo, hi) = extreme_eigenvalues(g.entries);
    estimated = true;
  }
  return bounds_from_extremes(lo, hi, w.integral(domain), lattice_description(system), estimated);
}

RieszBounds riesz_bounds(const ExponentialSystem2D& system, const Disk& domain) {
  const GramMatrix g = gram_matrix(system, domain);
  const auto [lo, hi] = extreme_eigenvalues(g);
  std::ostringstream os;
  os << "2d:" << system.size() << " freqs, separation " << system.separation();
  return bounds_from_extremes(lo, hi, domain.area(), os.str(),
                              Eigen::Index(system.size()) > 2048);
}

RieszBounds kadec_experiment(double delta, int n) {
  if (!(delta >= 0.0) || delta >= 0.5) {
    throw std::invalid_argument("kadec_experiment: need 0 <= delta < 0.5");
  }
  if (n < 1) throw std::invalid_argument("kadec_experiment: need n >= 1");
  std::vector<double> freqs;
  freqs.reserve(std::size_t(2 * n + 1));
  for (int k = -n; k <= n; ++k) {
    const bool even = ((k % 2) + 2) % 2 == 0;
    freqs.push_back(double(k) + (even ? delta : -delta));
  }
  const IntervalSet unit = IntervalSet::normalized({{0.0, 1.0}});
  RieszBounds rb = riesz_bounds(ExponentialSystem(std::move(freqs)), unit);
  std::ostringstream os;
  os.precision(12);
  os << "kadec delta=" << delta << " n=" << n;
  rb.truncation = os.str();
  return rb;
}

std::string RieszBounds::to_json() const {
  nlohmann::json js;
  js["lower"] = lower;
  js["upper"] = upper;
  js["constant"] = constant;
  js["truncation"] = truncation;
  js["domain_measure"] = domain_measure;
  js["measure_normalized_flag"] = measure_normalized_flag;
  js["normalized_lower"] = normalized_lower;
  js["normalized_upper"] = normalized_upper;
  js["singular"] = singular;
  js["estimated"] = estimated;
  return js.dump();
}

}  // namespace rieszlab

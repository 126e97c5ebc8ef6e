#include "rieszlab/transforms.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace rieszlab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Complex unit_phase(double x) {
  const double a = kTwoPi * x;
  return {std::cos(a), std::sin(a)};
}

double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

Complex indicator_ft(const Interval& iv, double t) {
  const double len = iv.length();
  return len * unit_phase(t * iv.midpoint()) * sinc(std::numbers::pi * t * len);
}

Complex indicator_ft(const IntervalSet& set, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("indicator_ft: non-finite frequency");
  // Compensated accumulation; late-stage split families have many intervals.
  Complex sum{0.0, 0.0};
  Complex comp{0.0, 0.0};
  for (const Interval& iv : set.parts()) {
    const Complex term = indicator_ft(iv, t) - comp;
    const Complex next = sum + term;
    comp = (next - sum) - term;
    sum = next;
  }
  return sum;
}

namespace {

/// int_lo^hi x^alpha e(t x) dx for integer alpha >= 0 via the by-parts
/// recurrence I_a = [x^a e(tx)/(2 pi i t)]_lo^hi - a/(2 pi i t) I_{a-1};
/// small |t| uses the termwise series of the binomial-shifted integral.
Complex power_ft_integer(int alpha, double lo, double hi, double t) {
  if (std::abs(t) * (std::abs(lo) + std::abs(hi)) < 1e-3) {
    // series around t = 0: int x^a (sum_k (2pi i t x)^k / k!) dx
    Complex sum{0.0, 0.0};
    Complex pw{1.0, 0.0};
    const Complex a2pi = Complex(0.0, kTwoPi * t);
    double factorial = 1.0;
    for (int k = 0; k < 24; ++k) {
      if (k > 0) {
        pw *= a2pi;
        factorial *= k;
      }
      const int p = alpha + k + 1;
      sum += pw / factorial * (std::pow(hi, p) - std::pow(lo, p)) / double(p);
    }
    return sum;
  }
  const Complex a = Complex(0.0, kTwoPi * t);
  Complex ehi = unit_phase(t * hi);
  Complex elo = unit_phase(t * lo);
  Complex integral = (ehi - elo) / a;  // alpha = 0
  double phi = 1.0, plo = 1.0;
  for (int k = 1; k <= alpha; ++k) {
    phi *= hi;
    plo *= lo;
    integral = (phi * ehi - plo * elo) / a - (double(k) / a) * integral;
  }
  return integral;
}

/// Adaptive Simpson for the non-integer power weight (small sections only).
Complex adaptive_simpson(const std::function<Complex(double)>& f, double a, double b,
                         Complex fa, Complex fm, Complex fb, Complex whole, double tol,
                         int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const Complex flm = f(lm);
  const Complex frm = f(rm);
  const Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const Complex delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

Complex adaptive_ft(const std::function<Complex(double)>& f, double a, double b, double tol) {
  // Split into panels short enough that the oscillation per panel is mild.
  Complex total{0.0, 0.0};
  const int panels = std::max(1, int(std::ceil((b - a) * 8.0)) * 4);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double hi = lo + h;
    const double mid = 0.5 * (lo + hi);
    const Complex flo = f(lo), fmid = f(mid), fhi = f(hi);
    const Complex whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    total += adaptive_simpson(f, lo, hi, flo, fmid, fhi, whole, tol / panels, 40);
  }
  return total;
}

}  // namespace

Complex weighted_ft(const IntervalSet& domain, const WeightSpec& w, double t) {
  switch (w.kind()) {
    case WeightSpec::Kind::kUnit:
      return indicator_ft(domain, t);
    case WeightSpec::Kind::kPiecewiseConstant: {
      Complex sum{0.0, 0.0};
      for (const auto& [piece, v] : w.pieces()) {
        if (v == 0.0) continue;
        for (const Interval& iv : domain.parts()) {
          const double lo = std::max(iv.lo, piece.lo);
          const double hi = std::min(iv.hi, piece.hi);
          if (hi > lo) sum += v * indicator_ft(Interval{lo, hi}, t);
        }
      }
      return sum;
    }
    case WeightSpec::Kind::kPower: {
      const double alpha = w.power_alpha();
      Complex sum{0.0, 0.0};
      const bool integer_alpha =
          alpha >= 0.0 && std::abs(alpha - std::round(alpha)) < 1e-12;
      for (const Interval& iv : domain.parts()) {
        const double lo = std::clamp(iv.lo, 0.0, 1.0);
        const double hi = std::clamp(iv.hi, 0.0, 1.0);
        if (hi <= lo) continue;
        if (integer_alpha) {
          sum += power_ft_integer(int(std::round(alpha)), lo, hi, t);
        } else {
          sum += adaptive_ft(
              [alpha, t](double x) { return std::pow(x, alpha) * unit_phase(t * x); },
              lo, hi, 1e-10);
        }
      }
      return sum;
    }
  }
  throw std::invalid_argument("weighted_ft: unsupported weight kind");
}

double bessel_j1(double x) {
  if (x < 0.0) return -std::cyl_bessel_j(1.0, -x);
  return std::cyl_bessel_j(1.0, x);
}

double bessel_j1_over_x(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double q = 0.25 * x * x;  // (x/2)^2
    return 0.5 * (1.0 - q / 2.0 + q * q / 12.0);
  }
  return bessel_j1(x) / x;
}

double disk_indicator_ft(double r, double q) {
  if (!(r > 0.0) || q < 0.0) {
    throw std::invalid_argument("disk_indicator_ft: need r > 0, q >= 0");
  }
  return kTwoPi * r * r * bessel_j1_over_x(kTwoPi * r * q);
}

double mollifier_ft(double eps, double lam) {
  if (!(eps > 0.0)) throw std::invalid_argument("mollifier_ft: eps must be positive");
  return sinc(std::numbers::pi * lam * eps / 4.0);
}

}  // namespace rieszlab

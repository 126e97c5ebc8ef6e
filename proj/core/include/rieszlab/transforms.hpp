#pragma once

#include <complex>

#include "rieszlab/intervals.hpp"
#include "rieszlab/weights.hpp"

namespace rieszlab {

using Complex = std::complex<double>;

/// e(x) = exp(2 pi i x).
Complex unit_phase(double x);

/// sin(x)/x with a series branch near 0.
double sinc(double x);

/// FT of the indicator of S with the e(+tx) sign convention:
///   indicator_ft(S, t) = sum_i int_{a_i}^{b_i} exp(2 pi i t x) dx.
/// Each interval term is evaluated as L * e(t*mid) * sinc(pi t L), which is
/// exact and cancellation-free for every t including t = 0.
/// Satisfies indicator_ft(S, -t) = conj(indicator_ft(S, t)) and
/// |indicator_ft(S, t)| <= measure(S).
Complex indicator_ft(const IntervalSet& set, double t);
Complex indicator_ft(const Interval& iv, double t);

/// int w(x) e(t x) dx over `domain` in closed form. Supported exactly for
/// unit and piecewise-constant weights, and for power weights with integer
/// alpha >= 0 (by-parts recurrence; domain must lie in [0,1]). Non-integer
/// power weights fall back to adaptive Simpson with a 1e-10 target.
Complex weighted_ft(const IntervalSet& domain, const WeightSpec& w, double t);

/// Bessel function of the first kind, order 1, extended to negative
/// arguments by oddness. Backed by std::cyl_bessel_j.
double bessel_j1(double x);

/// J1(x)/x, continuous at 0 with value 1/2.
double bessel_j1_over_x(double x);

/// FT of the indicator of a radius-r disk centered at the origin, evaluated
/// at a frequency of norm q: r J1(2 pi r q)/q for q > 0 and pi r^2 at q = 0.
/// Real by radial symmetry; |value| <= pi r^2.
double disk_indicator_ft(double r, double q);

/// FT of the unit-mass mollifier (4/eps) 1_[-eps/8, eps/8]:
///   mollifier_ft(eps, lam) = sinc(pi lam eps / 4).
/// Even in lam, equal to 1 at lam = 0, and bounded by 1 in modulus.
double mollifier_ft(double eps, double lam);

}  // namespace rieszlab

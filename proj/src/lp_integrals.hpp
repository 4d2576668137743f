#pragma once

// Integrals of powers of a linear function over one piece. Used by the
// distance code and by the block minimization of the ladder module.

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace wass1d::detail {

inline constexpr double kQuadratureTolerance = 1e-12;
inline constexpr double kAntiderivativeRatio = 0.25;

// Signed power: sgn(x)|x|^e.
inline double spow(double x, double e) { return std::copysign(std::pow(std::abs(x), e), x); }

// int_0^len |d0 + d1 t|^p dt where the linear function has no sign change
// inside the interval.
inline double abs_power_one_sign(double d0, double d1, double len, double p) {
  const double d_end = d0 + d1 * len;
  if (d1 == 0.0) return len * std::pow(std::abs(d0), p);
  // The antiderivative loses accuracy only when the end values nearly
  // cancel; the integrand is then close to constant and quadrature converges
  // at once.
  const double spread = std::abs(d_end - d0);
  if (spread >= kAntiderivativeRatio * std::max(std::abs(d0), std::abs(d_end))) {
    return len * std::abs(std::pow(std::abs(d_end), p + 1.0) - std::pow(std::abs(d0), p + 1.0)) /
           ((p + 1.0) * std::abs(d_end - d0));
  }
  // Integrated over [0,1] and rescaled: the adaptive driver compares an
  // unscaled error estimate with a scaled tolerance, so short intervals
  // would otherwise always recurse to full depth.
  const double step = d1 * len;
  auto f = [&](double u) { return std::pow(std::abs(d0 + step * u), p); };
  return len * boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
                   f, 0.0, 1.0, 15, kQuadratureTolerance);
}

// int_0^len |d0 + d1 t|^p dt.
inline double abs_power_integral(double d0, double d1, double len, double p) {
  if (!(len > 0.0)) return 0.0;
  const double d_end = d0 + d1 * len;
  if (p == 1.0) {
    if ((d0 >= 0.0 && d_end >= 0.0) || (d0 <= 0.0 && d_end <= 0.0))
      return 0.5 * len * std::abs(d0 + d_end);
    const double t = d0 / (d0 - d_end) * len;
    return 0.5 * (t * std::abs(d0) + (len - t) * std::abs(d_end));
  }
  if (p == 2.0) return len * (d0 * d0 + d0 * d_end + d_end * d_end) / 3.0;
  if ((d0 > 0.0 && d_end < 0.0) || (d0 < 0.0 && d_end > 0.0)) {
    const double t = d0 / (d0 - d_end) * len;
    return abs_power_one_sign(d0, d1, t, p) + abs_power_one_sign(0.0, d1, len - t, p);
  }
  return abs_power_one_sign(d0, d1, len, p);
}

// int_0^len sgn(l)|l|^e dt for l(t) = d0 + d1 t and exponent e >= 0.
inline double signed_power_integral(double d0, double d1, double len, double e) {
  if (!(len > 0.0)) return 0.0;
  const double d_end = d0 + d1 * len;
  if (d1 == 0.0) return len * spow(d0, e);
  if ((d0 > 0.0 && d_end < 0.0) || (d0 < 0.0 && d_end > 0.0)) {
    // Antiderivative |l|^{e+1} / ((e+1) d1), exact when split at the root.
    return (std::pow(std::abs(d_end), e + 1.0) - std::pow(std::abs(d0), e + 1.0)) /
           ((e + 1.0) * d1);
  }
  const double sign = (d0 + d_end >= 0.0) ? 1.0 : -1.0;
  return sign * abs_power_one_sign(d0, d1, len, e);
}

}  // namespace wass1d::detail

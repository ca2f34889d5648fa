#pragma once

// Sine and cosine integrals with certified absolute error bounds.
//
//   Si(x) = int_0^x sin(u)/u du                       (odd, Si(inf) = pi/2)
//   Ci(x) = gamma + ln(x) + int_0^x (cos(u) - 1)/u du (x > 0)
//
// Evaluation uses two regimes joined at x = 4:
//
//   x <= 4   Maclaurin series. The series alternate with strictly
//            decreasing terms on this interval, so the first omitted term
//            bounds the truncation error; rounding is bounded by the sum
//            of absolute terms.
//
//   x > 4    Auxiliary functions f, g with
//                Si(x) = pi/2 - f(x) cos(x) - g(x) sin(x)
//                Ci(x) =        f(x) sin(x) - g(x) cos(x)
//            evaluated from the continued fraction of the exponential
//            integral at imaginary argument,
//                g(x) + i f(x) = 1/(z+1- 1/(z+3- 4/(z+5- 9/(z+7- ...))))
//            at z = -ix (modified Lentz recurrence).
//
// The switch point 4 keeps both branches at or below a few 1e-15 absolute
// error: the series loses digits to cancellation as x grows (its largest
// term grows like e^x/x) while the continued fraction converges more
// slowly as x decreases, and near x = 4 both are comfortably converged.
//
// Every result carries abs_err_bound, a conservative analytic bound
// (truncation tail plus rounding model), guaranteed <= 1e-13 on the
// supported argument range [1e-300, 1e8]. Downstream quadrature treats
// these bounds as hard guarantees, so they must never be optimistic.

#include <cmath>
#include <complex>
#include <limits>

#include "dcp/errors.hpp"

namespace dcp {

struct SpecFunValue {
  double value;
  double abs_err_bound;
};

// Value together with first and second derivatives in the argument.
struct SpecFunJet {
  double value;
  double d1;
  double d2;
};

namespace detail {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kPiOver2 = 1.57079632679489661923132169163975144;
inline constexpr double kEps = 2.220446049250313e-16;  // 2^-52
inline constexpr double kSpecFunSwitch = 4.0;

// fdlibm split of ln(2); e * kLn2Hi is exact for exponents |e| <= 2^20
// because kLn2Hi carries only 33 mantissa bits.
inline constexpr double kLn2Hi = 6.93147180369123816490e-01;
inline constexpr double kLn2Lo = 1.90821492927058770002e-10;

inline double half_ulp(double v) {
  double av = std::fabs(v);
  return 0.5 * (std::nextafter(av, std::numeric_limits<double>::infinity()) - av);
}

// Si(x) for 0 <= x <= 4 by Maclaurin series:
//   Si(x) = sum_{n>=0} (-1)^n x^(2n+1) / ((2n+1)(2n+1)!)
inline SpecFunValue si_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  double sum_abs = std::fabs(x);
  for (int n = 0; n < 40; ++n) {
    // t_{n+1}/t_n = -x^2 (2n+1) / ((2n+2)(2n+3)^2), |ratio| < 1 for x <= 4
    term *= -x2 * (2.0 * n + 1.0) /
            ((2.0 * n + 2.0) * (2.0 * n + 3.0) * (2.0 * n + 3.0));
    sum += term;
    sum_abs += std::fabs(term);
    if (std::fabs(term) < 1e-18) break;
  }
  double err = std::fabs(term) + 2.0 * kEps * sum_abs + half_ulp(sum);
  return {sum, err};
}

// Ci(x) for 0 < x <= 4:
//   Ci(x) = gamma + ln(x) + S(x),  S(x) = sum_{n>=1} (-1)^n x^(2n)/((2n)(2n)!)
// gamma + ln(x) is assembled with an exact two-sum so that the only
// magnitude-level rounding is the single final one; this keeps the bound
// under 1e-13 even at x = 1e-300 where |ln x| is ~690.
inline SpecFunValue ci_series(double x) {
  const double x2 = x * x;
  double term = -x2 / 4.0;
  double sum = term;
  double sum_abs = std::fabs(term);
  for (int n = 1; n < 40; ++n) {
    // t_{n+1}/t_n = -x^2 (2n) / ((2n+1)(2n+2)^2), |ratio| < 1 for x <= 4
    term *= -x2 * (2.0 * n) /
            ((2.0 * n + 1.0) * (2.0 * n + 2.0) * (2.0 * n + 2.0));
    sum += term;
    sum_abs += std::fabs(term);
    if (std::fabs(term) < 1e-18) break;
  }
  int e = 0;
  double fr = std::frexp(x, &e);  // x = fr * 2^e, fr in [0.5, 1)
  double lf = std::log(fr);       // |lf| <= ln 2
  double hi = static_cast<double>(e) * kLn2Hi;  // exact
  // two-sum of hi and gamma: s + comp == hi + gamma exactly
  double s = hi + kEulerGamma;
  double bv = s - hi;
  double comp = (kEulerGamma - bv) + (hi - (s - bv));
  double tail = comp + (static_cast<double>(e) * kLn2Lo + lf) + sum;
  double value = s + tail;
  double err = std::fabs(term) + 2.0 * kEps * (sum_abs + std::fabs(tail) + 1.0) +
               half_ulp(value) + 2.5e-16;
  return {value, err};
}

struct AuxFG {
  double f;
  double g;
  double err;  // common absolute error bound for f and g
};

// Continued fraction g + i f = 1/(z+1- 1/(z+3- 4/(z+5- ...))) at z = -ix,
// modified Lentz recurrence. Converges for x above ~2; used for x > 4.
inline AuxFG aux_fg(double x) {
  const std::complex<double> z(0.0, -x);
  const double tiny = 1e-290;
  std::complex<double> b = z + 1.0;
  std::complex<double> h = 1.0 / b;
  std::complex<double> c = 1.0 / tiny;
  std::complex<double> d = h;
  double resid = 1.0;
  int it = 1;
  for (; it <= 200; ++it) {
    const double a = -static_cast<double>(it) * static_cast<double>(it);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const std::complex<double> delta = c * d;
    h *= delta;
    resid = std::abs(delta - 1.0);
    if (resid < 1e-15) break;
  }
  if (resid >= 1e-15) {
    throw NoConvergence("auxiliary continued fraction stalled");
  }
  const double mag = std::abs(h);
  // per-iteration rounding growth plus the final residual
  const double err = (6.0 * it + 8.0) * kEps * mag + 2.0 * resid * mag;
  return {h.imag(), h.real(), err};
}

inline SpecFunValue si_large(double x) {
  const AuxFG fg = aux_fg(x);
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double value = kPiOver2 - fg.f * c - fg.g * s;
  const double err = fg.err * (std::fabs(c) + std::fabs(s)) +
                     4.0 * kEps * (kPiOver2 + std::fabs(fg.f) + std::fabs(fg.g)) +
                     half_ulp(value);
  return {value, err};
}

inline SpecFunValue ci_large(double x) {
  const AuxFG fg = aux_fg(x);
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double value = fg.f * s - fg.g * c;
  const double err = fg.err * (std::fabs(c) + std::fabs(s)) +
                     4.0 * kEps * (std::fabs(fg.f) + std::fabs(fg.g)) +
                     half_ulp(value);
  return {value, err};
}

}  // namespace detail

// Sine integral. Odd extension for negative arguments is exact.
inline SpecFunValue si(double x) {
  if (!std::isfinite(x)) throw NonFiniteInput("si: argument is not finite");
  const double ax = std::fabs(x);
  SpecFunValue r =
      ax <= detail::kSpecFunSwitch ? detail::si_series(ax) : detail::si_large(ax);
  if (std::signbit(x)) r.value = -r.value;
  return r;
}

// Cosine integral, positive arguments only. The closed forms in this
// library always fold their arguments positive before calling.
inline SpecFunValue ci(double x) {
  if (!std::isfinite(x)) throw NonFiniteInput("ci: argument is not finite");
  if (x <= 0.0) throw DomainError("ci: argument must be positive");
  return x <= detail::kSpecFunSwitch ? detail::ci_series(x) : detail::ci_large(x);
}

// Si value with first and second derivatives:
//   Si'(x) = sin(x)/x,  Si''(x) = (x cos x - sin x)/x^2
inline SpecFunJet si_jet(double x) {
  const SpecFunValue v = si(x);
  if (x == 0.0) return {v.value, 1.0, 0.0};
  const double s_over_x = std::sin(x) / x;
  return {v.value, s_over_x, (std::cos(x) - s_over_x) / x};
}

// Ci value with first and second derivatives:
//   Ci'(x) = cos(x)/x,  Ci''(x) = (-x sin x - cos x)/x^2
inline SpecFunJet ci_jet(double x) {
  const SpecFunValue v = ci(x);
  const double c_over_x = std::cos(x) / x;
  return {v.value, c_over_x, (-std::sin(x) - c_over_x) / x};
}

}  // namespace dcp

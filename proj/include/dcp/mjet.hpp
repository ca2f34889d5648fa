#pragma once

// Degree-2 jet arithmetic in the auxiliary mass parameter m: a value
// carried together with its first and second m-derivatives. The closed
// forms only ever compose elementary functions of arguments linear in m,
// u = alpha + beta m, so an elementary jet is {h(u), beta h'(u),
// beta^2 h''(u)} and products combine by the Leibniz rule.
//
// All elementary jets are written with sign-symmetric expressions: jets at
// (-u, -beta) are the exact componentwise image of jets at (u, beta).
// The kernel-level degeneracy reductions rely on this being bitwise true.

#include <cmath>

#include "dcp/errors.hpp"
#include "dcp/specfun.hpp"

namespace dcp {

// Value with first and second derivatives in m.
struct MJet {
  double value = 0.0;
  double dm1 = 0.0;
  double dm2 = 0.0;
};

inline MJet operator+(const MJet& a, const MJet& b) {
  return {a.value + b.value, a.dm1 + b.dm1, a.dm2 + b.dm2};
}

inline MJet operator-(const MJet& a, const MJet& b) {
  return {a.value - b.value, a.dm1 - b.dm1, a.dm2 - b.dm2};
}

inline MJet operator*(double c, const MJet& a) {
  return {c * a.value, c * a.dm1, c * a.dm2};
}

// Leibniz product.
inline MJet jmul(const MJet& a, const MJet& b) {
  return {a.value * b.value,
          a.value * b.dm1 + a.dm1 * b.value,
          a.value * b.dm2 + 2.0 * (a.dm1 * b.dm1) + a.dm2 * b.value};
}

// Elementary jets of h(u), u = alpha + beta m, evaluated at u.

inline MJet jet_sin(double u, double beta) {
  const double s = std::sin(u);
  const double c = std::cos(u);
  return {s, beta * c, -(beta * beta) * s};
}

inline MJet jet_cos(double u, double beta) {
  const double s = std::sin(u);
  const double c = std::cos(u);
  return {c, -beta * s, -(beta * beta) * c};
}

inline MJet jet_si(double u, double beta) {
  const double v = si(u).value;
  if (u == 0.0) return {v, beta, 0.0};
  const double r = std::sin(u) / u;
  const double d2 = (std::cos(u) - r) / u;
  return {v, beta * r, beta * beta * d2};
}

// Ci(|u|) with derivatives taken along the signed argument: the ratios
// cos(u)/u and (-sin(u) - cos(u)/u)/u are the correct first and second
// derivatives of Ci(|u|) for either sign of u.
inline MJet jet_ci_abs(double u, double beta) {
  const double v = ci(std::fabs(u)).value;
  const double d1 = std::cos(u) / u;
  const double d2 = (-std::sin(u) - d1) / u;
  return {v, beta * d1, beta * beta * d2};
}

}  // namespace dcp

#pragma once

// Closed-form wall-interaction kernels with first and second m-derivatives.
//
//   i1(m, x0) = Ci(u) sin(u) + cos(u) (pi - 2 Si(u)) / 2,   u = m x0
//
//   i3(m, a, xd, xp) = [ -2 Ci(up) sin(phim) + 2 Ci(|um|) sin(phip)
//                        + cos(phip) (-l pi + 2 Si(um))
//                        + cos(phim) (pi  - 2 Si(up)) ] / 4
//
// with delta = a (xp - xd), phim = delta - m xd, phip = delta + m xd,
// up = (a + m) xd, um = (a - m) xd, and the branch flag l = -1 for a < m
// (inside the light cone), l = +1 for a > m. Si is odd, Ci enters folded
// as Ci(|.|); the signed derivative ratios in jet_ci_abs keep a single
// expression valid on both branches.
//
// The groupings are deliberate. At a = 0 the four i3 terms collapse
// pairwise onto the two i1 terms, so i3_jet(m, 0, xd, xp) reproduces
// i1_jet(m, xd) bitwise and differences built on that identity cancel
// exactly rather than to rounding.
//
// These match the independent quadrature evaluation of
//   i1 = int_0^inf sin(m x) / (x + x0) dx
//   i3 = int_0^inf sin(m x) cos(a (x + xp)) / (x + xd) dx
// (see oracle.hpp) to the oracle's reported accuracy away from a = m.

#include <cmath>

#include "dcp/errors.hpp"
#include "dcp/mjet.hpp"
#include "dcp/specfun.hpp"

namespace dcp {

namespace detail {

inline void check_finite_positive(const char* op, double m, double x0) {
  if (!std::isfinite(m) || !std::isfinite(x0)) {
    throw NonFiniteInput(std::string(op) + ": non-finite input");
  }
  if (!(m > 0.0) || !(x0 > 0.0)) {
    throw DomainError(std::string(op) + ": requires m > 0 and x0 > 0");
  }
}

}  // namespace detail

inline MJet i1_jet(double m, double x0) {
  detail::check_finite_positive("i1_jet", m, x0);
  const double u = m * x0;
  const MJet ci_u = jet_ci_abs(u, x0);
  const MJet si_u = jet_si(u, x0);
  const MJet sin_u = jet_sin(u, x0);
  const MJet cos_u = jet_cos(u, x0);
  const MJet half_gap = {detail::kPi - 2.0 * si_u.value, -2.0 * si_u.dm1,
                         -2.0 * si_u.dm2};
  return jmul(ci_u, sin_u) + 0.5 * jmul(cos_u, half_gap);
}

// i3 with the branch flag forced; the flag only multiplies the pi term of
// the Si(um) factor. Exposed so consistency checks can drive the wrong
// branch deliberately.
inline MJet i3_jet_with_branch(double m, double a, double xd, double xp,
                               int l) {
  if (!std::isfinite(m) || !std::isfinite(a) || !std::isfinite(xd) ||
      !std::isfinite(xp)) {
    throw NonFiniteInput("i3_jet: non-finite input");
  }
  if (!(m > 0.0) || !(a >= 0.0) || !(xd > 0.0) || !(xp > 0.0)) {
    throw DomainError("i3_jet: requires m > 0, a >= 0, xd > 0, xp > 0");
  }
  if (a == m) {
    throw LightConeProximity("i3_jet: a == m, closed form is singular");
  }
  if (l != -1 && l != 1) {
    throw DomainError("i3_jet: branch flag must be -1 or +1");
  }
  const double w = m * xd;
  const double delta = a * (xp - xd);
  const double phim = delta - w;
  const double phip = delta + w;
  const double up = (a + m) * xd;
  const double um = (a - m) * xd;

  const MJet t1 = -2.0 * jmul(jet_ci_abs(up, xd), jet_sin(phim, -xd));
  const MJet t2 = 2.0 * jmul(jet_ci_abs(um, -xd), jet_sin(phip, xd));
  const MJet si_um = jet_si(um, -xd);
  const MJet gap_m = {-l * detail::kPi + 2.0 * si_um.value, 2.0 * si_um.dm1,
                      2.0 * si_um.dm2};
  const MJet t3 = jmul(jet_cos(phip, xd), gap_m);
  const MJet si_up = jet_si(up, xd);
  const MJet gap_p = {detail::kPi - 2.0 * si_up.value, -2.0 * si_up.dm1,
                      -2.0 * si_up.dm2};
  const MJet t4 = jmul(jet_cos(phim, -xd), gap_p);
  return 0.25 * (t1 + t2) + 0.25 * (t3 + t4);
}

inline MJet i3_jet(double m, double a, double xd, double xp) {
  return i3_jet_with_branch(m, a, xd, xp, a > m ? 1 : -1);
}

// Contraction of a kernel jet into an interaction energy:
//   E = -mu^2 / (12 pi d^3) * (2 j - 2 j' + j'')
// The mu^2 factor is applied last so rescaling mu rescales E exactly.
inline double apply_dispersion(const MJet& j, double mu, double d) {
  if (!std::isfinite(mu) || !std::isfinite(d)) {
    throw NonFiniteInput("apply_dispersion: non-finite input");
  }
  if (!(d > 0.0)) {
    throw DomainError("apply_dispersion: requires d > 0");
  }
  const double combo = 2.0 * j.value - 2.0 * j.dm1 + j.dm2;
  const double geom = combo / (12.0 * detail::kPi * (d * d * d));
  return -(mu * mu) * geom;
}

}  // namespace dcp

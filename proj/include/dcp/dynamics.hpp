#pragma once

// Interaction energy and force between a two-level atom and a perfectly
// conducting wall, as functions of wall distance d and time t elapsed
// since the atom-field state was prepared.
//
// Three initial preparations are covered:
//
//   dressed : atom plus its fully formed vacuum cloud.  Stationary, so
//             the energy carries no time dependence.
//   bare    : atom with no cloud at t = 0.  The cloud builds up
//             causally and the wall interaction relaxes towards the
//             dressed value after the round-trip light time 2 d / c.
//   partial : atom initially dressed with a cloud of wavenumber k0p
//             instead of the transition wavenumber k0.  Interpolates
//             between the two cases above and reduces to dressed when
//             k0p == k0.
//
// Every energy is one dispersion combination of the closed-form
// kernels in kernels.hpp,
//
//   E = -mu^2 / (12 pi d^3) * [2 - 2 d/dm + d^2/dm^2] J(m)  at m = 1,
//
// with
//
//   dressed : J = i1(m, x0)
//   bare    : J = i1(m, x0) - i3(m, a, x0, x0)
//   partial : J = i1(m, x0) + [i3(m, a, x0p, x0) - i3(m, a, x0, x0)]
//
// where x0 = 2 k0 d, x0p = 2 k0p d and a = c t / (2 d).  The groupings
// are load-bearing: the partial bracket cancels bitwise when k0p == k0
// (partial == dressed exactly), and the bare difference cancels bitwise
// at t == 0 (no interaction before the coupling acts).  Tests assert
// both identities with ==.
//
// The transient kernels are singular on the light cone a == 1.  Points
// with |a - 1| <= lightcone_eps are rejected with LightConeProximity
// instead of returning values dominated by the divergence.
//
// The force F = -dE/dd is a five-point central stencil in d with one
// Richardson step, h = 1e-5 * d.  Shifting d at fixed t also shifts a,
// so the force additionally rejects any stencil whose swept a-interval
// touches the excluded light-cone band.

#include <cmath>
#include <limits>
#include <string>

#include "dcp/errors.hpp"
#include "dcp/kernels.hpp"

namespace dcp {

// Atom, field and numerical-guard parameters.  Units are arbitrary but
// consistent (hbar = 1); defaults put the wall at ten transition
// wavelengths-ish and a partial cloud twice as stiff as the atom.
struct PhysicalParams {
  double k0 = 1.0;              // transition wavenumber
  double k0p = 2.0;             // cloud wavenumber of the partial preparation
  double mu = 1.0;              // transition dipole moment
  double c = 1.0;               // speed of light
  double lightcone_eps = 1e-3;  // half-width of the excluded band around a = 1
};

enum class InitialState { kDressed, kBare, kPartial };

namespace detail {

inline void check_params(const PhysicalParams& p) {
  if (!std::isfinite(p.k0) || !std::isfinite(p.k0p) || !std::isfinite(p.mu) ||
      !std::isfinite(p.c) || !std::isfinite(p.lightcone_eps)) {
    throw NonFiniteInput("physical parameters must be finite");
  }
  if (p.k0 <= 0.0) throw DomainError("k0 must be > 0");
  if (p.k0p <= 0.0) throw DomainError("k0p must be > 0");
  if (p.mu < 0.0) throw DomainError("mu must be >= 0");
  if (p.c <= 0.0) throw DomainError("c must be > 0");
  if (p.lightcone_eps <= 0.0 || p.lightcone_eps >= 0.5) {
    throw DomainError("lightcone_eps must lie in (0, 0.5)");
  }
}

inline void check_distance(double d) {
  if (!std::isfinite(d)) throw NonFiniteInput("distance must be finite");
  if (d <= 0.0) throw DomainError("distance must be > 0");
}

inline void check_point(double d, double t) {
  check_distance(d);
  if (!std::isfinite(t)) throw NonFiniteInput("time must be finite");
  if (t < 0.0) throw DomainError("time must be >= 0");
}

inline double scaled_time(const PhysicalParams& p, double d, double t) {
  return p.c * t / (2.0 * d);
}

inline void require_off_cone(double a, double eps) {
  if (std::fabs(a - 1.0) <= eps) {
    throw LightConeProximity("a = " + std::to_string(a) +
                             " lies inside the excluded light-cone band");
  }
}

// relative half-step of the force stencil
inline constexpr double kForceStepRel = 1e-5;

// five-point first-derivative stencil, error O(h^4)
template <class F>
double stencil_d5(const F& f, double x, double h) {
  return (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) /
         (12.0 * h);
}

// one Richardson step on stencil_d5, error O(h^6)
template <class F>
double derivative(const F& f, double x, double h) {
  const double coarse = stencil_d5(f, x, h);
  const double fine = stencil_d5(f, x, 0.5 * h);
  return (16.0 * fine - coarse) / 15.0;
}

// The stencil samples d' in [d - 2h, d + 2h], sweeping a over
// [ct/(2(d+2h)), ct/(2(d-2h))].  Reject if that interval touches the
// excluded band, so every sample stays clear of the light cone.
inline void require_stencil_off_cone(const PhysicalParams& p, double d,
                                     double t, double h) {
  const double lo = p.c * t / (2.0 * (d + 2.0 * h));
  const double hi = p.c * t / (2.0 * (d - 2.0 * h));
  if (hi >= 1.0 - p.lightcone_eps && lo <= 1.0 + p.lightcone_eps) {
    throw LightConeProximity(
        "force stencil at d = " + std::to_string(d) + ", t = " +
        std::to_string(t) + " sweeps through the excluded light-cone band");
  }
}

}  // namespace detail

inline double energy_dressed(const PhysicalParams& p, double d) {
  detail::check_params(p);
  detail::check_distance(d);
  const MJet j = i1_jet(1.0, 2.0 * p.k0 * d);
  return apply_dispersion(j, p.mu, d);
}

inline double energy_bare(const PhysicalParams& p, double d, double t) {
  detail::check_params(p);
  detail::check_point(d, t);
  const double a = detail::scaled_time(p, d, t);
  detail::require_off_cone(a, p.lightcone_eps);
  const double x0 = 2.0 * p.k0 * d;
  const MJet j = i1_jet(1.0, x0) - i3_jet(1.0, a, x0, x0);
  return apply_dispersion(j, p.mu, d);
}

inline double energy_partial(const PhysicalParams& p, double d, double t) {
  detail::check_params(p);
  detail::check_point(d, t);
  const double a = detail::scaled_time(p, d, t);
  detail::require_off_cone(a, p.lightcone_eps);
  const double x0 = 2.0 * p.k0 * d;
  const double x0p = 2.0 * p.k0p * d;
  const MJet j =
      i1_jet(1.0, x0) + (i3_jet(1.0, a, x0p, x0) - i3_jet(1.0, a, x0, x0));
  return apply_dispersion(j, p.mu, d);
}

inline double energy(InitialState state, const PhysicalParams& p, double d,
                     double t) {
  switch (state) {
    case InitialState::kDressed:
      return energy_dressed(p, d);
    case InitialState::kBare:
      return energy_bare(p, d, t);
    case InitialState::kPartial:
      return energy_partial(p, d, t);
  }
  throw DomainError("energy: unknown initial state");
}

inline double force_dressed(const PhysicalParams& p, double d) {
  detail::check_params(p);
  detail::check_distance(d);
  const double h = detail::kForceStepRel * d;
  return -detail::derivative([&](double dd) { return energy_dressed(p, dd); },
                             d, h);
}

inline double force_bare(const PhysicalParams& p, double d, double t) {
  detail::check_params(p);
  detail::check_point(d, t);
  const double h = detail::kForceStepRel * d;
  detail::require_stencil_off_cone(p, d, t, h);
  return -detail::derivative(
      [&](double dd) { return energy_bare(p, dd, t); }, d, h);
}

inline double force_partial(const PhysicalParams& p, double d, double t) {
  detail::check_params(p);
  detail::check_point(d, t);
  const double h = detail::kForceStepRel * d;
  detail::require_stencil_off_cone(p, d, t, h);
  return -detail::derivative(
      [&](double dd) { return energy_partial(p, dd, t); }, d, h);
}

inline double force(InitialState state, const PhysicalParams& p, double d,
                    double t) {
  switch (state) {
    case InitialState::kDressed:
      return force_dressed(p, d);
    case InitialState::kBare:
      return force_bare(p, d, t);
    case InitialState::kPartial:
      return force_partial(p, d, t);
  }
  throw DomainError("force: unknown initial state");
}

// (F_partial - F_dressed) / F_dressed; throws DivisionByZero when the
// dressed force vanishes (mu == 0).
inline double relative_force_difference(const PhysicalParams& p, double d,
                                        double t) {
  const double fd = force_dressed(p, d);
  if (fd == 0.0) {
    throw DivisionByZero("relative_force_difference: dressed force is zero");
  }
  return (force_partial(p, d, t) - fd) / fd;
}

// One fully evaluated (d, t) sample carrying every reported observable.
// rel_force matches relative_force_difference except that a vanishing
// dressed force yields NaN here, keeping bulk sweeps total.
struct Observables {
  double a = 0.0;
  double e_dressed = 0.0;
  double e_bare = 0.0;
  double e_partial = 0.0;
  double f_dressed = 0.0;
  double f_bare = 0.0;
  double f_partial = 0.0;
  double rel_force = 0.0;
};

inline Observables evaluate_point(const PhysicalParams& p, double d,
                                  double t) {
  Observables o;
  o.a = detail::scaled_time(p, d, t);
  o.e_dressed = energy_dressed(p, d);
  o.e_bare = energy_bare(p, d, t);
  o.e_partial = energy_partial(p, d, t);
  o.f_dressed = force_dressed(p, d);
  o.f_bare = force_bare(p, d, t);
  o.f_partial = force_partial(p, d, t);
  o.rel_force = o.f_dressed == 0.0
                    ? std::numeric_limits<double>::quiet_NaN()
                    : (o.f_partial - o.f_dressed) / o.f_dressed;
  return o;
}

}  // namespace dcp

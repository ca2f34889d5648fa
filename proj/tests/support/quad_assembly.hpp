#pragma once

// Test-support numerics on top of the quadrature-side energy assembly
// in validate.hpp.

#include "dcp/validate.hpp"

namespace dcp::testsupport {

// Five-point stencil with two Richardson steps, half-step h = hrel * d.
// Much wider than the production stencil so quadrature noise stays
// small relative to the cancellation; using the same stencil on the
// closed-form energy cancels the truncation error in comparisons.
template <class F>
double wide_force(const F& energy_of_d, double d, double hrel = 1e-2) {
  const double h = hrel * d;
  auto d5 = [&](double hh) {
    return (energy_of_d(d - 2.0 * hh) - 8.0 * energy_of_d(d - hh) +
            8.0 * energy_of_d(d + hh) - energy_of_d(d + 2.0 * hh)) /
           (12.0 * hh);
  };
  const double r1a = (16.0 * d5(0.5 * h) - d5(h)) / 15.0;
  const double r1b = (16.0 * d5(0.25 * h) - d5(0.5 * h)) / 15.0;
  return -(64.0 * r1b - r1a) / 63.0;
}

}  // namespace dcp::testsupport

#pragma once

// Test-side reference evaluations, independent of the library internals.
//
// si_ld / ci_ld: extended-precision Maclaurin series, trustworthy to a few
// 1e-17 absolute for |x| <= 10 (beyond that the alternating terms grow too
// large for 64-bit-mantissa rounding).
//
// kSiCiRefs: externally computed high-precision values, rounded to nearest
// double, spanning the full supported range.

#include <cmath>
#include <cstddef>

namespace testref {

inline long double si_ld(long double x) {
  const long double x2 = x * x;
  long double term = x;
  long double sum = x;
  for (int n = 0; n < 60; ++n) {
    term *= -x2 * (2.0L * n + 1.0L) /
            ((2.0L * n + 2.0L) * (2.0L * n + 3.0L) * (2.0L * n + 3.0L));
    sum += term;
    if (std::fabs(static_cast<double>(term)) < 1e-26) break;
  }
  return sum;
}

inline long double ci_ld(long double x) {
  const long double kGamma = 0.577215664901532860606512090082402431L;
  const long double x2 = x * x;
  long double term = -x2 / 4.0L;
  long double sum = term;
  for (int n = 1; n < 60; ++n) {
    term *= -x2 * (2.0L * n) /
            ((2.0L * n + 1.0L) * (2.0L * n + 2.0L) * (2.0L * n + 2.0L));
    sum += term;
    if (std::fabs(static_cast<double>(term)) < 1e-26) break;
  }
  return kGamma + std::log(x) + sum;
}

struct SiCiRef {
  double x;
  double si;
  double ci;
};

inline constexpr SiCiRef kSiCiRefs[] = {
    {1e-8, 1e-8, -17.84346507905083263654},
    {0.5, 0.4931074180430666891616, -0.1777840788066129013358},
    {1.0, 0.9460830703671830149414, 0.3374039229009681346626},
    {4.0, 1.758203138949053058106, -0.1409816978869304116391},
    {7.5, 1.510681530943385878197, 0.1156332032379342704374},
    {12.0, 1.504971241526373370527, -0.04978000688411367559592},
    {20.0, 1.548241701043439840164, 0.04441982084535331653977},
    {30.0, 1.566756540030351110984, -0.03303241728207114377923},
    {100.0, 1.562225466889056293352, -0.005148825142610492144444},
    {1000.0, 1.570233121968771218148, 0.0008263155110906822820018},
    {1e5, 1.570806320399394122839, 3.575879157293513569033e-7},
    {1e8, 1.570796330428747419624, 9.316390307435767152566e-9},
};

inline constexpr std::size_t kNumSiCiRefs =
    sizeof(kSiCiRefs) / sizeof(kSiCiRefs[0]);

inline double ulp_of(double v) {
  double av = std::fabs(v);
  return std::nextafter(av, 1e300) - av;
}

}  // namespace testref

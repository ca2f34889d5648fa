#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "dcp/specfun.hpp"
#include "support/reference.hpp"

namespace {

constexpr double kPiOver2 = 1.57079632679489661923132169163975144;

double fd_central(double (*f)(double), double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double si_value(double x) { return dcp::si(x).value; }
double ci_value(double x) { return dcp::ci(x).value; }

// Relative comparison with an absolute floor for near-zero crossings of
// the compared quantity (finite differences cannot certify a relative
// error at a zero of the derivative).
bool close_mixed(double a, double b, double rel, double floor_abs) {
  double tol = std::max(rel * std::max(std::fabs(a), std::fabs(b)), floor_abs);
  return std::fabs(a - b) <= tol;
}

}  // namespace

TEST_CASE("si and ci match external references within certified bounds",
          "[specfun]") {
  for (const auto& r : testref::kSiCiRefs) {
    const auto sv = dcp::si(r.x);
    const auto cv = dcp::ci(r.x);
    CAPTURE(r.x, sv.value, sv.abs_err_bound, cv.value, cv.abs_err_bound);
    REQUIRE(std::fabs(sv.value - r.si) <=
            sv.abs_err_bound + testref::ulp_of(r.si));
    REQUIRE(std::fabs(cv.value - r.ci) <=
            cv.abs_err_bound + testref::ulp_of(r.ci));
    REQUIRE(sv.abs_err_bound <= 1e-13);
    REQUIRE(cv.abs_err_bound <= 1e-13);
  }
  REQUIRE(dcp::si(1.0).value == Catch::Approx(0.946083070367183).margin(1e-15));
  REQUIRE(dcp::ci(1.0).value == Catch::Approx(0.337403922900968).margin(1e-15));
}

TEST_CASE("series regime agrees with extended-precision reference",
          "[specfun]") {
  // log-spaced sweep across the tiny-argument decades
  for (int i = 0; i <= 300; ++i) {
    const double x = std::pow(10.0, -300.0 + i * (300.0 + 1.0) / 300.0);
    if (x > 10.0) break;
    const auto sv = dcp::si(x);
    const auto cv = dcp::ci(x);
    CAPTURE(x);
    REQUIRE(std::fabs(sv.value - static_cast<double>(testref::si_ld(x))) <=
            sv.abs_err_bound + 1e-15);
    REQUIRE(std::fabs(cv.value - static_cast<double>(testref::ci_ld(x))) <=
            cv.abs_err_bound + 1e-15);
  }
  // linear sweep over both regimes up to the reference's validity edge
  for (int i = 0; i <= 400; ++i) {
    const double x = 0.025 + i * (10.0 - 0.025) / 400.0;
    const auto sv = dcp::si(x);
    const auto cv = dcp::ci(x);
    CAPTURE(x);
    REQUIRE(std::fabs(sv.value - static_cast<double>(testref::si_ld(x))) <=
            sv.abs_err_bound + 1e-15);
    REQUIRE(std::fabs(cv.value - static_cast<double>(testref::ci_ld(x))) <=
            cv.abs_err_bound + 1e-15);
  }
}

TEST_CASE("si oddness is exact", "[specfun]") {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> dist(1e-6, 1e6);
  for (int i = 0; i < 200; ++i) {
    const double x = dist(gen);
    REQUIRE(dcp::si(-x).value == -dcp::si(x).value);
  }
  REQUIRE(dcp::si(0.0).value == 0.0);
}

TEST_CASE("limiting values", "[specfun]") {
  REQUIRE(std::fabs(dcp::si(1e6).value - kPiOver2) < 1e-6);
  REQUIRE(std::fabs(dcp::ci(1e6).value) < 2e-6);
  // ci(x) ~ gamma + ln x for tiny x; at 1e-8 the series correction is
  // -x^2/4 = -2.5e-17, folded into the reference value
  REQUIRE(dcp::ci(1e-8).value ==
          Catch::Approx(-17.84346507905083263654).margin(1e-13));
}

TEST_CASE("jet first derivatives match central finite differences",
          "[specfun]") {
  std::mt19937 gen(42);
  std::uniform_real_distribution<double> dist(0.01, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = dist(gen);
    const double h = x * 1e-6;
    const double fd_si = fd_central(si_value, x, h);
    const double fd_ci = fd_central(ci_value, x, h);
    const auto js = dcp::si_jet(x);
    const auto jc = dcp::ci_jet(x);
    CAPTURE(x, js.d1, fd_si, jc.d1, fd_ci);
    REQUIRE(close_mixed(js.d1, fd_si, 1e-6, 5e-8));
    REQUIRE(close_mixed(jc.d1, fd_ci, 1e-6, 5e-8));
  }
}

TEST_CASE("jet second derivatives match differenced first derivatives",
          "[specfun]") {
  std::mt19937 gen(43);
  std::uniform_real_distribution<double> dist(0.05, 100.0);
  for (int i = 0; i < 500; ++i) {
    const double x = dist(gen);
    const double h = x * 1e-6;
    const double fd_si2 = (dcp::si_jet(x + h).d1 - dcp::si_jet(x - h).d1) / (2.0 * h);
    const double fd_ci2 = (dcp::ci_jet(x + h).d1 - dcp::ci_jet(x - h).d1) / (2.0 * h);
    const auto js = dcp::si_jet(x);
    const auto jc = dcp::ci_jet(x);
    CAPTURE(x, js.d2, fd_si2, jc.d2, fd_ci2);
    REQUIRE(close_mixed(js.d2, fd_si2, 1e-6, 5e-8));
    REQUIRE(close_mixed(jc.d2, fd_ci2, 1e-6, 5e-8));
  }
}

TEST_CASE("approach to the limits stays inside the 2/x envelope",
          "[specfun]") {
  for (int i = 0; i <= 200; ++i) {
    const double x = 50.0 * std::pow(2e6, i / 200.0);
    CAPTURE(x);
    REQUIRE(std::fabs(dcp::si(x).value - kPiOver2) <= 2.0 / x);
    REQUIRE(std::fabs(dcp::ci(x).value) <= 2.0 / x);
  }
}

TEST_CASE("evaluation branches agree at the switch point", "[specfun]") {
  const double xs = dcp::detail::kSpecFunSwitch;
  const auto s_small = dcp::detail::si_series(xs);
  const auto s_large = dcp::detail::si_large(xs);
  const auto c_small = dcp::detail::ci_series(xs);
  const auto c_large = dcp::detail::ci_large(xs);
  REQUIRE(std::fabs(s_small.value - s_large.value) <= 1e-12);
  REQUIRE(std::fabs(c_small.value - c_large.value) <= 1e-12);
}

TEST_CASE("error bounds honor the range contract", "[specfun]") {
  for (int i = 0; i <= 4000; ++i) {
    const double x = std::pow(10.0, -300.0 + i * 308.0 / 4000.0);
    const auto sv = dcp::si(x);
    const auto cv = dcp::ci(x);
    CAPTURE(x);
    REQUIRE(std::isfinite(sv.value));
    REQUIRE(std::isfinite(cv.value));
    REQUIRE(sv.abs_err_bound <= 1e-13);
    REQUIRE(cv.abs_err_bound <= 1e-13);
  }
}

TEST_CASE("input validation", "[specfun]") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  REQUIRE_THROWS_AS(dcp::si(nan), dcp::NonFiniteInput);
  REQUIRE_THROWS_AS(dcp::si(inf), dcp::NonFiniteInput);
  REQUIRE_THROWS_AS(dcp::ci(nan), dcp::NonFiniteInput);
  REQUIRE_THROWS_AS(dcp::ci(-inf), dcp::NonFiniteInput);
  REQUIRE_THROWS_AS(dcp::ci(0.0), dcp::DomainError);
  REQUIRE_THROWS_AS(dcp::ci(-3.0), dcp::DomainError);
}

TEST_CASE("derivative zeros at trig zeros", "[specfun]") {
  REQUIRE(std::fabs(dcp::si_jet(M_PI).d1) <= 5e-17);
  REQUIRE(std::fabs(dcp::ci_jet(M_PI / 2.0).d1) <= 5e-17);
  REQUIRE(dcp::si_jet(1.0).d1 ==
          Catch::Approx(0.8414709848078965).margin(1e-15));
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstddef>
#include <limits>
#include <set>
#include <vector>

#include "dcp/errors.hpp"
#include "dcp/scan.hpp"

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// synthetic time sweep: y lands in the bare columns and rel_force, the
// dressed columns hold the constant reference
dcp::SweepTable synth(const std::vector<double>& ys, double ref,
                      const std::set<std::size_t>& excluded = {}) {
  dcp::SweepTable tb;
  tb.axis = dcp::SweepAxis::kTime;
  tb.fixed = 10.0;
  tb.grid = {0.0, static_cast<double>(ys.size() - 1), ys.size()};
  for (std::size_t i = 0; i < ys.size(); ++i) {
    dcp::SweepRow r;
    r.index = i;
    r.t = static_cast<double>(i);
    r.d = tb.fixed;
    r.a = r.t / (2.0 * r.d);
    if (excluded.count(i) != 0) {
      r.excluded = true;
      r.reason = "synthetic exclusion";
    } else {
      r.obs.a = r.a;
      r.obs.e_dressed = ref;
      r.obs.f_dressed = ref;
      r.obs.e_bare = ys[i];
      r.obs.f_bare = ys[i];
      r.obs.e_partial = ys[i];
      r.obs.f_partial = ys[i];
      r.obs.rel_force = ys[i];
    }
    tb.rows.push_back(r);
  }
  return tb;
}

}  // namespace

TEST_CASE("sweep grids are validated", "[scan]") {
  const dcp::PhysicalParams p;
  CHECK_THROWS_AS(dcp::run_sweep(dcp::SweepAxis::kTime, p, 10.0, {0.0, 1.0, 1}),
                  dcp::DomainError);
  CHECK_THROWS_AS(
      dcp::run_sweep(dcp::SweepAxis::kTime, p, 10.0, {5.0, 5.0, 10}),
      dcp::DomainError);
  CHECK_THROWS_AS(
      dcp::run_sweep(dcp::SweepAxis::kTime, p, 10.0, {-1.0, 5.0, 10}),
      dcp::DomainError);
  CHECK_THROWS_AS(
      dcp::run_sweep(dcp::SweepAxis::kDistance, p, 5.0, {0.0, 5.0, 10}),
      dcp::DomainError);
  CHECK_THROWS_AS(
      dcp::run_sweep(dcp::SweepAxis::kTime, p, 10.0, {kNan, 5.0, 10}),
      dcp::NonFiniteInput);
  CHECK_THROWS_AS(dcp::run_sweep(dcp::SweepAxis::kTime, p, 0.0, {0.0, 5.0, 10}),
                  dcp::DomainError);
  CHECK_THROWS_AS(
      dcp::run_sweep(dcp::SweepAxis::kDistance, p, -1.0, {1.0, 5.0, 10}),
      dcp::DomainError);
}

TEST_CASE("grid points are uniform and hit the endpoints", "[scan]") {
  const dcp::GridSpec g{0.0, 100.0, 401};
  CHECK(g.value(0) == 0.0);
  CHECK(g.value(400) == 100.0);
  CHECK(g.value(80) == 20.0);  // step 0.25 is exact in binary
  const dcp::GridSpec f{0.0, 19.9, 400};
  CHECK(f.value(0) == 0.0);
  CHECK(std::fabs(f.value(399) - 19.9) <= 1e-12 * 19.9);
}

TEST_CASE("time sweep across the light cone keeps excluded rows in place",
          "[scan]") {
  const dcp::PhysicalParams p;  // d = 10 below puts the cone at t = 20
  const auto tb = dcp::run_sweep(dcp::SweepAxis::kTime, p, 10.0,
                                 {0.0, 100.0, 51});

  REQUIRE(tb.rows.size() == 51);
  CHECK(tb.included_count() == 50);
  for (std::size_t i = 0; i < tb.rows.size(); ++i) {
    const auto& r = tb.rows[i];
    CHECK(r.index == i);
    CHECK(r.t == 2.0 * static_cast<double>(i));
    CHECK(r.d == 10.0);
    CHECK(r.excluded == (i == 10));  // t = 20, a = 1
  }
  CHECK(tb.rows[10].a == 1.0);
  CHECK(!tb.rows[10].reason.empty());

  // included rows carry exactly the point evaluation
  const auto direct = dcp::evaluate_point(p, 10.0, 30.0);
  const auto& r15 = tb.rows[15];
  REQUIRE(r15.t == 30.0);
  CHECK(r15.obs.e_bare == direct.e_bare);
  CHECK(r15.obs.f_partial == direct.f_partial);
  CHECK(r15.obs.rel_force == direct.rel_force);
}

TEST_CASE("figure grids avoid the cone on both sides", "[scan]") {
  const dcp::PhysicalParams p;
  const auto pre = dcp::run_sweep(dcp::SweepAxis::kTime, p, 10.0,
                                  {0.0, 19.9, 400});
  CHECK(pre.included_count() == 400);
  const auto post = dcp::run_sweep(dcp::SweepAxis::kTime, p, 10.0,
                                   {20.1, 100.0, 400});
  CHECK(post.included_count() == 400);
}

TEST_CASE("distance sweep excludes the cone-crossing distance", "[scan]") {
  const dcp::PhysicalParams p;
  // t = 5: a = 1 at d = 2.5, which is grid point 20 of [0.5, 4.5] x 41
  const auto tb = dcp::run_sweep(dcp::SweepAxis::kDistance, p, 5.0,
                                 {0.5, 4.5, 41});
  REQUIRE(tb.rows.size() == 41);
  CHECK(tb.rows[20].excluded);
  CHECK(tb.rows[20].d == 2.5);
  CHECK(tb.included_count() == 40);

  // settling is a time-domain notion
  const auto an = dcp::analyze_trace(tb, dcp::TraceColumn::kFBare, 0.05);
  CHECK(!an.settling_time.has_value());
}

TEST_CASE("trace analysis validates its inputs", "[scan]") {
  const auto tb = synth({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, -1.0);
  CHECK_THROWS_AS(dcp::analyze_trace(tb, dcp::TraceColumn::kFBare, 0.0),
                  dcp::DomainError);
  CHECK_THROWS_AS(dcp::analyze_trace(tb, dcp::TraceColumn::kFBare, -0.1),
                  dcp::DomainError);
  CHECK_THROWS_AS(dcp::analyze_trace(tb, dcp::TraceColumn::kFBare, 0.05, 0.0),
                  dcp::DomainError);

  // 12 rows but only 9 included
  const auto sparse =
      synth({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, -1.0, {2, 5, 7});
  CHECK_THROWS_AS(dcp::analyze_trace(sparse, dcp::TraceColumn::kFBare, 0.05),
                  dcp::InsufficientData);
}

TEST_CASE("sign changes skip exact zeros", "[scan]") {
  const auto tb = synth({1, 2, 0, -3, -1, 0, 0, 4, 5, -1, 1}, -1.0);
  const auto an = dcp::analyze_trace(tb, dcp::TraceColumn::kFBare, 0.05);
  CHECK(an.sign_changes == 4);
}

TEST_CASE("strict extrema require strict inequalities on both sides",
          "[scan]") {
  const auto tb = synth({1, 2, 0, -3, -1, 0, 0, 4, 5, -1, 1}, -1.0);
  const auto an = dcp::analyze_trace(tb, dcp::TraceColumn::kFBare, 0.05);
  // peaks: 2 and 5; troughs: -3 and -1 (tail); the 0,0 plateau is not strict
  CHECK(an.strict_extrema == 4);
}

TEST_CASE("settling time uses clipped windows against the dressed reference",
          "[scan]") {
  // reference -1; trace sits at -2 for t < 8, at -1 afterwards
  std::vector<double> ys(20, -1.0);
  for (std::size_t i = 0; i < 8; ++i) ys[i] = -2.0;
  const auto tb = synth(ys, -1.0);

  const auto an =
      dcp::analyze_trace(tb, dcp::TraceColumn::kFBare, 0.1, 5.0);
  REQUIRE(an.settling_time.has_value());
  CHECK(*an.settling_time == 8.0);

  SECTION("a late excursion pushes settling past it") {
    auto late = ys;
    late[15] = -3.0;
    const auto an2 =
        dcp::analyze_trace(synth(late, -1.0), dcp::TraceColumn::kFBare, 0.1,
                           5.0);
    REQUIRE(an2.settling_time.has_value());
    CHECK(*an2.settling_time == 16.0);
  }

  SECTION("a trace that never settles reports nothing") {
    auto never = ys;
    never.back() = -5.0;
    const auto an3 = dcp::analyze_trace(synth(never, -1.0),
                                        dcp::TraceColumn::kFBare, 0.1, 5.0);
    CHECK(!an3.settling_time.has_value());
  }

  SECTION("windows average over included rows only") {
    // one outlier at t = 3 in a 20-row trace; with window 10 the mean
    // over 11 points (dev 1/11) stays inside tol 0.095, but dropping
    // one good row from the window (excluded t = 5) tips the 10-point
    // mean (dev 1/10) over until the outlier leaves the window
    std::vector<double> one(20, -1.0);
    one[3] = -2.0;
    const auto full = dcp::analyze_trace(synth(one, -1.0),
                                         dcp::TraceColumn::kFBare, 0.095,
                                         10.0);
    REQUIRE(full.settling_time.has_value());
    CHECK(*full.settling_time == 0.0);

    const auto holed = dcp::analyze_trace(synth(one, -1.0, {5}),
                                          dcp::TraceColumn::kFBare, 0.095,
                                          10.0);
    REQUIRE(holed.settling_time.has_value());
    CHECK(*holed.settling_time == 4.0);
  }
}

TEST_CASE("settling references are column dependent", "[scan]") {
  // trace values near -1 settle for force/energy columns (reference -1)
  // but not for rel_force (reference 0, absolute scale)
  std::vector<double> ys(12, -1.0);
  const auto tb = synth(ys, -1.0);

  const auto force = dcp::analyze_trace(tb, dcp::TraceColumn::kFBare, 0.05);
  REQUIRE(force.settling_time.has_value());
  CHECK(*force.settling_time == 0.0);

  const auto energy = dcp::analyze_trace(tb, dcp::TraceColumn::kEPartial, 0.05);
  REQUIRE(energy.settling_time.has_value());
  CHECK(*energy.settling_time == 0.0);

  const auto self = dcp::analyze_trace(tb, dcp::TraceColumn::kFDressed, 0.05);
  REQUIRE(self.settling_time.has_value());
  CHECK(*self.settling_time == 0.0);

  const auto rel = dcp::analyze_trace(tb, dcp::TraceColumn::kRelForce, 0.05);
  CHECK(!rel.settling_time.has_value());  // |-1 - 0| > 0.05 * 1 everywhere

  std::vector<double> small(12, 0.01);
  const auto rel2 = dcp::analyze_trace(synth(small, -1.0),
                                       dcp::TraceColumn::kRelForce, 0.05);
  REQUIRE(rel2.settling_time.has_value());
  CHECK(*rel2.settling_time == 0.0);
}

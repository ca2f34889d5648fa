#pragma once

// Uniform parameter sweeps over the observables in dynamics.hpp and
// shape analysis of the resulting traces.
//
// A sweep walks either the time axis (fixed wall distance) or the
// distance axis (fixed time).  Grid points that fall inside the
// excluded light-cone band, for the point itself or for the force
// stencil around it, are kept in the table as excluded rows carrying
// the rejection reason instead of aborting the sweep.
//
// analyze_trace summarises one column of a sweep:
//
//   sign_changes   - flips between consecutive nonzero values; exact
//                    zeros are skipped, not counted as crossings.
//   strict_extrema - interior points strictly above or strictly below
//                    both neighbours.
//   settling_time  - earliest grid time T such that every windowed
//                    mean taken at T or later stays within
//                    tol * scale of the trace's reference value.
//                    Windows span [T', T' + window] clipped to the
//                    data, so the trailing windows shrink rather than
//                    drop out.  Only defined for time sweeps.
//
// The reference value is column dependent: transient forces settle
// towards the dressed force, transient energies towards the dressed
// energy, the relative force difference towards zero (absolute scale
// 1), and the dressed columns trivially towards themselves.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcp/dynamics.hpp"
#include "dcp/errors.hpp"

namespace dcp {

enum class SweepAxis { kTime, kDistance };

struct GridSpec {
  double start = 0.0;
  double stop = 1.0;
  std::size_t steps = 2;

  double value(std::size_t i) const {
    return start + static_cast<double>(i) * (stop - start) /
                       static_cast<double>(steps - 1);
  }
};

struct SweepRow {
  std::size_t index = 0;
  double t = 0.0;
  double d = 0.0;
  double a = 0.0;
  bool excluded = false;
  std::string reason;  // set only for excluded rows
  Observables obs;     // valid only for included rows
};

struct SweepTable {
  SweepAxis axis = SweepAxis::kTime;
  PhysicalParams params;
  double fixed = 0.0;  // the distance (time axis) or the time (distance axis)
  GridSpec grid;
  std::vector<SweepRow> rows;

  std::size_t included_count() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.excluded ? 0 : 1;
    return n;
  }
};

namespace detail {

inline void check_grid(SweepAxis axis, const GridSpec& g) {
  if (!std::isfinite(g.start) || !std::isfinite(g.stop)) {
    throw NonFiniteInput("grid bounds must be finite");
  }
  if (g.steps < 2) throw DomainError("grid needs at least 2 steps");
  if (!(g.start < g.stop)) throw DomainError("grid start must be < stop");
  if (axis == SweepAxis::kTime && g.start < 0.0) {
    throw DomainError("time grid must start at t >= 0");
  }
  if (axis == SweepAxis::kDistance && g.start <= 0.0) {
    throw DomainError("distance grid must start at d > 0");
  }
}

}  // namespace detail

inline SweepTable run_sweep(SweepAxis axis, const PhysicalParams& p,
                            double fixed, const GridSpec& grid) {
  detail::check_params(p);
  detail::check_grid(axis, grid);
  if (axis == SweepAxis::kTime) {
    detail::check_distance(fixed);
  } else {
    if (!std::isfinite(fixed)) throw NonFiniteInput("time must be finite");
    if (fixed < 0.0) throw DomainError("time must be >= 0");
  }

  SweepTable table;
  table.axis = axis;
  table.params = p;
  table.fixed = fixed;
  table.grid = grid;
  table.rows.reserve(grid.steps);

  for (std::size_t i = 0; i < grid.steps; ++i) {
    SweepRow row;
    row.index = i;
    const double x = grid.value(i);
    row.t = axis == SweepAxis::kTime ? x : fixed;
    row.d = axis == SweepAxis::kTime ? fixed : x;
    row.a = detail::scaled_time(p, row.d, row.t);
    try {
      row.obs = evaluate_point(p, row.d, row.t);
    } catch (const LightConeProximity& e) {
      row.excluded = true;
      row.reason = e.what();
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

// Canonical figure data sets: forces through the transient before the
// round-trip light time (fig1), the relaxation after it (fig2), and
// the relative force difference across the whole window (fig3, whose
// grid hits the cone at t = 2d/c and records it as an excluded row).
// All three sweep time at fixed distance.  The small variant keeps the
// same spans at an eighth of the resolution for quick runs.
struct FigureSpec {
  std::string name;
  GridSpec grid;
};

inline std::vector<FigureSpec> figure_grids(bool small = false) {
  if (small) {
    return {{"fig1", {0.0, 19.9, 50}},
            {"fig2", {20.1, 100.0, 50}},
            {"fig3", {0.0, 100.0, 51}}};
  }
  return {{"fig1", {0.0, 19.9, 400}},
          {"fig2", {20.1, 100.0, 400}},
          {"fig3", {0.0, 100.0, 401}}};
}

enum class TraceColumn {
  kEDressed,
  kEBare,
  kEPartial,
  kFDressed,
  kFBare,
  kFPartial,
  kRelForce,
};

inline double trace_value(const Observables& o, TraceColumn col) {
  switch (col) {
    case TraceColumn::kEDressed:
      return o.e_dressed;
    case TraceColumn::kEBare:
      return o.e_bare;
    case TraceColumn::kEPartial:
      return o.e_partial;
    case TraceColumn::kFDressed:
      return o.f_dressed;
    case TraceColumn::kFBare:
      return o.f_bare;
    case TraceColumn::kFPartial:
      return o.f_partial;
    case TraceColumn::kRelForce:
      return o.rel_force;
  }
  throw DomainError("trace_value: unknown column");
}

struct TraceAnalysis {
  std::size_t sign_changes = 0;
  std::size_t strict_extrema = 0;
  std::optional<double> settling_time;
};

inline TraceAnalysis analyze_trace(const SweepTable& table, TraceColumn col,
                                   double tol, double window = 100.0) {
  if (!std::isfinite(tol) || tol <= 0.0) {
    throw DomainError("analysis tolerance must be > 0");
  }
  if (!std::isfinite(window) || window <= 0.0) {
    throw DomainError("analysis window must be > 0");
  }

  std::vector<double> xs, ys;
  xs.reserve(table.rows.size());
  ys.reserve(table.rows.size());
  for (const auto& r : table.rows) {
    if (r.excluded) continue;
    xs.push_back(table.axis == SweepAxis::kTime ? r.t : r.d);
    ys.push_back(trace_value(r.obs, col));
  }
  if (xs.size() < 10) {
    throw InsufficientData("trace analysis needs at least 10 included rows");
  }

  TraceAnalysis out;

  double last_nonzero = 0.0;
  for (double y : ys) {
    if (y == 0.0) continue;
    if (last_nonzero != 0.0 && (y > 0.0) != (last_nonzero > 0.0)) {
      ++out.sign_changes;
    }
    last_nonzero = y;
  }

  for (std::size_t i = 1; i + 1 < ys.size(); ++i) {
    const double l = ys[i] - ys[i - 1];
    const double r = ys[i] - ys[i + 1];
    if ((l > 0.0 && r > 0.0) || (l < 0.0 && r < 0.0)) ++out.strict_extrema;
  }

  if (table.axis != SweepAxis::kTime) return out;

  double ref = 0.0, scale = 1.0;
  switch (col) {
    case TraceColumn::kEBare:
    case TraceColumn::kEPartial:
    case TraceColumn::kEDressed:
      for (const auto& r : table.rows) {
        if (!r.excluded) {
          ref = r.obs.e_dressed;
          break;
        }
      }
      scale = std::fabs(ref);
      break;
    case TraceColumn::kFBare:
    case TraceColumn::kFPartial:
    case TraceColumn::kFDressed:
      for (const auto& r : table.rows) {
        if (!r.excluded) {
          ref = r.obs.f_dressed;
          break;
        }
      }
      scale = std::fabs(ref);
      break;
    case TraceColumn::kRelForce:
      ref = 0.0;
      scale = 1.0;
      break;
  }

  // windowed means via prefix sums; window [xs[j], xs[j]+window] clipped
  const std::size_t n = xs.size();
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + ys[i];

  std::vector<bool> ok(n, false);
  std::size_t hi = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (hi < j + 1) hi = j + 1;
    while (hi < n && xs[hi] <= xs[j] + window) ++hi;
    const double mean =
        (prefix[hi] - prefix[j]) / static_cast<double>(hi - j);
    ok[j] = std::fabs(mean - ref) <= tol * scale;
  }

  bool suffix_ok = true;
  std::optional<double> settle;
  for (std::size_t j = n; j-- > 0;) {
    suffix_ok = suffix_ok && ok[j];
    if (suffix_ok) settle = xs[j];
  }
  out.settling_time = settle;
  return out;
}

}  // namespace dcp

// Command-line front end: single-point evaluation, time/distance
// sweeps, canonical figure data, and quadrature self-validation.
//
// Exit codes: 0 success, 2 usage or domain error, 3 light-cone
// proximity, 4 I/O failure, 5 validation failure.

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dcp/dynamics.hpp"
#include "dcp/io.hpp"
#include "dcp/scan.hpp"
#include "dcp/validate.hpp"
#include "dcp/version.hpp"

namespace {

struct CommonArgs {
  dcp::PhysicalParams params;
  double d = 10.0;
  double t = 0.0;
  std::string format = "csv";
  std::string out;
};

void add_physics_options(CLI::App* cmd, CommonArgs& c) {
  cmd->add_option("--k0", c.params.k0, "transition wavenumber after the quench")
      ->capture_default_str();
  cmd->add_option("--k0p", c.params.k0p,
                  "transition wavenumber before the quench")
      ->capture_default_str();
  cmd->add_option("--mu", c.params.mu, "transition dipole magnitude")
      ->capture_default_str();
  cmd->add_option("--c", c.params.c, "speed of light")->capture_default_str();
  cmd->add_option("--lightcone-eps", c.params.lightcone_eps,
                  "half-width of the excluded band around a = 1")
      ->capture_default_str();
}

void add_output_options(CLI::App* cmd, CommonArgs& c) {
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "write to this file instead of stdout");
}

void emit(const CommonArgs& c, const std::string& text) {
  if (c.out.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    dcp::write_file(c.out, text);
  }
}

int run_eval(const CommonArgs& c) {
  dcp::SweepRow r;
  r.t = c.t;
  r.d = c.d;
  r.obs = dcp::evaluate_point(c.params, c.d, c.t);
  r.a = r.obs.a;
  emit(c, c.format == "json" ? dcp::point_to_json(c.params, r)
                             : dcp::point_to_csv(c.params, r));
  return 0;
}

int run_sweep_cmd(const CommonArgs& c, dcp::SweepAxis axis,
                  const dcp::GridSpec& grid) {
  const double fixed = axis == dcp::SweepAxis::kTime ? c.d : c.t;
  const auto table = dcp::run_sweep(axis, c.params, fixed, grid);
  emit(c, c.format == "json" ? dcp::sweep_to_json(table)
                             : dcp::sweep_to_csv(table));
  return 0;
}

int run_figures(const CommonArgs& c, const std::string& outdir, bool small) {
  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec) {
    throw dcp::IoError("cannot create directory '" + outdir +
                       "': " + ec.message());
  }
  std::vector<std::string> written;
  for (const auto& fig : dcp::figure_grids(small)) {
    const auto table =
        dcp::run_sweep(dcp::SweepAxis::kTime, c.params, c.d, fig.grid);
    const std::string path = outdir + "/" + fig.name + ".csv";
    dcp::write_file(path, dcp::sweep_to_csv(table));
    written.push_back(path);
  }
  const std::string script = outdir + "/figures.gp";
  dcp::write_file(script, dcp::figures_script());
  written.push_back(script);
  for (const auto& path : written) std::printf("wrote %s\n", path.c_str());
  return 0;
}

int run_validate(dcp::ValidationGrid grid, dcp::BranchOverride branch,
                 double quad_tol) {
  const auto results = dcp::run_validation(grid, branch, quad_tol);
  bool all_passed = true;
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    std::printf("%s %s (%zu points, worst %.3e, tolerance %.3e)\n",
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.points, r.worst,
                r.tolerance);
  }
  std::printf("%s\n", all_passed ? "all checks passed"
                                 : "one or more checks FAILED");
  return all_passed ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Transient Casimir-Polder interaction of a two-level atom and a "
      "conducting wall: energies and forces for dressed, bare, and "
      "partially dressed preparations."};
  app.set_version_flag("--version", std::string(dcp::kVersion));
  app.require_subcommand(1);

  CommonArgs c;

  auto* eval = app.add_subcommand("eval", "evaluate one (d, t) point");
  add_physics_options(eval, c);
  add_output_options(eval, c);
  eval->add_option("--d", c.d, "atom-wall distance")->capture_default_str();
  eval->add_option("--t", c.t, "time since the quench")->capture_default_str();

  auto* sweep = app.add_subcommand(
      "sweep", "sweep time at fixed distance or distance at fixed time");
  add_physics_options(sweep, c);
  add_output_options(sweep, c);
  sweep->add_option("--d", c.d, "atom-wall distance (time sweeps)")
      ->capture_default_str();
  sweep->add_option("--t", c.t, "time since the quench (distance sweeps)")
      ->capture_default_str();
  double tmin = 0.0, tmax = 0.0, dmin = 0.0, dmax = 0.0;
  std::size_t steps = 100;
  auto* o_tmin = sweep->add_option("--tmin", tmin, "sweep start time");
  auto* o_tmax = sweep->add_option("--tmax", tmax, "sweep stop time");
  auto* o_dmin = sweep->add_option("--dmin", dmin, "sweep start distance");
  auto* o_dmax = sweep->add_option("--dmax", dmax, "sweep stop distance");
  sweep->add_option("--steps", steps, "number of grid points")
      ->capture_default_str();
  o_tmin->needs(o_tmax);
  o_tmax->needs(o_tmin);
  o_dmin->needs(o_dmax);
  o_dmax->needs(o_dmin);
  o_tmin->excludes(o_dmin);
  o_tmin->excludes(o_dmax);
  o_tmax->excludes(o_dmin);
  o_tmax->excludes(o_dmax);

  auto* figures = app.add_subcommand(
      "figures", "write canonical figure CSVs and a gnuplot script");
  add_physics_options(figures, c);
  figures->add_option("--d", c.d, "atom-wall distance")->capture_default_str();
  std::string outdir = ".";
  std::string grid_name = "full";
  figures->add_option("--outdir", outdir, "output directory")
      ->capture_default_str();
  figures->add_option("--grid", grid_name, "grid resolution")
      ->check(CLI::IsMember({"small", "full"}))
      ->capture_default_str();

  auto* validate = app.add_subcommand(
      "validate", "check the closed forms against direct quadrature");
  std::string vgrid_name = "full";
  double quad_tol = 1e-10;
  bool force_minus = false;
  validate->add_option("--grid", vgrid_name, "grid resolution")
      ->check(CLI::IsMember({"small", "full"}))
      ->capture_default_str();
  validate->add_option("--tol", quad_tol, "quadrature absolute tolerance")
      ->capture_default_str();
  validate
      ->add_flag("--force-branch-minus", force_minus,
                 "evaluate i3 with the inside-cone branch everywhere "
                 "(demonstrates that validation catches branch errors)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return run_eval(c);
    if (sweep->parsed()) {
      const bool time_axis = o_tmin->count() > 0;
      const bool dist_axis = o_dmin->count() > 0;
      if (time_axis == dist_axis) {
        std::fprintf(stderr,
                     "sweep: give exactly one of --tmin/--tmax or "
                     "--dmin/--dmax\n");
        return 2;
      }
      if (time_axis) {
        return run_sweep_cmd(c, dcp::SweepAxis::kTime, {tmin, tmax, steps});
      }
      return run_sweep_cmd(c, dcp::SweepAxis::kDistance, {dmin, dmax, steps});
    }
    if (figures->parsed()) return run_figures(c, outdir, grid_name == "small");
    if (validate->parsed()) {
      return run_validate(vgrid_name == "small" ? dcp::ValidationGrid::kSmall
                                                : dcp::ValidationGrid::kFull,
                          force_minus ? dcp::BranchOverride::kForceMinus
                                      : dcp::BranchOverride::kNone,
                          quad_tol);
    }
  } catch (const dcp::LightConeProximity& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const dcp::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const dcp::NonFiniteInput& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const dcp::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const dcp::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 5;
  }
  return 0;
}

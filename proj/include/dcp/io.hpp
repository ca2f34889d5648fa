#pragma once

// Serialization of sweeps and single-point evaluations.
//
// CSV layout: '#' metadata lines (kind, axis, fixed coordinate, physical
// parameters, grid, column names) followed by one comma-separated data
// row per included grid point, columns
//
//   t,d,a,E_d,E_b,E_p,F_d,F_b,F_p,relF
//
// Grid points rejected near the light cone stay in place as
// "# excluded a=... t=... d=..." comment lines, so downstream plotting
// tools skip them while the file still records the full grid.
//
// Numbers are written with std::to_chars shortest round-trip formatting
// and parsed with std::from_chars: a parse-serialize cycle reproduces
// the file byte for byte, and repeated runs of the same sweep produce
// identical files.  Files are written to a temporary sibling and
// renamed into place so readers never observe a partial file.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "dcp/errors.hpp"
#include "dcp/scan.hpp"
#include "json.hpp"

namespace dcp {

inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw IoError("malformed number: '" + std::string(s) + "'");
  }
  return v;
}

namespace detail {

inline constexpr const char* kCsvColumns =
    "t,d,a,E_d,E_b,E_p,F_d,F_b,F_p,relF";

inline std::string params_line(const PhysicalParams& p) {
  return "# k0=" + format_double(p.k0) + " k0p=" + format_double(p.k0p) +
         " mu=" + format_double(p.mu) + " c=" + format_double(p.c) +
         " lightcone_eps=" + format_double(p.lightcone_eps);
}

inline std::string csv_row(const SweepRow& r) {
  const Observables& o = r.obs;
  return format_double(r.t) + "," + format_double(r.d) + "," +
         format_double(r.a) + "," + format_double(o.e_dressed) + "," +
         format_double(o.e_bare) + "," + format_double(o.e_partial) + "," +
         format_double(o.f_dressed) + "," + format_double(o.f_bare) + "," +
         format_double(o.f_partial) + "," + format_double(o.rel_force);
}

// splits on single spaces; tokens are "key=value" pairs
inline double token_value(std::string_view line, std::string_view key) {
  const std::string needle = std::string(key) + "=";
  std::size_t pos = line.find(needle);
  if (pos == std::string_view::npos ||
      (pos > 0 && line[pos - 1] != ' ')) {
    throw IoError("missing '" + std::string(key) + "=' in: " +
                  std::string(line));
  }
  pos += needle.size();
  std::size_t end = line.find(' ', pos);
  if (end == std::string_view::npos) end = line.size();
  return parse_double(line.substr(pos, end - pos));
}

}  // namespace detail

inline std::string sweep_to_csv(const SweepTable& tb) {
  std::string out;
  out += "# casimir-polder transient sweep v1\n";
  out += std::string("# axis=") +
         (tb.axis == SweepAxis::kTime ? "time" : "distance") + "\n";
  out += std::string("# ") + (tb.axis == SweepAxis::kTime ? "d" : "t") + "=" +
         format_double(tb.fixed) + "\n";
  out += detail::params_line(tb.params) + "\n";
  out += "# grid start=" + format_double(tb.grid.start) +
         " stop=" + format_double(tb.grid.stop) +
         " steps=" + std::to_string(tb.grid.steps) + "\n";
  out += std::string("# columns ") + detail::kCsvColumns + "\n";
  for (const auto& r : tb.rows) {
    if (r.excluded) {
      out += "# excluded a=" + format_double(r.a) +
             " t=" + format_double(r.t) + " d=" + format_double(r.d) + "\n";
    } else {
      out += detail::csv_row(r) + "\n";
    }
  }
  return out;
}

inline SweepTable sweep_from_csv(const std::string& text) {
  SweepTable tb;
  bool saw_axis = false, saw_fixed = false, saw_params = false,
       saw_grid = false;
  std::size_t index = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    const std::string_view line(text.data() + pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;

    if (line[0] == '#') {
      if (line.rfind("# axis=", 0) == 0) {
        const auto v = line.substr(7);
        if (v == "time") {
          tb.axis = SweepAxis::kTime;
        } else if (v == "distance") {
          tb.axis = SweepAxis::kDistance;
        } else {
          throw IoError("unknown axis '" + std::string(v) + "'");
        }
        saw_axis = true;
      } else if (line.rfind("# d=", 0) == 0 || line.rfind("# t=", 0) == 0) {
        tb.fixed = parse_double(line.substr(4));
        saw_fixed = true;
      } else if (line.rfind("# k0=", 0) == 0) {
        tb.params.k0 = detail::token_value(line, "k0");
        tb.params.k0p = detail::token_value(line, "k0p");
        tb.params.mu = detail::token_value(line, "mu");
        tb.params.c = detail::token_value(line, "c");
        tb.params.lightcone_eps = detail::token_value(line, "lightcone_eps");
        saw_params = true;
      } else if (line.rfind("# grid ", 0) == 0) {
        tb.grid.start = detail::token_value(line, "start");
        tb.grid.stop = detail::token_value(line, "stop");
        tb.grid.steps =
            static_cast<std::size_t>(detail::token_value(line, "steps"));
        saw_grid = true;
      } else if (line.rfind("# excluded ", 0) == 0) {
        SweepRow r;
        r.index = index++;
        r.a = detail::token_value(line, "a");
        r.t = detail::token_value(line, "t");
        r.d = detail::token_value(line, "d");
        r.excluded = true;
        r.reason = "light-cone proximity";
        tb.rows.push_back(std::move(r));
      }
      // other comment lines (kind banner, columns) carry no state
      continue;
    }

    std::vector<double> vals;
    vals.reserve(10);
    std::size_t field = 0;
    while (field <= line.size()) {
      std::size_t comma = line.find(',', field);
      if (comma == std::string_view::npos) comma = line.size();
      vals.push_back(parse_double(line.substr(field, comma - field)));
      field = comma + 1;
    }
    if (vals.size() != 10) {
      throw IoError("expected 10 columns on line " + std::to_string(line_no));
    }
    SweepRow r;
    r.index = index++;
    r.t = vals[0];
    r.d = vals[1];
    r.a = vals[2];
    r.obs.a = vals[2];
    r.obs.e_dressed = vals[3];
    r.obs.e_bare = vals[4];
    r.obs.e_partial = vals[5];
    r.obs.f_dressed = vals[6];
    r.obs.f_bare = vals[7];
    r.obs.f_partial = vals[8];
    r.obs.rel_force = vals[9];
    tb.rows.push_back(std::move(r));
  }

  if (!saw_axis || !saw_fixed || !saw_params || !saw_grid) {
    throw IoError("incomplete sweep metadata");
  }
  return tb;
}

inline nlohmann::ordered_json sweep_to_json_value(const SweepTable& tb) {
  nlohmann::ordered_json j;
  j["meta"]["kind"] = "casimir-polder transient sweep";
  j["meta"]["version"] = 1;
  j["meta"]["axis"] = tb.axis == SweepAxis::kTime ? "time" : "distance";
  j["meta"][tb.axis == SweepAxis::kTime ? "d" : "t"] = tb.fixed;
  j["meta"]["params"] = {{"k0", tb.params.k0},
                         {"k0p", tb.params.k0p},
                         {"mu", tb.params.mu},
                         {"c", tb.params.c},
                         {"lightcone_eps", tb.params.lightcone_eps}};
  j["meta"]["grid"] = {{"start", tb.grid.start},
                       {"stop", tb.grid.stop},
                       {"steps", tb.grid.steps}};
  j["meta"]["columns"] = {"t", "d",   "a",   "E_d", "E_b",
                          "E_p", "F_d", "F_b", "F_p", "relF"};
  j["rows"] = nlohmann::ordered_json::array();
  j["excluded"] = nlohmann::ordered_json::array();
  for (const auto& r : tb.rows) {
    if (r.excluded) {
      j["excluded"].push_back({{"index", r.index},
                               {"t", r.t},
                               {"d", r.d},
                               {"a", r.a},
                               {"reason", r.reason}});
    } else {
      const Observables& o = r.obs;
      j["rows"].push_back({r.t, r.d, r.a, o.e_dressed, o.e_bare, o.e_partial,
                           o.f_dressed, o.f_bare, o.f_partial, o.rel_force});
    }
  }
  return j;
}

inline std::string sweep_to_json(const SweepTable& tb) {
  return sweep_to_json_value(tb).dump(2) + "\n";
}

inline std::string point_to_csv(const PhysicalParams& p, const SweepRow& r) {
  std::string out;
  out += "# casimir-polder transient point v1\n";
  out += detail::params_line(p) + "\n";
  out += "# x0=" + format_double(2.0 * p.k0 * r.d) +
         " x0p=" + format_double(2.0 * p.k0p * r.d) + "\n";
  out += std::string("# columns ") + detail::kCsvColumns + "\n";
  out += detail::csv_row(r) + "\n";
  return out;
}

inline std::string point_to_json(const PhysicalParams& p, const SweepRow& r) {
  nlohmann::ordered_json j;
  j["meta"]["kind"] = "casimir-polder transient point";
  j["meta"]["version"] = 1;
  j["meta"]["params"] = {{"k0", p.k0},
                         {"k0p", p.k0p},
                         {"mu", p.mu},
                         {"c", p.c},
                         {"lightcone_eps", p.lightcone_eps}};
  const Observables& o = r.obs;
  j["point"] = {{"t", r.t},
                {"d", r.d},
                {"a", r.a},
                {"x0", 2.0 * p.k0 * r.d},
                {"x0p", 2.0 * p.k0p * r.d},
                {"E_d", o.e_dressed},
                {"E_b", o.e_bare},
                {"E_p", o.e_partial},
                {"F_d", o.f_dressed},
                {"F_b", o.f_bare},
                {"F_p", o.f_partial},
                {"relF", o.rel_force}};
  return j.dump(2) + "\n";
}

// Gnuplot script for the canonical figure data.  Columns are 1-indexed
// in gnuplot: 1 = t, 7..9 = F_d, F_b, F_p, 10 = relF.  Gnuplot skips
// the '#' comment lines in the CSVs automatically.
inline std::string figures_script() {
  return "set datafile separator \",\"\n"
         "set terminal pngcairo size 900,600\n"
         "set grid\n"
         "set xlabel \"t\"\n"
         "\n"
         "set output \"fig1.png\"\n"
         "set ylabel \"force\"\n"
         "plot \"fig1.csv\" using 1:8 with lines title \"bare\", \\\n"
         "     \"fig1.csv\" using 1:9 with lines title \"partial\", \\\n"
         "     \"fig1.csv\" using 1:7 with lines dashtype 2 title \"dressed\"\n"
         "\n"
         "set output \"fig2.png\"\n"
         "plot \"fig2.csv\" using 1:8 with lines title \"bare\", \\\n"
         "     \"fig2.csv\" using 1:9 with lines title \"partial\", \\\n"
         "     \"fig2.csv\" using 1:7 with lines dashtype 2 title \"dressed\"\n"
         "\n"
         "set output \"fig3.png\"\n"
         "set ylabel \"(F_p - F_d) / F_d\"\n"
         "plot \"fig3.csv\" using 1:10 with lines title \"relative difference\"\n";
}

// write-then-rename so a crash never leaves a truncated file behind
inline void write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + tmp + "' for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) throw IoError("write to '" + tmp + "' failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw IoError("cannot move '" + tmp + "' to '" + path + "'");
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for reading");
  std::string content((std::istreambuf_iterator<char>(f)),
                      std::istreambuf_iterator<char>());
  if (f.bad()) throw IoError("read from '" + path + "' failed");
  return content;
}

inline SweepTable read_sweep_csv(const std::string& path) {
  return sweep_from_csv(read_file(path));
}

}  // namespace dcp

#pragma once

// Command layer behind the `adsosc` binary: configuration, the five commands,
// and JSON/CSV serialization of their reports. Everything writes to streams so
// tests can drive it without spawning a process.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adsosc/checks.hpp"
#include "adsosc/errors.hpp"
#include "adsosc/fdoracle.hpp"
#include "adsosc/model1d.hpp"
#include "adsosc/model3d.hpp"
#include "adsosc/params.hpp"
#include "adsosc/verify.hpp"

namespace adsosc::cli {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

enum ExitCode : int { ok = 0, check_failed = 1, config_error = 2, pole_proximity = 3 };

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::string model = "oned";
  std::optional<double> N;
  std::optional<double> M;
  std::optional<double> omega, c, hbar;
  double xi = 0.0;
  int l = 0;
  std::optional<int> n;
  int n_max = 4;
  std::optional<double> E;
  std::vector<double> points;
  int n_terms = 60;
  double pole_radius = 1e-9;
  std::optional<double> u_min, u_max;
  std::optional<int> grid_n;
  std::string format = "json";
  std::string out;
  bool reproducible = false;
  std::string suite = "all";
  double tolerance_scale = 1.0;

  bool threed() const { return model == "threed"; }

  /// Physical parameter tuple. N fixes M = N hbar omega / c^2 in whatever
  /// units omega, c, hbar are given (all 1 unless overridden).
  RawParams raw() const {
    RawParams p;
    p.omega = omega.value_or(1.0);
    p.c = c.value_or(1.0);
    p.hbar = hbar.value_or(1.0);
    p.xi = xi;
    p.mass = N ? *N * p.hbar * p.omega / (p.c * p.c) : M.value_or(0.0);
    return p;
  }

  void validate() const {
    static const std::vector<std::string> commands = {"spectrum", "wavefn", "green", "oracle", "verify"};
    if (std::find(commands.begin(), commands.end(), command) == commands.end())
      throw ConfigError("unknown command '" + command + "'");
    if (model != "oned" && model != "threed") throw ConfigError("model must be oned or threed");
    if (format != "json" && format != "csv") throw ConfigError("format must be json or csv");
    if (command == "verify") {
      const auto& names = checks::suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end())
        throw ConfigError("unknown suite '" + suite + "'");
      if (!(tolerance_scale > 0 && std::isfinite(tolerance_scale)))
        throw ConfigError("tolerance-scale must be finite and > 0");
      return;
    }
    if (N.has_value() == M.has_value()) throw ConfigError("exactly one of N or M must be given");
    if (N && !(*N >= 0)) throw ConfigError("N must be >= 0");
    if (l < 0) throw ConfigError("l must be >= 0");
    if (l != 0 && !threed()) throw ConfigError("l applies to the threed model only");
    if (n && *n < 0) throw ConfigError("n must be >= 0");
    if (n_max < 0) throw ConfigError("n-max must be >= 0");
    if (n_terms < 1) throw ConfigError("n-terms must be >= 1");
    if (!(pole_radius >= 0)) throw ConfigError("pole-radius must be >= 0");
    // model parameter checks (xi bound, positivity of scales)
    if (threed()) threed::validate_channel(raw(), l);
    else oned::validate(raw());
    if (command == "wavefn" && !n) throw ConfigError("wavefn needs --n");
    if (command == "green") {
      if (!E) throw ConfigError("green needs --E");
      if (points.size() != 2) throw ConfigError("green needs --points a,b");
    }
    if (command == "oracle" && n_max > 40) throw ConfigError("oracle: n-max must be <= 40");
  }

  json echo() const {
    auto opt = [](const auto& v) -> json { return v ? json(*v) : json(nullptr); };
    json j;
    j["command"] = command;
    j["model"] = model;
    j["N"] = opt(N);
    j["M"] = opt(M);
    j["omega"] = opt(omega);
    j["c"] = opt(c);
    j["hbar"] = opt(hbar);
    j["xi"] = xi;
    j["l"] = l;
    j["n"] = opt(n);
    j["n_max"] = n_max;
    j["E"] = opt(E);
    j["points"] = points;
    j["n_terms"] = n_terms;
    j["pole_radius"] = pole_radius;
    j["u_min"] = opt(u_min);
    j["u_max"] = opt(u_max);
    j["grid_n"] = opt(grid_n);
    j["format"] = format;
    j["suite"] = suite;
    j["tolerance_scale"] = tolerance_scale;
    return j;
  }
};

struct EvalReport {
  json config;
  json results = json::array();
  json diagnostics = json::object();
  std::optional<std::string> timestamp;
  int exit_code = ok;
  std::vector<std::string> columns;  // CSV column order

  json to_json() const {
    json j;
    j["schema_version"] = schema_version;
    j["config"] = config;
    j["results"] = results;
    j["diagnostics"] = diagnostics;
    j["exit_code"] = exit_code;
    if (timestamp) j["generated_at"] = *timestamp;
    return j;
  }
};

// ---------------------------------------------------------------- serialization

/// 17 significant digits; integral values keep a trailing ".0" so they re-parse as floats.
inline std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s = buf;
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

namespace detail {

inline void write_json(std::ostream& os, const json& j, int indent) {
  const std::string pad(std::size_t(indent + 2), ' '), close(std::size_t(indent), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) { os << "{}"; return; }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: keys already sorted
        if (!first) os << ",\n";
        first = false;
        os << pad << json(it.key()).dump() << ": ";
        write_json(os, it.value(), indent + 2);
      }
      os << "\n" << close << "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) { os << "[]"; return; }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        write_json(os, j[i], indent + 2);
      }
      os << "\n" << close << "]";
      return;
    }
    case json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

inline std::string csv_cell(const json& v) {
  switch (v.type()) {
    case json::value_t::null: return "";
    case json::value_t::number_float: {
      const double d = v.get<double>();
      return std::isfinite(d) ? format_double(d) : "nan";
    }
    case json::value_t::boolean: return v.get<bool>() ? "true" : "false";
    case json::value_t::string: {
      const auto s = v.get<std::string>();
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    }
    default: return v.dump();
  }
}

}  // namespace detail

inline std::string to_json_text(const json& j) {
  std::ostringstream os;
  detail::write_json(os, j, 0);
  os << "\n";
  return os.str();
}

inline std::string to_csv_text(const EvalReport& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
  os << "\n";
  for (const auto& row : r.results) {
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
      const auto& key = r.columns[i];
      os << (i ? "," : "") << (row.contains(key) ? detail::csv_cell(row[key]) : "");
    }
    os << "\n";
  }
  return os.str();
}

inline std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Fixed CSV column order per command (also printed by --help).
inline std::vector<std::string> csv_columns(const std::string& command) {
  if (command == "spectrum") return {"model", "n", "l", "energy_hbar_omega", "energy"};
  if (command == "wavefn") return {"model", "n", "l", "x", "psi", "parity", "norm"};
  if (command == "green")
    return {"model", "l", "E", "x2", "x1", "closed", "spectral", "rel_diff", "fitted_constant", "tail_estimate"};
  if (command == "oracle")
    return {"model", "n", "l", "energy_closed", "energy_oracle", "abs_diff", "coarse", "fine"};
  if (command == "verify") return {"suite", "name", "passed", "measured", "threshold", "detail"};
  return {};
}

inline std::string csv_help() {
  std::string s = "CSV columns (fixed order):\n";
  for (const char* c : {"spectrum", "wavefn", "green", "oracle", "verify"}) {
    s += std::string("  ") + c + ": ";
    const auto cols = csv_columns(c);
    for (std::size_t i = 0; i < cols.size(); ++i) s += (i ? "," : "") + cols[i];
    s += "\n";
  }
  s += "  l is 0 and parity is blank where not applicable; energies in hbar*omega\n"
       "  unless named 'energy'/'E' (physical units); lengths are physical.\n"
       "Exit codes: 0 ok, 1 verification failure, 2 config error, 3 pole proximity.\n";
  return s;
}

// ---------------------------------------------------------------- commands

inline EvalReport make_report(const RunConfig& cfg) {
  EvalReport r;
  r.config = cfg.echo();
  r.columns = csv_columns(cfg.command);
  if (!cfg.reproducible) r.timestamp = utc_timestamp();
  return r;
}

inline EvalReport cmd_spectrum(const RunConfig& cfg) {
  auto r = make_report(cfg);
  const auto raw = cfg.raw();
  double unit = 1.0;
  for (int n = 0; n <= cfg.n_max; ++n) {
    json row;
    row["model"] = cfg.model;
    row["n"] = n;
    row["l"] = cfg.l;
    double e;
    if (cfg.threed()) {
      const auto ch = threed::validate_channel(raw, cfg.l);
      e = threed::energy(ch, n);
      unit = ch.scales.energy_unit();
    } else {
      const auto p = oned::validate(raw);
      e = oned::energy(p, n);
      unit = p.scales.energy_unit();
    }
    row["energy"] = e;
    row["energy_hbar_omega"] = e / unit;
    r.results.push_back(row);
  }
  r.diagnostics["energy_unit"] = unit;
  return r;
}

inline std::vector<double> default_points(bool radial) {
  std::vector<double> pts;
  for (int i = radial ? 0 : -16; i <= 16; ++i) pts.push_back(0.25 * i);
  return pts;
}

inline EvalReport cmd_wavefn(const RunConfig& cfg) {
  auto r = make_report(cfg);
  const int n = *cfg.n;
  const auto raw = cfg.raw();
  std::vector<double> pts = cfg.points;
  double norm = 0.0, norm_err = 0.0;
  json parity = nullptr;
  std::function<double(double)> psi;
  double L = 1.0;
  if (cfg.threed()) {
    const auto ch = threed::validate_channel(raw, cfg.l);
    L = ch.length();
    psi = [ch, n](double x) { return threed::radial_wavefn(ch, n, x); };
    for (double x : pts)
      if (x < 0) throw DomainError("wavefn: r samples must be >= 0");
    const auto q = verify::integrate_half_line([&](double x) { return psi(x) * psi(x); }, L);
    norm = q.value, norm_err = q.error_estimate;
  } else {
    const auto p = oned::validate(raw);
    L = p.length();
    psi = [p, n](double x) { return oned::wavefn_legendre(p, n, x); };
    const auto q = verify::integrate_real_line([&](double x) { return psi(x) * psi(x); }, L);
    norm = q.value, norm_err = q.error_estimate;
    // measured at an off-node probe, not assumed
    const double probe = 0.37 * L;
    parity = psi(-probe) * psi(probe) >= 0 ? 1 : -1;
  }
  if (pts.empty()) {
    pts = default_points(cfg.threed());
    for (double& x : pts) x *= L;
  }
  for (double x : pts) {
    json row;
    row["model"] = cfg.model;
    row["n"] = n;
    row["l"] = cfg.l;
    row["x"] = x;
    row["psi"] = psi(x);
    row["parity"] = parity;
    row["norm"] = norm;
    r.results.push_back(row);
  }
  r.diagnostics["norm"] = norm;
  r.diagnostics["norm_error_estimate"] = norm_err;
  r.diagnostics["norm_deviation"] = std::abs(norm - 1.0);
  r.diagnostics["parity"] = parity;
  r.diagnostics["measure"] = cfg.threed() ? "dr (reduced radial function)" : "dx";
  return r;
}

inline EvalReport cmd_green(const RunConfig& cfg) {
  auto r = make_report(cfg);
  const auto raw = cfg.raw();
  const double a = cfg.points[0], b = cfg.points[1];
  oned::GreenOptions opt;
  opt.pole_radius = cfg.pole_radius;
  double c0 = 0.0, worst = 0.0, spread = 0.0;
  bool first = true;
  for (double E : {*cfg.E, -*cfg.E}) {
    double closed;
    oned::SpectralSum spec;
    if (cfg.threed()) {
      const auto ch = threed::validate_channel(raw, cfg.l);
      closed = threed::radial_green_closed(ch, E, a, b, opt);
      spec = threed::radial_green_spectral(ch, E, a, b, cfg.n_terms, opt);
    } else {
      const auto p = oned::validate(raw);
      closed = oned::green_closed(p, E, a, b, opt);
      spec = oned::green_spectral(p, E, a, b, cfg.n_terms, opt);
    }
    const double rel = std::abs(closed - spec.value) / std::abs(closed);
    const double fitted = closed / spec.value;
    if (first) c0 = fitted;
    else spread = std::abs(fitted - c0) / std::abs(c0);
    first = false;
    worst = std::max(worst, rel);
    json row;
    row["model"] = cfg.model;
    row["l"] = cfg.l;
    row["E"] = E;
    row["x2"] = a;
    row["x1"] = b;
    row["closed"] = closed;
    row["spectral"] = spec.value;
    row["rel_diff"] = rel;
    row["fitted_constant"] = fitted;
    row["tail_estimate"] = spec.tail_estimate;
    r.results.push_back(row);
  }
  r.diagnostics["n_terms"] = cfg.n_terms;
  r.diagnostics["fitted_constant"] = c0;
  r.diagnostics["expected_constant"] = 1.0;
  r.diagnostics["constant_spread"] = spread;
  r.diagnostics["max_rel_diff"] = worst;
  r.diagnostics["pole_radius"] = cfg.pole_radius;
  return r;
}

inline EvalReport cmd_oracle(const RunConfig& cfg) {
  auto r = make_report(cfg);
  const auto raw = cfg.raw();
  fdoracle::OracleOptions opt;
  double worst = 0.0;
  json grid_used = json::object();
  for (int n = 0; n <= cfg.n_max; ++n) {
    double closed, unit;
    fdoracle::EffectivePotential pot;
    std::function<fdoracle::OracleResult(const fdoracle::GridSpec&)> solve;
    if (cfg.threed()) {
      const auto ch = threed::validate_channel(raw, cfg.l);
      closed = threed::energy(ch, n);
      unit = ch.scales.energy_unit();
      pot = fdoracle::effective_potential_3d(ch, 0.0);
      solve = [ch, n, opt](const fdoracle::GridSpec& g) { return fdoracle::oracle_energy_3d(ch, n, g, opt); };
    } else {
      const auto p = oned::validate(raw);
      closed = oned::energy(p, n);
      unit = p.scales.energy_unit();
      pot = fdoracle::effective_potential_1d(p, 0.0);
      solve = [p, n, opt](const fdoracle::GridSpec& g) { return fdoracle::oracle_energy_1d(p, n, g, opt); };
    }
    auto grid = fdoracle::default_grid(pot);
    if (cfg.u_min) grid.u_min = *cfg.u_min;
    if (cfg.u_max) grid.u_max = *cfg.u_max;
    if (cfg.grid_n) grid.n_points = *cfg.grid_n;
    const auto res = solve(grid);
    const double diff = std::abs(res.energy - closed) / unit;
    worst = std::max(worst, diff);
    json row;
    row["model"] = cfg.model;
    row["n"] = n;
    row["l"] = cfg.l;
    row["energy_closed"] = closed / unit;
    row["energy_oracle"] = res.energy / unit;
    row["abs_diff"] = diff;
    row["coarse"] = res.coarse;
    row["fine"] = res.fine;
    r.results.push_back(row);
    grid_used = {{"u_min", grid.u_min}, {"u_max", grid.u_max}, {"n_points", grid.n_points}};
  }
  r.diagnostics["bisection_tolerance"] = opt.tolerance;
  r.diagnostics["richardson"] = opt.richardson;
  r.diagnostics["grid"] = grid_used;
  r.diagnostics["max_abs_diff"] = worst;
  return r;
}

inline EvalReport cmd_verify(const RunConfig& cfg) {
  auto r = make_report(cfg);
  int failed = 0;
  const auto& names = checks::suite_names();
  for (const auto& suite : names) {
    if (suite == "all" || (cfg.suite != "all" && suite != cfg.suite)) continue;
    for (const auto& c : checks::run_suite(suite, cfg.tolerance_scale)) {
      json row;
      row["suite"] = suite;
      row["name"] = c.name;
      row["passed"] = c.passed;
      row["measured"] = c.measured;
      row["threshold"] = c.threshold;
      row["detail"] = c.detail;
      r.results.push_back(row);
      if (!c.passed) ++failed;
    }
  }
  r.diagnostics["tolerance_scale"] = cfg.tolerance_scale;
  r.diagnostics["checks"] = int(r.results.size());
  r.diagnostics["failed"] = failed;
  r.exit_code = failed ? check_failed : ok;
  return r;
}

inline EvalReport dispatch(const RunConfig& cfg) {
  if (cfg.command == "spectrum") return cmd_spectrum(cfg);
  if (cfg.command == "wavefn") return cmd_wavefn(cfg);
  if (cfg.command == "green") return cmd_green(cfg);
  if (cfg.command == "oracle") return cmd_oracle(cfg);
  return cmd_verify(cfg);
}

inline json error_record(const std::string& command, int code, const std::string& kind,
                         const std::string& message) {
  json j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  j["exit_code"] = code;
  j["error"] = {{"kind", kind}, {"message", message}};
  return j;
}

namespace detail {

inline int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return ok;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "adsosc: cannot open output file " << path << "\n";
    out << to_json_text(error_record("", config_error, "config", "cannot open output file " + path));
    return config_error;
  }
  f << text;
  return ok;
}

}  // namespace detail

/// Run a validated or unvalidated config; writes the report (or an error
/// record) and returns the process exit code.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  json failure;
  int code = ok;
  try {
    cfg.validate();
    const auto report = dispatch(cfg);
    const std::string text = cfg.format == "csv" ? to_csv_text(report) : to_json_text(report.to_json());
    const int io = detail::emit(text, cfg.out, out, err);
    return io != ok ? io : report.exit_code;
  } catch (const PoleProximityError& e) {
    code = pole_proximity;
    failure = error_record(cfg.command, code, "pole_proximity", e.what());
    failure["error"]["nearest_index"] = e.nearest_index();
    failure["error"]["nearest_energy"] = e.nearest_energy();
    failure["error"]["distance_hbar_omega"] = e.distance();
    if (cfg.threed()) failure["error"]["l"] = cfg.l;
  } catch (const ConfigError& e) {
    code = config_error;
    failure = error_record(cfg.command, code, "config", e.what());
  } catch (const ParameterError& e) {
    code = config_error;
    failure = error_record(cfg.command, code, "parameter", e.what());
  } catch (const DomainError& e) {
    code = config_error;
    failure = error_record(cfg.command, code, "domain", e.what());
  } catch (const std::exception& e) {
    code = check_failed;
    failure = error_record(cfg.command, code, "numerical", e.what());
  }
  err << "adsosc: " << failure["error"]["message"].get<std::string>() << "\n";
  const int io = detail::emit(to_json_text(failure), cfg.out, out, err);
  return io != ok ? io : code;
}

inline std::vector<double> parse_points(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t[]"));
    tok.erase(tok.find_last_not_of(" \t[]") + 1);
    if (tok.empty()) continue;
    std::size_t used = 0;
    double x;
    try {
      x = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw ConfigError("points: cannot parse '" + tok + "'");
    }
    if (used != tok.size() || !std::isfinite(x)) throw ConfigError("points: cannot parse '" + tok + "'");
    v.push_back(x);
  }
  return v;
}

/// Full command line entry point used by the binary.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relativistic oscillator in AdS: spectra, wave functions, Green's functions, checks", "adsosc"};
  app.footer(csv_help());
  RunConfig cfg;
  std::vector<std::string> points;  // a config file hands over "a,b" already split
  app.add_option("command", cfg.command, "spectrum | wavefn | green | oracle | verify")->required();
  app.add_option("--model", cfg.model, "oned | threed")->capture_default_str();
  app.add_option("--N", cfg.N, "Mc^2/(hbar omega); excludes --M");
  app.add_option("--M", cfg.M, "mass in physical units; excludes --N");
  app.add_option("--omega", cfg.omega, "oscillator frequency (default 1)");
  app.add_option("--c", cfg.c, "speed of light (default 1)");
  app.add_option("--hbar", cfg.hbar, "Planck constant (default 1)");
  app.add_option("--xi", cfg.xi, "ordering parameter")->capture_default_str();
  app.add_option("--l", cfg.l, "angular momentum (threed)")->capture_default_str();
  app.add_option("--n", cfg.n, "state index (n or n_r)");
  app.add_option("--n-max", cfg.n_max, "highest state index")->capture_default_str();
  app.add_option("--E", cfg.E, "energy, physical units");
  app.add_option("--points", points, "comma-separated lengths: samples, or x2,x1 for green");
  app.add_option("--n-terms", cfg.n_terms, "terms in the spectral sum")->capture_default_str();
  app.add_option("--pole-radius", cfg.pole_radius, "pole proximity radius in hbar*omega")->capture_default_str();
  app.add_option("--u-min", cfg.u_min, "oracle grid lower bound");
  app.add_option("--u-max", cfg.u_max, "oracle grid upper bound");
  app.add_option("--grid-n", cfg.grid_n, "oracle grid interior nodes");
  app.add_option("--format", cfg.format, "json | csv")->capture_default_str();
  app.add_option("--out", cfg.out, "output path (default stdout)");
  app.add_flag("--reproducible", cfg.reproducible, "omit the timestamp");
  app.add_option("--suite", cfg.suite, "verification suite")->capture_default_str();
  app.add_option("--tolerance-scale", cfg.tolerance_scale, "multiply every check threshold")->capture_default_str();
  app.set_config("--config", "", "flat key=value file with the same keys as the flags");
  try {
    app.parse(argc, argv);
    std::string joined;
    for (const auto& p : points) joined += p + ",";
    cfg.points = parse_points(joined);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "adsosc: " << e.what() << "\n";
    out << to_json_text(error_record(cfg.command, config_error, "config", e.what()));
    return config_error;
  } catch (const ConfigError& e) {
    err << "adsosc: " << e.what() << "\n";
    out << to_json_text(error_record(cfg.command, config_error, "config", e.what()));
    return config_error;
  }
  return run(cfg, out, err);
}

}  // namespace adsosc::cli

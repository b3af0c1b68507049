// Copyright 2026 The entcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entcorr/contour.hpp"
#include "entcorr/covariance.hpp"
#include "entcorr/environment.hpp"
#include "entcorr/protocols.hpp"
#include "entcorr/scan_io.hpp"
#include "entcorr/scanner.hpp"

namespace entcorr::cli {

namespace {

constexpr const char* kOutputEnv = "ENTCORR_OUTPUT";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

// Flags shared by every subcommand.
struct PointFlags {
  double tau = 0.0;
  std::optional<double> omega;
  bool at_eb = false;
  double g = 0.0;
  double gp = 0.0;
};

struct Common {
  std::string format = "csv";
  std::string output;
};

void add_point_flags(CLI::App& cmd, PointFlags& flags, bool required) {
  auto* tau = cmd.add_option("--tau", flags.tau, "Beam-splitter transmissivity, in (0, 1)");
  auto* omega = cmd.add_option("--omega", flags.omega, "Thermal variance of each environmental mode");
  auto* at_eb = cmd.add_flag("--at-eb", flags.at_eb, "Set omega to the one-mode EB threshold");
  omega->excludes(at_eb);
  at_eb->excludes(omega);
  cmd.add_option("--g", flags.g, "Correlation g (q quadratures)");
  cmd.add_option("--gp", flags.gp, "Correlation g' (p quadratures)");
  if (required) tau->required();
}

void add_common_flags(CLI::App& cmd, Common& common) {
  cmd.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd.add_option("-o,--output", common.output, "Output path (default: stdout)");
}

void require_tau(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw UsageError("--tau must lie in the open interval (0, 1)");
  }
}

double resolve_omega(const PointFlags& flags) {
  require_tau(flags.tau);
  if (flags.at_eb) return eb_threshold(flags.tau);
  if (!flags.omega) throw UsageError("one of --omega or --at-eb is required");
  if (!(*flags.omega >= 1.0) || !std::isfinite(*flags.omega)) {
    throw UsageError("--omega must be >= 1");
  }
  return *flags.omega;
}

Format parse_format(const std::string& s) { return s == "json" ? Format::Json : Format::Csv; }

// Writes `text` to the requested destination.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open output file '" + path + "'");
  file << text;
  file.close();
  if (!file) throw IoError("failed writing output file '" + path + "'");
}

// Ordered key/value report rendered as CSV (key,value) or a JSON object.
class Report {
 public:
  using Value = std::variant<std::monostate, double, std::string, bool>;

  void add(std::string key, double value) { push(std::move(key), Value{value}); }
  void add(std::string key, bool value) { push(std::move(key), Value{value}); }
  void add(std::string key, std::string value) { push(std::move(key), Value{std::move(value)}); }
  void add(std::string key, std::optional<double> value) {
    push(std::move(key), value ? Value{*value} : Value{});
  }

  std::string render(Format format) const {
    if (format == Format::Json) {
      nlohmann::ordered_json j = nlohmann::ordered_json::object();
      for (const auto& [key, value] : entries_) j[key] = to_json(value);
      return j.dump(1) + "\n";
    }
    std::string text = "key,value\n";
    for (const auto& [key, value] : entries_) text += key + "," + to_text(value) + "\n";
    return text;
  }

 private:
  static std::string to_text(const Value& v) {
    if (const auto* d = std::get_if<double>(&v)) return format_number(*d);
    if (const auto* s = std::get_if<std::string>(&v)) return *s;
    if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    return "";
  }

  static nlohmann::ordered_json to_json(const Value& v) {
    if (const auto* d = std::get_if<double>(&v)) return std::stod(format_number(*d));
    if (const auto* s = std::get_if<std::string>(&v)) return *s;
    if (const auto* b = std::get_if<bool>(&v)) return *b;
    return nullptr;
  }

  void push(std::string key, Value value) { entries_.emplace_back(std::move(key), std::move(value)); }

  std::vector<std::pair<std::string, Value>> entries_;
};

std::string activation_label(double eps) {
  if (eps < distillability_threshold()) return std::string(to_string(Activation::Distillable));
  if (eps < 1.0) return std::string(to_string(Activation::Entangling));
  return std::string(to_string(Activation::None));
}

int cmd_point(const PointFlags& flags, std::optional<double> mu, const Common& common,
              std::ostream& out, std::ostream& err) {
  const double omega = resolve_omega(flags);
  if (mu && !(*mu >= 1.0)) throw UsageError("--mu must be >= 1");
  const auto format = parse_format(common.format);

  Report report;
  report.add("tau", flags.tau);
  report.add("omega", omega);
  report.add("g", flags.g);
  report.add("gp", flags.gp);
  report.add("omega_eb", eb_threshold(flags.tau));
  report.add("omega_eb_mean_photons", eb_threshold_mean_photons(flags.tau));

  const auto bona_fide = bona_fide_check(omega, flags.g, flags.gp);
  report.add("bona_fide", bona_fide.physical());
  if (!bona_fide) {
    report.add("violated_condition", std::string(describe(*bona_fide.violated)));
    report.add("env_class", std::string(to_string(EnvClass::Forbidden)));
    emit(report.render(format), common.output, out);
    err << "error: environment is not bona fide (" << describe(*bona_fide.violated) << ")\n";
    return kDomain;
  }

  const auto env_class = classify_environment(omega, flags.g, flags.gp);
  const EnvironmentParams env(flags.tau, omega, flags.g, flags.gp);
  const double direct_eps = direct_eps_asymptotic(env);
  const double swap_eps = swap_eps_asymptotic(env);

  report.add("env_class", std::string(to_string(env_class.env_class)));
  report.add("env_pts", env_class.env_pts);
  report.add("direct_eps", direct_eps);
  report.add("direct_log_negativity", log_negativity(direct_eps));
  report.add("direct_coherent_info", coherent_info_asymptotic(direct_eps));
  report.add("direct_activation", activation_label(direct_eps));
  report.add("swap_eps", swap_eps);
  report.add("swap_log_negativity", log_negativity(swap_eps));
  report.add("swap_coherent_info", coherent_info_asymptotic(swap_eps));
  report.add("swap_activation", activation_label(swap_eps));

  if (mu) {
    const auto direct = run_direct(*mu, env);
    const auto swap = run_swap(*mu, env);
    report.add("mu", *mu);
    report.add("direct_eps_finite", direct.report.pts_min);
    report.add("direct_eps_rel_error", std::abs(direct.report.pts_min - direct_eps) / direct_eps);
    report.add("direct_coherent_info_finite", direct.report.coherent_info);
    report.add("swap_eps_finite", swap.report.pts_min);
    report.add("swap_eps_rel_error", std::abs(swap.report.pts_min - swap_eps) / swap_eps);
    report.add("swap_coherent_info_finite", swap.report.coherent_info);
  }

  emit(report.render(format), common.output, out);
  return kOk;
}

struct ScanFlags {
  std::string protocol = "direct";
  std::optional<double> g_min, g_max, gp_min, gp_max;
  std::size_t resolution = 201;
  std::size_t threads = 1;
  std::string contours;
};

std::string contours_csv(const std::vector<Contour>& contours) {
  std::string text = "level,contour,closed,g,gp\n";
  for (std::size_t i = 0; i < contours.size(); ++i) {
    const auto& c = contours[i];
    for (const auto& p : c.points) {
      text += format_number(c.level) + "," + std::to_string(i) + "," + (c.closed ? "true" : "false") +
              "," + format_number(p.g) + "," + format_number(p.gp) + "\n";
    }
  }
  return text;
}

int cmd_scan(const PointFlags& point, const ScanFlags& flags, const Common& common, std::ostream& out) {
  const double omega = resolve_omega(point);
  const auto protocol = parse_protocol(flags.protocol);
  if (!protocol) throw UsageError("--protocol must be one of direct, swap, env");
  if (flags.resolution < 2) throw UsageError("--resolution must be >= 2");
  if (flags.threads < 1) throw UsageError("--threads must be >= 1");

  const OmegaMode mode = point.at_eb ? OmegaMode{AtEbThreshold{}} : OmegaMode{FixedOmega{omega}};
  auto spec = ScanSpec::standard(point.tau, *protocol, flags.resolution, mode);
  if (flags.g_min) spec.g_range.lo = *flags.g_min;
  if (flags.g_max) spec.g_range.hi = *flags.g_max;
  if (flags.gp_min) spec.gp_range.lo = *flags.gp_min;
  if (flags.gp_max) spec.gp_range.hi = *flags.gp_max;
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  const auto grid = scan(spec, flags.threads);
  std::string text;
  if (parse_format(common.format) == Format::Json) {
    text = scan_to_json(grid);
  } else {
    std::ostringstream csv;
    write_scan_csv(grid, csv);
    text = csv.str();
  }

  std::string path = common.output;
  if (path.empty()) {
    if (const char* env = std::getenv(kOutputEnv); env != nullptr) path = env;
  }
  emit(text, path, out);
  if (!flags.contours.empty()) {
    emit(contours_csv(boundary_curves(grid)), flags.contours, out);
  }
  return kOk;
}

int cmd_converge(const PointFlags& point, const std::string& protocol_name,
                 const std::vector<double>& mus, const Common& common, std::ostream& out,
                 std::ostream& err) {
  const double omega = resolve_omega(point);
  const auto protocol = parse_protocol(protocol_name);
  if (!protocol || *protocol == Protocol::EnvironmentOnly) {
    throw UsageError("--protocol must be direct or swap");
  }
  for (double mu : mus) {
    if (!(mu >= 1.0)) throw UsageError("--mu values must be >= 1");
  }
  const auto bona_fide = bona_fide_check(omega, point.g, point.gp);
  if (!bona_fide) {
    err << "error: environment is not bona fide (" << describe(*bona_fide.violated) << ")\n";
    return kDomain;
  }
  const EnvironmentParams env(point.tau, omega, point.g, point.gp);
  const bool direct = *protocol == Protocol::Direct;
  const double asymptotic = direct ? direct_eps_asymptotic(env) : swap_eps_asymptotic(env);

  struct Row {
    double mu, finite, rel_error;
  };
  std::vector<Row> rows;
  for (double mu : mus) {
    const auto result = direct ? run_direct(mu, env) : run_swap(mu, env);
    const double finite = result.report.pts_min;
    rows.push_back({mu, finite, std::abs(finite - asymptotic) / asymptotic});
  }

  std::string text;
  if (parse_format(common.format) == Format::Json) {
    nlohmann::ordered_json j;
    j["tau"] = std::stod(format_number(point.tau));
    j["omega"] = std::stod(format_number(omega));
    j["g"] = std::stod(format_number(point.g));
    j["gp"] = std::stod(format_number(point.gp));
    j["protocol"] = to_string(*protocol);
    j["eps_asymptotic"] = std::stod(format_number(asymptotic));
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json row;
      row["mu"] = std::stod(format_number(r.mu));
      row["eps_finite"] = std::stod(format_number(r.finite));
      row["eps_asymptotic"] = std::stod(format_number(asymptotic));
      row["rel_error"] = std::stod(format_number(r.rel_error));
      arr.push_back(std::move(row));
    }
    j["rows"] = std::move(arr);
    text = j.dump(1) + "\n";
  } else {
    text = "mu,eps_finite,eps_asymptotic,rel_error\n";
    for (const auto& r : rows) {
      text += format_number(r.mu) + "," + format_number(r.finite) + "," + format_number(asymptotic) +
              "," + format_number(r.rel_error) + "\n";
    }
  }
  emit(text, common.output, out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement distribution through correlated Gaussian environments", "entcorr"};
  app.require_subcommand(1);

  PointFlags point_flags;
  std::optional<double> point_mu;
  Common point_common;
  auto* point = app.add_subcommand("point", "Classify one environment and evaluate both protocols");
  add_point_flags(*point, point_flags, true);
  point->add_option("--mu", point_mu, "Also run the finite-mu simulations at this EPR variance");
  add_common_flags(*point, point_common);

  PointFlags scan_point;
  ScanFlags scan_flags;
  Common scan_common;
  auto* scan_cmd = app.add_subcommand("scan", "Rasterize the correlation plane (g, g')");
  add_point_flags(*scan_cmd, scan_point, true);
  scan_cmd->add_option("--protocol", scan_flags.protocol, "direct | swap | env");
  scan_cmd->add_option("--g-min", scan_flags.g_min, "Lower g bound (default -omega)");
  scan_cmd->add_option("--g-max", scan_flags.g_max, "Upper g bound (default omega)");
  scan_cmd->add_option("--gp-min", scan_flags.gp_min, "Lower g' bound (default -omega)");
  scan_cmd->add_option("--gp-max", scan_flags.gp_max, "Upper g' bound (default omega)");
  scan_cmd->add_option("--resolution", scan_flags.resolution, "Cells per axis (>= 2)");
  scan_cmd->add_option("--threads", scan_flags.threads, "Worker threads");
  scan_cmd->add_option("--contours", scan_flags.contours,
                       "Also write eps = 1 and eps = 1/e contours (CSV) to this path");
  add_common_flags(*scan_cmd, scan_common);

  PointFlags conv_point{0.75, std::nullopt, false, 4.0, -4.0};
  std::string conv_protocol = "direct";
  std::vector<double> conv_mus{1e2, 1e4, 1e6};
  Common conv_common;
  auto* converge = app.add_subcommand("converge", "Finite-mu PTS eigenvalue against its large-mu limit");
  add_point_flags(*converge, conv_point, false);
  converge->add_option("--protocol", conv_protocol, "direct | swap");
  converge->add_option("--mu", conv_mus, "EPR variances to evaluate")->expected(1, -1);
  add_common_flags(*converge, conv_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (point->parsed()) return cmd_point(point_flags, point_mu, point_common, out, err);
    if (scan_cmd->parsed()) return cmd_scan(scan_point, scan_flags, scan_common, out);
    if (converge->parsed()) {
      // The default evaluation point sits at the EB threshold.
      if (!conv_point.omega) conv_point.at_eb = true;
      return cmd_converge(conv_point, conv_protocol, conv_mus, conv_common, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}

}  // namespace entcorr::cli

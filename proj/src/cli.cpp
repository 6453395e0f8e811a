#include "eprdep/cli.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "eprdep/bellagg.hpp"
#include "eprdep/counter_rng.hpp"
#include "eprdep/grid_scan.hpp"
#include "eprdep/infodep.hpp"
#include "eprdep/mcharness.hpp"
#include "eprdep/report_io.hpp"

namespace eprdep {

namespace {

/// Usage or domain problem; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::array<const char*, 4> kAngleNames{"mu1", "mu2", "nu1", "nu2"};

double parse_named_angle(const std::string& name, const std::string& text) {
  try {
    const double v = parse_angle_expression(text);
    static_cast<void>(Angle{v});
    return v;
  } catch (const std::exception& e) {
    throw UsageError("invalid angle " + name + "='" + text + "': " + e.what());
  }
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

struct ReportArgs {
  std::array<std::string, 4> angles;
  std::string format = "json";
  std::string out;
};

struct ScanArgs {
  std::size_t grid = 11;
  std::vector<std::string> pins;
  std::string format = "csv";
  std::string out;
};

struct McArgs {
  std::uint64_t n = 1000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string format = "json";
  bool diagnostic = false;
  std::string out;
};

struct InvertArgs {
  std::string signed_flow;
  std::string format = "json";
  std::string out;
};

void cmd_report(const ReportArgs& a, std::ostream& out) {
  std::array<double, 4> v{};
  for (int k = 0; k < 4; ++k) v[k] = parse_named_angle(kAngleNames[k], a.angles[k]);
  const BellReport r = bell_report(AngleConfig::from_radians(v[0], v[1], v[2], v[3]));

  RunManifest m;
  m.command = "report";
  for (int k = 0; k < 4; ++k) m.parameters.emplace_back(kAngleNames[k], a.angles[k]);
  m.timestamp = utc_timestamp_now();

  Output o(a.out, out);
  if (a.format == "csv") {
    m.write_csv_comments(o.stream(), kReportCsvSchema);
    o.stream() << report_csv_header() << "\n" << report_csv_row(r) << "\n";
  } else {
    OrderedJson doc = OrderedJson::object();
    doc["manifest"] = m.to_json();
    doc["report"] = to_json(r);
    o.stream() << dump_json(doc);
  }
}

GridSpec build_grid(const ScanArgs& a) {
  if (a.grid < 2) throw UsageError("--grid must be at least 2");
  GridSpec spec;
  spec.points_per_axis = a.grid;
  for (const auto& pin : a.pins) {
    const auto eq = pin.find('=');
    if (eq == std::string::npos) throw UsageError("--pin expects name=value, got '" + pin + "'");
    const std::string name = pin.substr(0, eq);
    int axis = -1;
    for (int k = 0; k < 4; ++k)
      if (name == kAngleNames[k]) axis = k;
    if (axis < 0) throw UsageError("unknown pinned angle '" + name + "'");
    const double v = parse_named_angle(name, pin.substr(eq + 1));
    if (spec.pins[axis] && *spec.pins[axis] != v) {
      throw UsageError("conflicting pins for " + name);
    }
    spec.pins[axis] = v;
  }
  return spec;
}

void cmd_scan(const ScanArgs& a, std::ostream& out) {
  if (a.format != "csv") throw UsageError("scan only supports --format csv");
  const GridSpec spec = build_grid(a);

  RunManifest m;
  m.command = "scan";
  m.parameters.emplace_back("grid", std::to_string(a.grid));
  for (int k = 0; k < 4; ++k) {
    if (spec.pins[k]) m.parameters.emplace_back(std::string("pin_") + kAngleNames[k], format_number(*spec.pins[k]));
  }
  m.parameters.emplace_back("rows", std::to_string(spec.row_count()));
  m.timestamp = utc_timestamp_now();

  Output o(a.out, out);
  auto& os = o.stream();
  m.write_csv_comments(os, kScanCsvSchema);
  os << scan_csv_header() << "\n";
  for_each_grid_config(spec, [&](const AngleConfig& c) {
    const BellReport r = bell_report(c);
    os << scan_csv_row(r, classify(r)) << "\n";
  });
}

void cmd_mc(const McArgs& a, std::ostream& out) {
  if (a.n == 0) throw UsageError("--n must be at least 1");
  if (a.format != "json") throw UsageError("mc only supports --format json");
  const MonteCarloReport r = run_monte_carlo(a.n, a.seed, a.workers);

  RunManifest m;
  m.command = "mc";
  m.parameters.emplace_back("n", std::to_string(a.n));
  m.seed = a.seed;
  m.rng = CounterRng::kName;
  m.timestamp = utc_timestamp_now();

  OrderedJson doc = OrderedJson::object();
  doc["manifest"] = m.to_json();
  doc["monte_carlo"] = to_json(r);
  if (a.diagnostic) doc["uncertainty"] = to_json(uncertainty_diagnostic(r));
  Output o(a.out, out);
  o.stream() << dump_json(doc);
}

void cmd_invert(const InvertArgs& a, std::ostream& out) {
  double s = 0.0;
  try {
    s = parse_real(a.signed_flow);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid signed_flow: ") + e.what());
  }
  std::optional<JointDistribution> d;
  try {
    d = distribution_from_signed_flow(s);
  } catch (const std::domain_error& e) {
    throw UsageError(std::string("invalid signed_flow: ") + e.what());
  }

  RunManifest m;
  m.command = "invert";
  m.parameters.emplace_back("signed_flow", a.signed_flow);
  m.timestamp = utc_timestamp_now();

  Output o(a.out, out);
  if (a.format == "csv") {
    m.write_csv_comments(o.stream(), kInvertCsvSchema);
    o.stream() << "signed_flow,theta,xi11,xi12,xi21,xi22\n"
               << format_number(s) << ',' << format_number(d->xi11()) << ','
               << format_number(d->xi11()) << ',' << format_number(d->xi12()) << ','
               << format_number(d->xi21()) << ',' << format_number(d->xi22()) << "\n";
  } else {
    OrderedJson doc = OrderedJson::object();
    doc["manifest"] = m.to_json();
    doc["inversion"] = inversion_json(s, *d);
    o.stream() << dump_json(doc);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dependence and information flow between simultaneous polarizer measurements",
               std::string(kToolName)};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "Bell value, dependence degrees and flows for one configuration");
  for (int k = 0; k < 4; ++k) {
    report_cmd->add_option(kAngleNames[k], report.angles[k], "angle in [0, pi]: radians or e.g. 3pi/8")->required();
  }
  report_cmd->add_option("--format", report.format)->check(CLI::IsMember({"json", "csv"}));
  report_cmd->add_option("--out", report.out, "write to file instead of stdout");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "grid scan over [0, pi]^4 or a pinned slice (CSV)");
  scan_cmd->add_option("--grid", scan.grid, "points per free axis (>= 2)");
  scan_cmd->add_option("--pin", scan.pins, "pin an angle, e.g. --pin mu2=pi/4")->allow_extra_args(false);
  scan_cmd->add_option("--format", scan.format)->check(CLI::IsMember({"csv"}));
  scan_cmd->add_option("--out", scan.out, "write to file instead of stdout");

  McArgs mc;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimates over the angle cube");
  mc_cmd->add_option("--n", mc.n, "sample size");
  mc_cmd->add_option("--seed", mc.seed, "64-bit seed (default 1)");
  mc_cmd->add_option("--workers", mc.workers, "worker threads; output does not depend on it");
  mc_cmd->add_option("--format", mc.format)->check(CLI::IsMember({"json"}));
  mc_cmd->add_flag("--diagnostic", mc.diagnostic, "include the uncertainty diagnostic");
  mc_cmd->add_option("--out", mc.out, "write to file instead of stdout");

  InvertArgs invert;
  auto* invert_cmd = app.add_subcommand("invert", "theta and joint distribution from a signed flow (nats)");
  invert_cmd->add_option("signed_flow", invert.signed_flow, "value in [-ln 2, ln 2]")->required();
  invert_cmd->add_option("--format", invert.format)->check(CLI::IsMember({"json", "csv"}));
  invert_cmd->add_option("--out", invert.out, "write to file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*report_cmd) cmd_report(report, out);
    else if (*scan_cmd) cmd_scan(scan, out);
    else if (*mc_cmd) cmd_mc(mc, out);
    else if (*invert_cmd) cmd_invert(invert, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace eprdep

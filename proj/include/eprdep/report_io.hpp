#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eprdep/bellagg.hpp"
#include "eprdep/mcharness.hpp"

namespace eprdep {

using OrderedJson = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "eprdep";
inline constexpr std::string_view kReportCsvSchema = "eprdep.report.v1";
inline constexpr std::string_view kScanCsvSchema = "eprdep.scan.v1";
inline constexpr std::string_view kInvertCsvSchema = "eprdep.invert.v1";

std::string_view tool_version();

/// Parses "pi", "3pi/8", "3*pi/8", "pi/4", "0.5", "1/3" and similar. The
/// rational multiple of pi is formed in extended precision and rounded to
/// double once. Throws std::invalid_argument on malformed input.
double parse_angle_expression(std::string_view text);

/// Plain decimal; throws std::invalid_argument on trailing garbage.
double parse_real(std::string_view text);

/// 17 significant digits, so every double round-trips exactly.
std::string format_number(double x);

/// JSON text with 2-space indentation and 17-digit numbers. Key order is
/// preserved; non-finite numbers become null.
std::string dump_json(const OrderedJson& j);

/// Provenance block embedded in every artifact. Only `timestamp` varies
/// between runs with identical parameters.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> rng;
  std::string timestamp;

  OrderedJson to_json() const;
  /// "# key=value" lines preceding CSV output.
  void write_csv_comments(std::ostream& os, std::string_view schema) const;
};

std::string utc_timestamp_now();

OrderedJson to_json(const AngleConfig& c);
OrderedJson to_json(const BellReport& r);
OrderedJson to_json(const MonteCarloReport& r);
OrderedJson to_json(const UncertaintyDiagnostic& d);
OrderedJson inversion_json(double signed_flow, const JointDistribution& d);

std::string report_csv_header();
std::string report_csv_row(const BellReport& r);

std::string scan_csv_header();
std::string scan_csv_row(const BellReport& r, const EventMembership& m);

}  // namespace eprdep

#include "eprdep/report_io.hpp"

#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "eprdep/counter_rng.hpp"

#ifndef EPRDEP_VERSION
#define EPRDEP_VERSION "0.0.0"
#endif

namespace eprdep {

std::string_view tool_version() { return EPRDEP_VERSION; }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long double parse_decimal(std::string_view text, std::string_view whole) {
  text = trim(text);
  double v = 0.0;
  const char* end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("cannot parse '" + std::string(whole) + "'");
  }
  return v;
}

void dump_value(const OrderedJson& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case OrderedJson::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + OrderedJson(key).dump() + ": ";
        dump_value(value, out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case OrderedJson::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ", ";
        first = false;
        dump_value(value, out, indent + 1);
      }
      out += "]";
      return;
    }
    case OrderedJson::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_number(x) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

OrderedJson optional_json(const std::optional<double>& x) {
  return x ? OrderedJson(*x) : OrderedJson(nullptr);
}

OrderedJson interval_json(const std::optional<Interval>& iv) {
  if (!iv) return OrderedJson(nullptr);
  return OrderedJson::array({iv->lower, iv->upper});
}

template <typename T, typename F>
OrderedJson per_pair_json(const PerPair<T>& m, F&& value) {
  OrderedJson rows = OrderedJson::array();
  for (const auto& row : m) rows.push_back(OrderedJson::array({value(row[0]), value(row[1])}));
  return rows;
}

}  // namespace

double parse_angle_expression(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  const auto pi_pos = text.find("pi");
  std::string_view head = text;
  std::string_view denominator;

  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    head = text.substr(0, slash);
    denominator = text.substr(slash + 1);
    if (denominator.empty()) throw std::invalid_argument("missing denominator in '" + std::string(whole) + "'");
  }

  long double numerator = 0.0L;
  if (pi_pos != std::string_view::npos) {
    if (pi_pos >= head.size() || head.substr(pi_pos) != "pi") {
      throw std::invalid_argument("cannot parse '" + std::string(whole) + "'");
    }
    std::string_view coef = trim(head.substr(0, pi_pos));
    if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
    long double k = 1.0L;
    if (coef == "-") {
      k = -1.0L;
    } else if (!coef.empty() && coef != "+") {
      k = parse_decimal(coef, whole);
    }
    numerator = k * std::numbers::pi_v<long double>;
  } else {
    numerator = parse_decimal(head, whole);
  }

  long double den = 1.0L;
  if (!denominator.empty()) {
    den = parse_decimal(denominator, whole);
    if (den == 0.0L) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
  }
  const double value = static_cast<double>(numerator / den);
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite angle '" + std::string(whole) + "'");
  return value;
}

double parse_real(std::string_view text) {
  return static_cast<double>(parse_decimal(text, text));
}

std::string format_number(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

std::string dump_json(const OrderedJson& j) {
  std::string out;
  dump_value(j, out, 0);
  out += "\n";
  return out;
}

OrderedJson RunManifest::to_json() const {
  OrderedJson params = OrderedJson::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  OrderedJson m = OrderedJson::object();
  m["tool"] = kToolName;
  m["version"] = tool_version();
  m["command"] = command;
  m["parameters"] = params;
  m["seed"] = seed ? OrderedJson(*seed) : OrderedJson(nullptr);
  if (rng) m["rng"] = *rng;
  m["timestamp"] = timestamp;
  return m;
}

void RunManifest::write_csv_comments(std::ostream& os, std::string_view schema) const {
  os << "# schema=" << schema << "\n";
  os << "# tool=" << kToolName << " " << tool_version() << "\n";
  os << "# command=" << command << "\n";
  for (const auto& [k, v] : parameters) os << "# " << k << "=" << v << "\n";
  if (seed) os << "# seed=" << *seed << "\n";
  if (rng) os << "# rng=" << *rng << "\n";
  os << "# timestamp=" << timestamp << "\n";
}

std::string utc_timestamp_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

OrderedJson to_json(const AngleConfig& c) {
  OrderedJson j = OrderedJson::object();
  j["mu1"] = c.mu1.radians();
  j["mu2"] = c.mu2.radians();
  j["nu1"] = c.nu1.radians();
  j["nu2"] = c.nu2.radians();
  return j;
}

OrderedJson to_json(const BellReport& r) {
  OrderedJson j = OrderedJson::object();
  j["config"] = to_json(r.config);
  j["thetas"] = per_pair_json(r.thetas, [](const Theta& t) { return t.value(); });
  j["degrees"] = per_pair_json(r.degrees, [](double e) { return e; });
  j["bell_value"] = r.bell_value;
  j["total_flow"] = r.total_flow;
  j["total_signed_flow"] = r.total_signed_flow;
  j["degree_sum"] = r.degree_sum;
  j["abs_degree_sum"] = r.abs_degree_sum;
  j["violates_bell"] = r.violates_bell;
  return j;
}

OrderedJson to_json(const MonteCarloReport& r) {
  OrderedJson counts = OrderedJson::object();
  counts["U"] = r.tally.in_U;
  counts["V"] = r.tally.in_V;
  counts["VS"] = r.tally.in_VS;
  counts["U_and_V"] = r.tally.in_U_and_V;
  counts["U_and_VS"] = r.tally.in_U_and_VS;

  OrderedJson j = OrderedJson::object();
  j["n"] = r.n;
  j["seed"] = r.seed;
  j["counts"] = counts;
  j["alpha_hat"] = r.alpha_hat;
  j["beta_hat"] = r.beta_hat;
  j["beta_s_hat"] = r.beta_s_hat;
  j["tau_hat"] = r.tau_hat;
  j["tau_s_hat"] = r.tau_s_hat;
  j["cond_Vc_given_U"] = optional_json(r.cond_Vc_given_U);
  j["cond_V_given_Uc"] = optional_json(r.cond_V_given_Uc);
  j["cond_VSc_given_U"] = optional_json(r.cond_VSc_given_U);
  j["cond_VS_given_Uc"] = optional_json(r.cond_VS_given_Uc);
  j["undefined_conditionals"] = r.undefined_conditionals();
  j["flow_range_in_U"] = interval_json(r.flow_range_in_U);
  j["signed_flow_range_in_U"] = interval_json(r.signed_flow_range_in_U);
  j["frechet_V"] = interval_json(r.frechet_V);
  j["frechet_VS"] = interval_json(r.frechet_VS);
  j["violations_without_flow"] = r.tally.violations_without_flow;
  return j;
}

OrderedJson to_json(const UncertaintyDiagnostic& d) {
  auto pair = [](const PairDiagnostic& p) {
    OrderedJson j = OrderedJson::object();
    j["cond_complement_given_U"] = optional_json(p.cond_Wc_given_U);
    j["cond_event_given_Uc"] = optional_json(p.cond_W_given_Uc);
    j["max_conditional"] = optional_json(p.max_conditional);
    j["tau"] = p.tau;
    j["frechet"] = interval_json(p.frechet);
    j["tolerance"] = p.tolerance;
    j["at_upper_endpoint"] = p.at_upper_endpoint;
    j["at_lower_endpoint"] = p.at_lower_endpoint;
    return j;
  };
  OrderedJson j = OrderedJson::object();
  j["U_V"] = pair(d.u_v);
  j["U_VS"] = pair(d.u_vs);
  return j;
}

OrderedJson inversion_json(double signed_flow, const JointDistribution& d) {
  OrderedJson j = OrderedJson::object();
  j["signed_flow"] = signed_flow;
  j["theta"] = d.xi11();
  j["distribution"] = OrderedJson::array({d.xi11(), d.xi12(), d.xi21(), d.xi22()});
  return j;
}

std::string report_csv_header() {
  return "mu1,mu2,nu1,nu2,theta11,theta12,theta21,theta22,e11,e12,e21,e22,"
         "bell_value,total_flow,total_signed_flow,degree_sum,abs_degree_sum,violates_bell";
}

std::string report_csv_row(const BellReport& r) {
  std::ostringstream os;
  const auto& c = r.config;
  os << format_number(c.mu1.radians()) << ',' << format_number(c.mu2.radians()) << ','
     << format_number(c.nu1.radians()) << ',' << format_number(c.nu2.radians());
  for (const auto& row : r.thetas)
    for (const auto& t : row) os << ',' << format_number(t.value());
  for (const auto& row : r.degrees)
    for (double e : row) os << ',' << format_number(e);
  os << ',' << format_number(r.bell_value) << ',' << format_number(r.total_flow) << ','
     << format_number(r.total_signed_flow) << ',' << format_number(r.degree_sum) << ','
     << format_number(r.abs_degree_sum) << ',' << (r.violates_bell ? 1 : 0);
  return os.str();
}

std::string scan_csv_header() {
  return "mu1,mu2,nu1,nu2,bell_value,total_flow,total_signed_flow,degree_sum,in_U,in_V,in_VS";
}

std::string scan_csv_row(const BellReport& r, const EventMembership& m) {
  std::string row;
  row.reserve(200);
  const auto& c = r.config;
  for (double x : {c.mu1.radians(), c.mu2.radians(), c.nu1.radians(), c.nu2.radians(),
                   r.bell_value, r.total_flow, r.total_signed_flow, r.degree_sum}) {
    row += format_number(x);
    row += ',';
  }
  row += m.in_U ? "1," : "0,";
  row += m.in_V ? "1," : "0,";
  row += m.in_VS ? "1" : "0";
  return row;
}

}  // namespace eprdep

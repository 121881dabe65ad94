#pragma once

#include "instanton/verdict.hpp"
#include "instanton/version.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace instanton::run {

enum class ReportFormat { json, csv, md };

inline const char* to_string(ReportFormat f) {
  switch (f) {
    case ReportFormat::json: return "json";
    case ReportFormat::csv: return "csv";
    case ReportFormat::md: return "md";
  }
  return "json";
}

inline ReportFormat report_format_from_string(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "md") return ReportFormat::md;
  throw std::invalid_argument("unknown report format: " + s);
}

// Canonical report files zero the timing values so identical configurations
// produce byte-identical bytes; live timings go to stderr instead.
inline nlohmann::ordered_json report_to_json(const VerdictReport& rep,
                                             bool with_timings) {
  nlohmann::ordered_json j;
  j["k"] = rep.k;
  j["n"] = rep.n;
  j["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : rep.claims) {
    nlohmann::ordered_json jc;
    jc["claim_id"] = c.id;
    jc["computed"] = c.computed;
    jc["expected"] = c.expected;
    jc["pass"] = c.pass;
    j["claims"].push_back(jc);
  }
  nlohmann::ordered_json jd;
  for (const auto& [key, value] : rep.data) jd[key] = value;
  j["data"] = jd;
  nlohmann::ordered_json jt;
  for (const auto& c : rep.claims) {
    auto it = rep.timings.find(c.id);
    jt[c.id] = with_timings && it != rep.timings.end() ? it->second : 0;
  }
  j["timings"] = jt;
  return j;
}

inline std::string reports_to_json(const std::vector<VerdictReport>& reps,
                                   const nlohmann::ordered_json& config_echo,
                                   bool with_timings = false) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["artifact_version"] = kArtifactVersion;
  j["config"] = config_echo;
  j["reports"] = nlohmann::ordered_json::array();
  std::size_t claims = 0, failed = 0;
  for (const auto& r : reps) {
    j["reports"].push_back(report_to_json(r, with_timings));
    for (const auto& c : r.claims) {
      ++claims;
      if (!c.pass) ++failed;
    }
  }
  j["summary"] = {{"points", reps.size()},
                  {"claims", claims},
                  {"failed", failed},
                  {"all_pass", failed == 0}};
  return j.dump(2) + "\n";
}

inline std::string reports_to_csv(const std::vector<VerdictReport>& reps) {
  std::ostringstream os;
  os << "n,k,claim_id,computed,expected,pass\n";
  for (const auto& r : reps)
    for (const auto& c : r.claims)
      os << r.n << ',' << r.k << ',' << c.id << ',' << c.computed << ','
         << c.expected << ',' << (c.pass ? 1 : 0) << '\n';
  return os.str();
}

// Inverse of reports_to_csv over the claim fields.
inline std::vector<VerdictReport> parse_csv(const std::string& text) {
  std::vector<VerdictReport> out;
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);  // header
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    VerdictReport tmp;
    Claim c;
    std::getline(ls, field, ',');
    tmp.n = std::stoi(field);
    std::getline(ls, field, ',');
    tmp.k = std::stoi(field);
    std::getline(ls, c.id, ',');
    std::getline(ls, field, ',');
    c.computed = std::stoll(field);
    std::getline(ls, field, ',');
    c.expected = std::stoll(field);
    std::getline(ls, field, ',');
    c.pass = field == "1";
    if (out.empty() || out.back().n != tmp.n || out.back().k != tmp.k) {
      tmp.claims.push_back(c);
      out.push_back(std::move(tmp));
    } else {
      out.back().claims.push_back(c);
    }
  }
  return out;
}

inline std::string reports_to_markdown(const std::vector<VerdictReport>& reps) {
  std::ostringstream os;
  os << "| n | k | h2(S2E) | expected | h2(EndE) | h2(Alt2E) | h1(S2E) | "
        "chi | chi_printed | symplectic_dim | pass |\n";
  os << "|---|---|---------|----------|----------|-----------|---------|"
        "-----|-------------|----------------|------|\n";
  auto cell = [](const VerdictReport& r, const char* key) -> std::string {
    auto it = r.data.find(key);
    return it == r.data.end() ? std::string("-") : std::to_string(it->second);
  };
  for (const auto& r : reps) {
    const Claim* h2 = r.find("h2_sym");
    os << "| " << r.n << " | " << r.k << " | "
       << (h2 ? std::to_string(h2->computed) : cell(r, "h2_s2")) << " | "
       << (h2 ? std::to_string(h2->expected) : std::string("-")) << " | "
       << cell(r, "h2_end") << " | " << cell(r, "h2_alt2") << " | "
       << cell(r, "h1_s2E") << " | " << cell(r, "chi_corrected") << " | "
       << cell(r, "chi_printed") << " | " << cell(r, "symplectic_dim")
       << " | " << (r.all_pass() ? "pass" : "FAIL") << " |\n";
  }
  return os.str();
}

inline std::string render_reports(const std::vector<VerdictReport>& reps,
                                  ReportFormat format,
                                  const nlohmann::ordered_json& config_echo) {
  switch (format) {
    case ReportFormat::json:
      return reports_to_json(reps, config_echo);
    case ReportFormat::csv:
      return reports_to_csv(reps);
    case ReportFormat::md:
      return reports_to_markdown(reps);
  }
  return {};
}

}  // namespace instanton::run

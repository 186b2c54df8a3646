#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "fixmahon/error.hpp"
#include "fixmahon/verify.hpp"

namespace fixmahon {
namespace {

using Json = nlohmann::ordered_json;

const char* status(bool passed) { return passed ? "pass" : "fail"; }

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

constexpr std::string_view kCsvHeader = "suite,status,checked,audits,failures,first_check,first_counterexample\n";

std::string csv_row(const Report& report) {
  std::ostringstream out;
  out << csv_field(report.suite) << ',' << status(report.passed) << ',' << report.checked << ','
      << report.audits.size() << ',' << report.failures.size() << ',';
  if (!report.failures.empty()) {
    out << csv_field(report.failures.front().check) << ','
        << csv_field(report.failures.front().counterexample);
  } else {
    out << ',';
  }
  out << '\n';
  return out.str();
}

Json to_json(const Report& report) {
  Json j;
  j["suite"] = report.suite;
  j["status"] = status(report.passed);
  j["checked"] = report.checked;
  j["audits"] = Json::array();
  for (const Audit& a : report.audits)
    j["audits"].push_back({{"name", a.name}, {"domain", a.domain}, {"codomain", a.codomain}});
  j["failures"] = Json::array();
  for (const Failure& f : report.failures)
    j["failures"].push_back({{"check", f.check}, {"counterexample", f.counterexample}});
  return j;
}

std::string text(const Report& report) {
  std::ostringstream out;
  out << report.suite << ": " << (report.passed ? "PASS" : "FAIL") << " (" << report.checked
      << " checks, " << report.audits.size() << " audits)\n";
  for (const Audit& a : report.audits) {
    if (!a.matches())
      out << "  audit " << a.name << ": " << a.domain << " != " << a.codomain << '\n';
  }
  for (const Failure& f : report.failures) out << "  " << f.check << ": " << f.counterexample << '\n';
  return out.str();
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::text;
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw ParseError("unknown format: " + std::string(name));
}

Report merge_reports(std::string suite, const std::vector<Report>& parts) {
  Report merged;
  merged.suite = std::move(suite);
  for (const Report& part : parts) {
    merged.passed = merged.passed && part.passed;
    merged.checked += part.checked;
    merged.audits.insert(merged.audits.end(), part.audits.begin(), part.audits.end());
    for (const Failure& f : part.failures) {
      if (merged.failures.size() >= kMaxRecordedFailures) break;
      merged.failures.push_back({part.suite + "/" + f.check, f.counterexample});
    }
  }
  return merged;
}

std::string render_report(const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::text:
      return text(report);
    case ReportFormat::csv:
      return std::string(kCsvHeader) + csv_row(report);
    case ReportFormat::json:
      return to_json(report).dump(2) + "\n";
  }
  return {};
}

std::string render_reports(const std::vector<Report>& reports, ReportFormat format) {
  const Report total = merge_reports("all", reports);
  switch (format) {
    case ReportFormat::text: {
      std::string out;
      for (const Report& r : reports) out += text(r);
      out += "all: " + std::string(total.passed ? "PASS" : "FAIL") + " (" +
             std::to_string(total.checked) + " checks in " + std::to_string(reports.size()) + " suites)\n";
      return out;
    }
    case ReportFormat::csv: {
      std::string out(kCsvHeader);
      for (const Report& r : reports) out += csv_row(r);
      return out;
    }
    case ReportFormat::json: {
      Json j;
      j["suite"] = total.suite;
      j["status"] = status(total.passed);
      j["checked"] = total.checked;
      j["suites"] = Json::array();
      for (const Report& r : reports) j["suites"].push_back(to_json(r));
      return j.dump(2) + "\n";
    }
  }
  return {};
}

std::string render_table(const TableReproduction& table, ReportFormat format) {
  switch (format) {
    case ReportFormat::text: {
      std::string out = table.rendered;
      out += table.matches() ? "# " + table.name + ": matches fixture\n"
                             : "# " + table.name + ": differs from fixture\n" + table.diff;
      return out;
    }
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "table,status,diff_lines\n"
          << csv_field(table.name) << ',' << status(table.matches()) << ','
          << std::count(table.diff.begin(), table.diff.end(), '\n') << '\n';
      return out.str();
    }
    case ReportFormat::json: {
      Json j;
      j["table"] = table.name;
      j["status"] = status(table.matches());
      j["rendered"] = table.rendered;
      j["diff"] = table.diff;
      return j.dump(2) + "\n";
    }
  }
  return {};
}

}  // namespace fixmahon

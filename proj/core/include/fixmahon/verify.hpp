#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fixmahon/word.hpp"

namespace fixmahon {

/// Overrides for a suite's default search ranges. Unset fields keep the
/// suite's own default.
struct Caps {
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> r_max;
  std::optional<std::size_t> alphabet_max;
};

/// Hard ceilings on caps; larger requests are rejected before any work starts.
inline constexpr std::size_t kMaxPermutationLength = 8;
inline constexpr std::size_t kMaxWordLength = 8;
inline constexpr std::size_t kMaxLetter = 6;

struct Failure {
  std::string check;
  std::string counterexample;
};

/// Domain and codomain sizes of a bijection, compared before the pointwise checks.
struct Audit {
  std::string name;
  std::uint64_t domain = 0;
  std::uint64_t codomain = 0;
  bool matches() const { return domain == codomain; }
};

struct Report {
  std::string suite;
  bool passed = true;
  std::uint64_t checked = 0;
  std::vector<Audit> audits;
  /// In canonical enumeration order, so the first entry is the smallest
  /// counterexample found. At most kMaxRecordedFailures per suite.
  std::vector<Failure> failures;
};

inline constexpr std::size_t kMaxRecordedFailures = 20;

/// Suite identifiers in run order, not including "all".
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite when `name` is "all" (suites run
/// concurrently and are merged in suite_names() order). Throws
/// PreconditionError for an unknown name or caps above the ceilings.
Report run_suite(std::string_view name, const Caps& caps = {});

/// Per-suite reports for "all", in suite_names() order.
std::vector<Report> run_all_suites(const Caps& caps = {});
Report merge_reports(std::string suite, const std::vector<Report>& parts);

/// Checks a pointwise property on W_n(r) for n = 0..n_max, shortest words
/// first and lexicographically within a length, so the first recorded
/// failure is a minimal counterexample.
Report check_words(std::string suite, std::string check, std::size_t n_max, std::size_t r,
                   const std::function<bool(const Word&)>& property);

enum class ReportFormat { text, csv, json };
ReportFormat parse_report_format(std::string_view name);
std::string render_report(const Report& report, ReportFormat format);
std::string render_reports(const std::vector<Report>& reports, ReportFormat format);

struct TableReproduction {
  std::string name;
  std::string rendered;  // regenerated from the library
  std::string golden;    // the checked-in fixture
  std::string diff;      // unified-style line diff, empty when equal
  bool matches() const { return diff.empty(); }
};

const std::vector<std::string>& table_names();
/// Regenerates the named table and diffs it against its fixture. Throws
/// PreconditionError for an unknown name.
TableReproduction reproduce_table(std::string_view name);
std::string render_table(const TableReproduction& table, ReportFormat format);

/// Line diff: "-" golden-only lines, "+" rendered-only lines, empty when equal.
std::string line_diff(std::string_view golden, std::string_view rendered);

}  // namespace fixmahon

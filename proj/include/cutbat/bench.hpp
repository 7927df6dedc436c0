#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cutbat/enumerate.hpp"
#include "cutbat/network.hpp"

namespace cutbat {

struct BenchRow {
  std::string name;  // no whitespace
  int n = 0;
  int m = 0;
  std::uint64_t c = 0;
  std::uint64_t vg_baseline = 0;
  std::uint64_t vg_recursive = 0;
  std::int64_t t_baseline_ns = 0;   // median over the configured repetitions
  std::int64_t t_recursive_ns = 0;
  bool catalogs_equal = false;

  bool operator==(const BenchRow&) const = default;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::uint64_t seed = 0;
  int repetitions = 5;
  std::string environment;  // no whitespace

  bool all_equal() const;

  bool operator==(const BenchReport&) const = default;
};

/// Runs both enumerators on every instance, compares the catalogs as sets,
/// and records counts plus median wall times over `repetitions` runs.
BenchReport run_compare(
    std::span<const std::pair<std::string, Network>> instances,
    int repetitions = 5, std::uint64_t seed = 0);

enum class ReportFormat { text, machine };

/// text: aligned human-readable table. machine: self-describing key=value
/// records, one `row` line per instance, round-trippable via parse_report.
std::string emit_report(const BenchReport& report, ReportFormat format);

/// Parses the machine wire form back into a report.
BenchReport parse_report(std::string_view text);

std::string describe_environment();

}  // namespace cutbat

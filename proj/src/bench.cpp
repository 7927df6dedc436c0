#include "cutbat/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cutbat {

bool BenchReport::all_equal() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const BenchRow& row) { return row.catalogs_equal; });
}

namespace {

template <typename Run>
std::int64_t median_time_ns(int repetitions, Run&& run) {
  std::vector<std::int64_t> samples;
  samples.reserve(repetitions);
  for (int i = 0; i < repetitions; ++i) samples.push_back(run());
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

}  // namespace

BenchReport run_compare(
    std::span<const std::pair<std::string, Network>> instances,
    int repetitions, std::uint64_t seed) {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");

  BenchReport report;
  report.seed = seed;
  report.repetitions = repetitions;
  report.environment = describe_environment();

  for (const auto& [name, net] : instances) {
    McCatalog baseline_catalog;
    EnumStats baseline_stats;
    const std::int64_t t_baseline = median_time_ns(repetitions, [&] {
      auto [catalog, stats] = enumerate_baseline(net);
      baseline_catalog = std::move(catalog);
      baseline_stats = stats;
      return stats.wall_time.count();
    });

    McCatalog recursive_catalog;
    EnumStats recursive_stats;
    const std::int64_t t_recursive = median_time_ns(repetitions, [&] {
      auto [catalog, stats] = enumerate_recursive(net);
      recursive_catalog = std::move(catalog);
      recursive_stats = stats;
      return stats.wall_time.count();
    });

    BenchRow row;
    row.name = name;
    row.n = net.node_count();
    row.m = net.arc_count();
    row.catalogs_equal = baseline_catalog.same_cuts(recursive_catalog);
    row.c = recursive_catalog.count();
    row.vg_baseline = baseline_stats.vectors_generated;
    row.vg_recursive = recursive_stats.vectors_generated;
    row.t_baseline_ns = t_baseline;
    row.t_recursive_ns = t_recursive;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string describe_environment() {
  std::string env = "threads=" +
                    std::to_string(std::thread::hardware_concurrency());
#if defined(__VERSION__)
  std::string compiler = __VERSION__;
  for (char& ch : compiler)
    if (ch == ' ') ch = '-';
  env += ",compiler=" + compiler;
#endif
  return env;
}

namespace {

void require_plain_token(const std::string& value, const char* what,
                         bool allow_equals = false) {
  if (value.empty() ||
      value.find_first_of(allow_equals ? " \t\n" : " \t\n=") !=
          std::string::npos)
    throw std::invalid_argument(std::string(what) +
                                " must be a non-empty token without "
                                "whitespace");
}

std::string text_table(const BenchReport& report) {
  std::vector<std::vector<std::string>> grid;
  grid.push_back({"name", "n", "m", "c", "vg_baseline", "vg_recursive",
                  "t_baseline_ms", "t_recursive_ms", "equal"});
  auto ms = [](std::int64_t ns) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << static_cast<double>(ns) / 1e6;
    return out.str();
  };
  for (const BenchRow& row : report.rows)
    grid.push_back({row.name, std::to_string(row.n), std::to_string(row.m),
                    std::to_string(row.c), std::to_string(row.vg_baseline),
                    std::to_string(row.vg_recursive), ms(row.t_baseline_ns),
                    ms(row.t_recursive_ns),
                    row.catalogs_equal ? "yes" : "NO"});

  std::vector<std::size_t> widths(grid[0].size(), 0);
  for (const auto& line : grid)
    for (std::size_t i = 0; i < line.size(); ++i)
      widths[i] = std::max(widths[i], line[i].size());

  std::string out;
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i > 0) out += "  ";
      out += line[i];
      out.append(widths[i] - line[i].size(), ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
  }
  out += "seed " + std::to_string(report.seed) + ", " +
         std::to_string(report.repetitions) + " repetitions, " +
         report.environment + "\n";
  return out;
}

}  // namespace

std::string emit_report(const BenchReport& report, ReportFormat format) {
  if (format == ReportFormat::text) return text_table(report);

  require_plain_token(report.environment.empty() ? "none"
                                                 : report.environment,
                      "environment", /*allow_equals=*/true);
  std::string out = "batbench 1\n";
  out += "env seed=" + std::to_string(report.seed) +
         " reps=" + std::to_string(report.repetitions) + " info=" +
         (report.environment.empty() ? "none" : report.environment) + "\n";
  for (const BenchRow& row : report.rows) {
    require_plain_token(row.name, "row name");
    out += "row name=" + row.name + " n=" + std::to_string(row.n) +
           " m=" + std::to_string(row.m) + " c=" + std::to_string(row.c) +
           " vg_baseline=" + std::to_string(row.vg_baseline) +
           " vg_recursive=" + std::to_string(row.vg_recursive) +
           " t_baseline_ns=" + std::to_string(row.t_baseline_ns) +
           " t_recursive_ns=" + std::to_string(row.t_recursive_ns) +
           " equal=" + (row.catalogs_equal ? "1" : "0") + "\n";
  }
  return out;
}

namespace {

std::int64_t to_int(const std::string& token, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw std::invalid_argument(std::string("bad ") + what + ": '" + token +
                                "'");
  return value;
}

std::uint64_t to_uint(const std::string& token, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw std::invalid_argument(std::string("bad ") + what + ": '" + token +
                                "'");
  return value;
}

std::pair<std::string, std::string> split_kv(const std::string& token) {
  const std::size_t eq = token.find('=');
  if (eq == std::string::npos || eq == 0)
    throw std::invalid_argument("expected key=value, got '" + token + "'");
  return {token.substr(0, eq), token.substr(eq + 1)};
}

}  // namespace

BenchReport parse_report(std::string_view text) {
  std::istringstream stream{std::string(text)};
  std::string line;
  if (!std::getline(stream, line) || line != "batbench 1")
    throw std::invalid_argument("missing 'batbench 1' header");

  BenchReport report;
  bool saw_env = false;
  while (std::getline(stream, line)) {
    if (line.empty()) continue;
    std::istringstream tokens{line};
    std::string kind;
    tokens >> kind;
    std::string token;
    if (kind == "env") {
      saw_env = true;
      while (tokens >> token) {
        auto [key, value] = split_kv(token);
        if (key == "seed")
          report.seed = to_uint(value, "seed");
        else if (key == "reps")
          report.repetitions = static_cast<int>(to_int(value, "reps"));
        else if (key == "info")
          report.environment = value == "none" ? "" : value;
        else
          throw std::invalid_argument("unknown env key '" + key + "'");
      }
    } else if (kind == "row") {
      BenchRow row;
      while (tokens >> token) {
        auto [key, value] = split_kv(token);
        if (key == "name")
          row.name = value;
        else if (key == "n")
          row.n = static_cast<int>(to_int(value, "n"));
        else if (key == "m")
          row.m = static_cast<int>(to_int(value, "m"));
        else if (key == "c")
          row.c = to_uint(value, "c");
        else if (key == "vg_baseline")
          row.vg_baseline = to_uint(value, "vg_baseline");
        else if (key == "vg_recursive")
          row.vg_recursive = to_uint(value, "vg_recursive");
        else if (key == "t_baseline_ns")
          row.t_baseline_ns = to_int(value, "t_baseline_ns");
        else if (key == "t_recursive_ns")
          row.t_recursive_ns = to_int(value, "t_recursive_ns");
        else if (key == "equal")
          row.catalogs_equal = to_int(value, "equal") != 0;
        else
          throw std::invalid_argument("unknown row key '" + key + "'");
      }
      if (row.name.empty())
        throw std::invalid_argument("row without a name");
      report.rows.push_back(std::move(row));
    } else {
      throw std::invalid_argument("unknown record '" + kind + "'");
    }
  }
  if (!saw_env) throw std::invalid_argument("missing env record");
  return report;
}

}  // namespace cutbat

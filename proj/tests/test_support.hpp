#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cutbat/generator.hpp"
#include "cutbat/mc_catalog.hpp"
#include "cutbat/network.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
  return std::string(CUTBAT_FIXTURE_DIR) + "/" + name;
}

inline cutbat::Network fixture(const std::string& name) {
  return cutbat::load_network(fixture_path(name));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Parses a golden catalog/trace file, skipping comments and blank lines.
inline std::vector<std::string> golden_lines(const std::string& name) {
  std::istringstream in(read_file(std::string(CUTBAT_GOLDEN_DIR) + "/" + name));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

inline cutbat::CutSet cut_from_names(const std::string& names) {
  std::istringstream in(names);
  std::vector<cutbat::ArcId> ids;
  std::string token;
  while (in >> token) ids.push_back(std::stoi(token.substr(1)));
  return cutbat::CutSet(std::move(ids));
}

inline std::set<cutbat::CutSet> cut_set_from_lines(
    const std::vector<std::string>& lines) {
  std::set<cutbat::CutSet> out;
  for (const std::string& line : lines) out.insert(cut_from_names(line));
  return out;
}

inline cutbat::Network make_network(
    int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<cutbat::Arc> arcs;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    arcs.push_back({static_cast<cutbat::ArcId>(i) + 1, pairs[i].first,
                    pairs[i].second});
  return cutbat::Network(n, std::move(arcs));
}

inline cutbat::Network random_network(int n, int m, std::uint64_t seed) {
  cutbat::GenSpec spec;
  spec.node_count = n;
  spec.arc_count = m;
  spec.seed = seed;
  spec.arc_probability.reset();
  return cutbat::generate_network(spec);
}

}  // namespace testsupport

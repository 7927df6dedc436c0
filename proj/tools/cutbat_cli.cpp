#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cutbat/bench.hpp"
#include "cutbat/enumerate.hpp"
#include "cutbat/generator.hpp"
#include "cutbat/layering.hpp"
#include "cutbat/network.hpp"
#include "cutbat/oracle.hpp"
#include "cutbat/reliability.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitGuard = 3;

struct GlobalOptions {
  std::uint64_t seed = 42;
  std::string format = "text";
  int limit_mc = 20;
  int limit_arcs = 24;
};

cutbat::Network load_and_check(const std::string& path) {
  cutbat::Network net = cutbat::load_network(path);
  cutbat::ValidationReport report = cutbat::validate(net);
  if (!report.connected)
    throw std::invalid_argument(path + ": network is not connected");
  return net;
}

void print_stats(const cutbat::EnumStats& stats) {
  std::cout << "# stats\n";
  std::cout << "vectors_generated " << stats.vectors_generated << "\n";
  std::cout << "vectors_feasible " << stats.vectors_feasible << "\n";
  std::cout << "parents_removed " << stats.parents_removed << "\n";
  if (stats.t_side_divergences > 0)
    std::cout << "t_side_divergences " << stats.t_side_divergences << "\n";
  std::cout << "wall_time_us " << stats.wall_time.count() / 1000 << "\n";
}

int cmd_validate(const std::string& path) {
  cutbat::Network net = cutbat::load_network(path);
  cutbat::ValidationReport report = cutbat::validate(net);
  std::cout << "nodes " << net.node_count() << "\n";
  std::cout << "arcs " << net.arc_count() << "\n";
  std::cout << "connected " << (report.connected ? "yes" : "no") << "\n";
  std::cout << "nodes_off_all_paths";
  if (report.nodes_off_all_paths.empty()) {
    std::cout << " none";
  } else {
    for (cutbat::NodeId v : report.nodes_off_all_paths)
      std::cout << " " << net.original_label(v);
  }
  std::cout << "\n";
  for (const std::string& warning : report.warnings)
    std::cout << "warning: " << warning << "\n";
  return kExitOk;
}

int cmd_layers(const std::string& path) {
  cutbat::Network net = cutbat::load_network(path);
  cutbat::Layering layering = cutbat::plsa_layers(net, net.source());
  for (std::size_t i = 0; i < layering.layers.size(); ++i) {
    std::cout << "L" << (i + 1) << ":";
    for (cutbat::NodeId v : layering.layers[i]) std::cout << " " << v;
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_renumber(const std::string& path) {
  cutbat::Network net = load_and_check(path);
  auto [ordered, renumbering] = cutbat::renumber(net);
  for (cutbat::NodeId v = 1; v <= net.node_count(); ++v)
    std::cout << "# node " << v << " -> " << renumbering.forward[v] << "\n";
  std::cout << cutbat::serialize(ordered);
  return kExitOk;
}

int cmd_enumerate(const std::string& path, const std::string& algo,
                  const std::string& check, bool no_prune_isolated,
                  bool no_prune_parent, const GlobalOptions& global) {
  cutbat::Network net = load_and_check(path);

  cutbat::McCatalog catalog;
  std::optional<cutbat::EnumStats> stats;
  if (algo == "baseline") {
    auto [result, run_stats] = cutbat::enumerate_baseline(net);
    catalog = std::move(result);
    stats = run_stats;
  } else if (algo == "recursive") {
    cutbat::EnumOptions options;
    options.t_side_mode = check == "edge-node" ? cutbat::TSideMode::edge_node
                                               : cutbat::TSideMode::plsa;
    options.prune_isolated = !no_prune_isolated;
    options.prune_parent = !no_prune_parent;
    auto [result, run_stats] = cutbat::enumerate_recursive(net, options);
    catalog = std::move(result);
    stats = run_stats;
  } else {
    catalog = cutbat::mc_oracle(net, global.limit_arcs);
  }

  std::cout << catalog.count() << "\n";
  for (const cutbat::CutSet& cut : catalog.cuts())
    std::cout << cutbat::to_string(cut) << "\n";
  if (stats) print_stats(*stats);
  return kExitOk;
}

int cmd_reliability(const std::string& path, const std::string& method,
                    std::optional<double> uniform_p,
                    const GlobalOptions& global) {
  cutbat::Network net = load_and_check(path);
  cutbat::FailureModel model =
      uniform_p ? cutbat::FailureModel::uniform(net.arc_count(), *uniform_p)
                : cutbat::FailureModel::from_network(net);

  cutbat::ReliabilityResult result;
  auto start = std::chrono::steady_clock::now();
  if (method == "brute") {
    result = cutbat::reliability_brute(net, model, global.limit_arcs);
  } else {
    auto [catalog, stats] = cutbat::enumerate_recursive(net);
    result = cutbat::unreliability_iet(catalog, model, global.limit_mc);
  }
  auto elapsed = std::chrono::steady_clock::now() - start;

  std::printf("R %.15g\n", result.reliability);
  std::printf("F %.15g\n", result.unreliability);
  std::cout << "terms " << result.terms_evaluated << "\n";
  std::cout << "method " << result.method << "\n";
  std::cout << "time_us "
            << std::chrono::duration_cast<std::chrono::microseconds>(elapsed)
                   .count()
            << "\n";
  return kExitOk;
}

struct GenArgs {
  int nodes = 0;
  int arcs = 0;
  int count = 1;
};

int cmd_compare(const std::vector<std::string>& files,
                const std::optional<GenArgs>& gen, int repetitions,
                const GlobalOptions& global) {
  std::vector<std::pair<std::string, cutbat::Network>> instances;
  for (const std::string& path : files)
    instances.push_back({path, load_and_check(path)});
  if (gen) {
    for (int i = 0; i < gen->count; ++i) {
      cutbat::GenSpec spec;
      spec.node_count = gen->nodes;
      spec.arc_count = gen->arcs;
      spec.seed = global.seed + static_cast<std::uint64_t>(i);
      std::string name = "gen-n" + std::to_string(gen->nodes) + "-m" +
                         std::to_string(gen->arcs) + "-s" +
                         std::to_string(spec.seed);
      instances.push_back({name, cutbat::generate_network(spec)});
    }
  }

  cutbat::BenchReport report =
      cutbat::run_compare(instances, repetitions, global.seed);
  std::cout << cutbat::emit_report(report, global.format == "machine"
                                               ? cutbat::ReportFormat::machine
                                               : cutbat::ReportFormat::text);
  return report.all_equal() ? kExitOk : kExitMismatch;
}

int cmd_gen(int nodes, int arcs, std::optional<double> probability,
            bool no_probabilities, const std::string& out_path,
            const GlobalOptions& global) {
  cutbat::GenSpec spec;
  spec.node_count = nodes;
  spec.arc_count = arcs;
  spec.seed = global.seed;
  if (no_probabilities)
    spec.arc_probability.reset();
  else if (probability)
    spec.arc_probability = *probability;
  cutbat::Network net = cutbat::generate_network(spec);
  std::string text = cutbat::serialize(net);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    out << text;
  }
  return kExitOk;
}

int cmd_report(const std::string& path, const GlobalOptions& global) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  cutbat::BenchReport report = cutbat::parse_report(buffer.str());
  std::cout << cutbat::emit_report(report, global.format == "machine"
                                               ? cutbat::ReportFormat::machine
                                               : cutbat::ReportFormat::text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal-cut enumeration and reliability toolkit"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--seed", global.seed, "Seed for generated instances");
  app.add_option("--format", global.format, "Report format")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--limit-mc", global.limit_mc,
                 "Largest catalog accepted by exact inclusion-exclusion");
  app.add_option("--limit-arcs", global.limit_arcs,
                 "Largest arc count accepted by exhaustive sweeps");

  auto* validate_cmd = app.add_subcommand("validate", "Check a network file");
  std::string validate_file;
  validate_cmd->add_option("file", validate_file)->required();

  auto* layers_cmd =
      app.add_subcommand("layers", "Print the layer decomposition");
  std::string layers_file;
  layers_cmd->add_option("file", layers_file)->required();

  auto* renumber_cmd =
      app.add_subcommand("renumber", "Relabel nodes into layer order");
  std::string renumber_file;
  renumber_cmd->add_option("file", renumber_file)->required();

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "Enumerate all minimal cuts");
  std::string enumerate_file;
  std::string algo = "recursive";
  std::string check = "plsa";
  bool no_prune_isolated = false;
  bool no_prune_parent = false;
  enumerate_cmd->add_option("file", enumerate_file)->required();
  enumerate_cmd->add_option("--algo", algo)
      ->check(CLI::IsMember({"baseline", "recursive", "oracle"}));
  enumerate_cmd->add_option("--check", check)
      ->check(CLI::IsMember({"plsa", "edge-node"}));
  enumerate_cmd->add_flag("--no-prune-isolated", no_prune_isolated,
                          "Keep sons condemned with their offspring");
  enumerate_cmd->add_flag("--no-prune-parent", no_prune_parent,
                          "Never remove parents from the frontier");

  auto* reliability_cmd =
      app.add_subcommand("reliability", "Two-terminal reliability");
  std::string reliability_file;
  std::string method = "iet";
  double uniform_p = -1.0;
  reliability_cmd->add_option("file", reliability_file)->required();
  reliability_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"iet", "brute"}));
  reliability_cmd->add_option("--p", uniform_p,
                              "Uniform working probability per arc");

  auto* compare_cmd =
      app.add_subcommand("compare", "Differential benchmark of enumerators");
  std::vector<std::string> compare_files;
  int gen_nodes = 0;
  int gen_arcs = 0;
  int gen_count = 1;
  int repetitions = 5;
  compare_cmd->add_option("files", compare_files);
  compare_cmd->add_option("--gen-nodes", gen_nodes);
  compare_cmd->add_option("--gen-arcs", gen_arcs);
  compare_cmd->add_option("--gen-count", gen_count);
  compare_cmd->add_option("--reps", repetitions);

  auto* gen_cmd = app.add_subcommand("gen", "Emit a seeded random instance");
  int nodes = 0;
  int arcs = 0;
  double gen_p = -1.0;
  bool no_probabilities = false;
  std::string out_path;
  gen_cmd->add_option("--nodes", nodes)->required();
  gen_cmd->add_option("--arcs", arcs)->required();
  gen_cmd->add_option("--p", gen_p, "Working probability per arc");
  gen_cmd->add_flag("--no-probabilities", no_probabilities);
  gen_cmd->add_option("--out", out_path);

  auto* report_cmd =
      app.add_subcommand("report", "Re-emit a machine report");
  std::string report_file;
  report_cmd->add_option("file", report_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*validate_cmd) return cmd_validate(validate_file);
    if (*layers_cmd) return cmd_layers(layers_file);
    if (*renumber_cmd) return cmd_renumber(renumber_file);
    if (*enumerate_cmd)
      return cmd_enumerate(enumerate_file, algo, check, no_prune_isolated,
                           no_prune_parent, global);
    if (*reliability_cmd)
      return cmd_reliability(
          reliability_file, method,
          uniform_p >= 0.0 ? std::optional<double>(uniform_p) : std::nullopt,
          global);
    if (*compare_cmd) {
      std::optional<GenArgs> gen;
      if (gen_nodes > 0) gen = GenArgs{gen_nodes, gen_arcs, gen_count};
      return cmd_compare(compare_files, gen, repetitions, global);
    }
    if (*gen_cmd)
      return cmd_gen(nodes, arcs,
                     gen_p >= 0.0 ? std::optional<double>(gen_p)
                                  : std::nullopt,
                     no_probabilities, out_path, global);
    if (*report_cmd) return cmd_report(report_file, global);
  } catch (const cutbat::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

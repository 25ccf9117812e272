#include <cstdio>
#include <exception>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "rwring/bench.hpp"
#include "rwring/graph.hpp"

namespace {

using rwring::bench::GenSpec;
using rwring::bench::RunConfig;

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

void add_common_options(CLI::App* cmd, RunConfig& config) {
  auto* input = cmd->add_option("--input", config.input_path,
                                "Edge-list file (two integer ids per line, '#' comments)");
  auto* gen = cmd->add_option(
      "--gen", config.gen_spec,
      "Generator spec, e.g. er:n=1000,p=0.02 or planted:n=128,groups=4,deg=16,mix=0.1");
  input->excludes(gen);
  gen->excludes(input);
  cmd->add_option("--seed", config.seed, "Master seed")->capture_default_str();
  cmd->add_option("--walks", config.walks,
                  "Walk count for length/modularity estimates (0 = max(10n, 1e4))")
      ->capture_default_str();
  cmd->add_option("--null-samples", config.null_samples,
                  "Configuration-model samples for the null term")
      ->capture_default_str();
  cmd->add_option("--community-walks", config.community_walks,
                  "Walks per profiled seed node")
      ->capture_default_str();
  cmd->add_option("--seeds-sample", config.seeds_sample,
                  "Seed nodes profiled (0 = all up to 1e5 nodes, 1e4 sampled above)")
      ->capture_default_str();
  cmd->add_option("--rank", config.rank, "Which sweep local optimum to report")
      ->capture_default_str();
  cmd->add_option("--starts", [&config](const CLI::results_t& res) {
        if (res[0] == "uniform") {
          config.starts = rwring::StartPolicy::uniform;
        } else if (res[0] == "degree") {
          config.starts = rwring::StartPolicy::degree_proportional;
        } else {
          return false;
        }
        return true;
      },
      "Walk start policy: uniform | degree")
      ->default_str("uniform");
  cmd->add_option("--nm-threshold", config.nm_threshold,
                  "Skip greedy Newman modularity above this node count")
      ->capture_default_str();
  cmd->add_option("--threads", config.threads, "Worker threads (results do not depend on this)")
      ->capture_default_str();
  cmd->add_option("--format", config.format, "Output format: tsv | json")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", config.output, "Output path (default stdout)");
}

void emit(const rwring::bench::OutputTable& table, const RunConfig& config) {
  std::string text = rwring::bench::render(table, config.format);
  if (config.output.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    std::ofstream out(config.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + config.output);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ring-terminated random-walk community analytics"};
  app.require_subcommand(1);

  RunConfig config;

  // generate <kind> [params]
  auto* generate = app.add_subcommand("generate", "Write a synthetic graph as an edge list");
  generate->require_subcommand(1);
  std::uint64_t g_seed = 42;
  std::string g_output, g_truth;
  std::uint64_t g_n = 0, g_children = 2, g_groups = 0, g_rows = 0, g_cols = 0, g_d = 0;
  double g_p = 0.0, g_deg = 0.0, g_mix = 0.0;
  struct KindDef {
    CLI::App* cmd;
    const char* kind;
  };
  std::vector<KindDef> kinds;
  auto add_kind = [&](const char* name, const char* desc) {
    auto* k = generate->add_subcommand(name, desc);
    k->add_option("--seed", g_seed, "Generator seed")->capture_default_str();
    k->add_option("--output", g_output, "Edge-list path (default stdout)");
    kinds.push_back({k, name});
    return k;
  };
  auto* k_ring = add_kind("ring", "Cycle of n nodes");
  k_ring->add_option("--n", g_n, "Node count")->required();
  auto* k_tree = add_kind("tree", "Complete children-ary tree truncated to n nodes");
  k_tree->add_option("--n", g_n, "Node count")->required();
  k_tree->add_option("--children", g_children, "Children per node")->capture_default_str();
  auto* k_lattice = add_kind("lattice", "Non-periodic 2-D grid");
  k_lattice->add_option("--rows", g_rows, "Rows")->required();
  k_lattice->add_option("--cols", g_cols, "Columns")->required();
  auto* k_er = add_kind("er", "Erdos-Renyi G(n, p)");
  k_er->add_option("--n", g_n, "Node count")->required();
  k_er->add_option("--p", g_p, "Edge probability")->required();
  auto* k_planted = add_kind("planted", "Planted partition benchmark (truth sidecar)");
  k_planted->add_option("--n", g_n, "Node count")->required();
  k_planted->add_option("--groups", g_groups, "Group count")->required();
  k_planted->add_option("--deg", g_deg, "Expected total degree")->required();
  k_planted->add_option("--mix", g_mix, "Out-degree fraction")->required();
  k_planted->add_option("--truth", g_truth, "Ground-truth path (default OUTPUT.truth)");
  auto* k_regular = add_kind("regular", "Random d-regular simple graph");
  k_regular->add_option("--n", g_n, "Node count")->required();
  k_regular->add_option("--d", g_d, "Degree")->required();

  auto* rwm = app.add_subcommand("rwm", "Random walk modularity of one graph");
  add_common_options(rwm, config);

  auto* community = app.add_subcommand("community", "Seeded local community with sweep profile");
  add_common_options(community, config);
  std::uint64_t seed_node = 0;
  community->add_option("--seed-node", seed_node, "Seed node (input id space)")->required();

  auto* report = app.add_subcommand("report", "Full modularity report row (RM NM CM AvgC ARL AvgS)");
  add_common_options(report, config);

  auto* repro = app.add_subcommand("repro", "Built-in benchmark recipes");
  add_common_options(repro, config);
  std::string experiment;
  repro->add_option("experiment", experiment,
                    "fig-er | fig-gl | fig-er-mod | fig-gl-mod | table-deterministic | fig-accuracy")
      ->required();
  repro->add_option("--reps", config.reps, "Repetitions per grid point")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (generate->parsed()) {
      GenSpec spec;
      for (const auto& kd : kinds) {
        if (!kd.cmd->parsed()) continue;
        spec.kind = kd.kind;
        auto set_u64 = [&](const char* key, std::uint64_t v) {
          spec.params[key] = std::to_string(v);
        };
        auto set_dbl = [&](const char* key, double v) {
          char buf[64];
          std::snprintf(buf, sizeof(buf), "%.10g", v);
          spec.params[key] = buf;
        };
        if (spec.kind == "ring") set_u64("n", g_n);
        if (spec.kind == "tree") {
          set_u64("n", g_n);
          set_u64("children", g_children);
        }
        if (spec.kind == "lattice") {
          set_u64("rows", g_rows);
          set_u64("cols", g_cols);
        }
        if (spec.kind == "er") {
          set_u64("n", g_n);
          set_dbl("p", g_p);
        }
        if (spec.kind == "planted") {
          set_u64("n", g_n);
          set_u64("groups", g_groups);
          set_dbl("deg", g_deg);
          set_dbl("mix", g_mix);
        }
        if (spec.kind == "regular") {
          set_u64("n", g_n);
          set_u64("d", g_d);
        }
      }
      rwring::bench::cmd_generate(spec, g_seed, g_output, g_truth);
    } else if (rwm->parsed()) {
      config.command = "rwm";
      emit(rwring::bench::cmd_rwm(config), config);
    } else if (community->parsed()) {
      config.command = "community";
      emit(rwring::bench::cmd_community(config, seed_node), config);
    } else if (report->parsed()) {
      config.command = "report";
      emit(rwring::bench::cmd_report(config), config);
    } else if (repro->parsed()) {
      config.command = "repro " + experiment;
      emit(rwring::bench::cmd_repro(config, experiment), config);
    }
  } catch (const rwring::bench::UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const rwring::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  }
  return 0;
}

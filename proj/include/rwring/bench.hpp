#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rwring/graph.hpp"
#include "rwring/measures.hpp"

namespace rwring::bench {

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Generator spec string: "kind:key=val,key=val", e.g. "er:n=1000,p=0.02" or
// "planted:n=128,groups=4,deg=16,mix=0.1". An optional seed=... overrides
// the run's master seed for the generation step only.
struct GenSpec {
  std::string kind;
  std::map<std::string, std::string> params;

  std::string canonical() const;
};
GenSpec parse_gen_spec(const std::string& text);

struct BuiltGraph {
  Graph graph;
  std::vector<std::uint64_t> original_ids;  // identity for generated graphs
  std::optional<Partition> truth;           // planted graphs only
  std::string name;
};
BuiltGraph build_from_spec(const GenSpec& spec, std::uint64_t master_seed);
BuiltGraph load_input(const std::string& path);

// Resolved invocation; every field is echoed into the output header so a
// result file is self-describing.
struct RunConfig {
  std::string command;
  std::string input_path;  // exactly one of input_path / gen_spec
  std::string gen_spec;
  std::uint64_t seed = 42;
  std::uint64_t walks = 0;  // 0 = per-command default
  std::uint32_t null_samples = 3;
  std::uint64_t community_walks = 1000;
  std::uint64_t seeds_sample = 0;  // 0 = per-command default
  std::uint32_t rank = 0;
  StartPolicy starts = StartPolicy::uniform;
  NodeId nm_threshold = 20000;
  int threads = 1;
  std::uint32_t reps = 20;  // repro recipes
  std::string format = "tsv";
  std::string output;  // empty = stdout
};

using Cell = std::variant<std::int64_t, double, std::string>;

struct OutputTable {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string render_tsv(const OutputTable& table);
std::string render_json(const OutputTable& table);
std::string render(const OutputTable& table, const std::string& format);

// Writes the edge list (and for planted graphs the ground-truth sidecar)
// in the canonical text format.
void cmd_generate(const GenSpec& spec, std::uint64_t seed,
                  const std::string& output, const std::string& truth_path);

OutputTable cmd_rwm(const RunConfig& config);
OutputTable cmd_community(const RunConfig& config, std::uint64_t seed_node);
OutputTable cmd_report(const RunConfig& config);
OutputTable cmd_repro(const RunConfig& config, const std::string& experiment);

// Recipe cores, exposed so tests can assert on the numbers directly.
struct GridStat {
  double x = 0.0;
  double mean = 0.0;
  double se = 0.0;
};
std::vector<double> er_p_grid();        // 0.01 .. 0.10
std::vector<double> planted_mix_grid();  // 0.05 .. 0.45
std::vector<GridStat> er_arl_sweep(const RunConfig& config);
std::vector<GridStat> planted_arl_sweep(const RunConfig& config);
std::vector<GridStat> planted_accuracy_sweep(const RunConfig& config);

}  // namespace rwring::bench

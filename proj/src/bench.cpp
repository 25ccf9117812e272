#include "rwring/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "rwring/generators.hpp"
#include "rwring/local.hpp"
#include "rwring/rng.hpp"

namespace rwring::bench {

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string cell_text(const Cell& cell) {
  if (std::holds_alternative<std::int64_t>(cell))
    return std::to_string(std::get<std::int64_t>(cell));
  if (std::holds_alternative<double>(cell))
    return fmt_double(std::get<double>(cell));
  return std::get<std::string>(cell);
}

std::uint64_t parse_u64_param(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (...) {
    throw UsageError("generator spec: bad integer for '" + key + "': " + value);
  }
}

double parse_double_param(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (...) {
    throw UsageError("generator spec: bad number for '" + key + "': " + value);
  }
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

// Mean and standard error of per-repetition values.
GridStat summarize(double x, const std::vector<double>& values) {
  GridStat s;
  s.x = x;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.se = std::sqrt(ss / static_cast<double>(values.size() - 1) /
                     static_cast<double>(values.size()));
  }
  return s;
}

std::uint64_t repro_task_seed(std::uint64_t master, std::size_t point,
                              std::uint32_t rep, std::uint32_t slot) {
  return derive_seed(master, streams::repro,
                     (static_cast<std::uint64_t>(point) * 100000 + rep) * 4 + slot);
}

}  // namespace

GenSpec parse_gen_spec(const std::string& text) {
  GenSpec spec;
  std::size_t colon = text.find(':');
  spec.kind = text.substr(0, colon);
  if (colon != std::string::npos) {
    std::stringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      if (item.empty()) continue;
      std::size_t eq = item.find('=');
      if (eq == std::string::npos)
        throw UsageError("generator spec: expected key=value, got '" + item + "'");
      spec.params[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }

  static const std::map<std::string, std::vector<std::string>> allowed = {
      {"er", {"n", "p", "seed"}},
      {"planted", {"n", "groups", "deg", "mix", "seed"}},
      {"ring", {"n"}},
      {"tree", {"n", "children"}},
      {"lattice", {"rows", "cols"}},
      {"regular", {"n", "d", "seed"}},
  };
  auto it = allowed.find(spec.kind);
  if (it == allowed.end())
    throw UsageError("generator spec: unknown kind '" + spec.kind + "'");
  for (const auto& [key, value] : spec.params) {
    (void)value;
    if (std::find(it->second.begin(), it->second.end(), key) == it->second.end())
      throw UsageError("generator spec: unknown key '" + key + "' for " + spec.kind);
  }
  return spec;
}

std::string GenSpec::canonical() const {
  std::string out = kind;
  char sep = ':';
  for (const auto& [key, value] : params) {
    out += sep;
    out += key + "=" + value;
    sep = ',';
  }
  return out;
}

BuiltGraph build_from_spec(const GenSpec& spec, std::uint64_t master_seed) {
  auto need = [&](const std::string& key) -> const std::string& {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
      throw UsageError("generator spec: missing '" + key + "' for " + spec.kind);
    return it->second;
  };
  std::uint64_t seed = master_seed;
  if (auto it = spec.params.find("seed"); it != spec.params.end())
    seed = parse_u64_param("seed", it->second);

  BuiltGraph out;
  out.name = spec.canonical();
  if (spec.kind == "er") {
    out.graph = gen_er(static_cast<NodeId>(parse_u64_param("n", need("n"))),
                       parse_double_param("p", need("p")), seed);
  } else if (spec.kind == "planted") {
    PlantedSpec ps;
    ps.nodes = static_cast<NodeId>(parse_u64_param("n", need("n")));
    ps.groups = static_cast<NodeId>(parse_u64_param("groups", need("groups")));
    ps.avg_degree = parse_double_param("deg", need("deg"));
    ps.mix = parse_double_param("mix", need("mix"));
    PlantedGraph pg = gen_planted(ps, seed);
    out.graph = std::move(pg.graph);
    out.truth = std::move(pg.truth);
  } else if (spec.kind == "ring") {
    out.graph = gen_ring(static_cast<NodeId>(parse_u64_param("n", need("n"))));
  } else if (spec.kind == "tree") {
    std::uint64_t children = 2;
    if (auto it = spec.params.find("children"); it != spec.params.end())
      children = parse_u64_param("children", it->second);
    out.graph = gen_tree(static_cast<NodeId>(parse_u64_param("n", need("n"))),
                         static_cast<NodeId>(children));
  } else if (spec.kind == "lattice") {
    out.graph = gen_lattice(static_cast<NodeId>(parse_u64_param("rows", need("rows"))),
                            static_cast<NodeId>(parse_u64_param("cols", need("cols"))));
  } else if (spec.kind == "regular") {
    out.graph = gen_regular(static_cast<NodeId>(parse_u64_param("n", need("n"))),
                            static_cast<NodeId>(parse_u64_param("d", need("d"))), seed);
  }
  out.original_ids.resize(out.graph.node_count());
  for (NodeId v = 0; v < out.graph.node_count(); ++v) out.original_ids[v] = v;
  return out;
}

BuiltGraph load_input(const std::string& path) {
  LoadedGraph loaded = load_edge_list_file(path);
  BuiltGraph out;
  out.graph = std::move(loaded.graph);
  out.original_ids = std::move(loaded.original_ids);
  out.name = std::filesystem::path(path).stem().string();
  return out;
}

namespace {

BuiltGraph acquire_graph(const RunConfig& config) {
  const bool has_input = !config.input_path.empty();
  const bool has_gen = !config.gen_spec.empty();
  if (has_input == has_gen)
    throw UsageError("exactly one of --input and --gen is required");
  if (has_input) return load_input(config.input_path);
  return build_from_spec(parse_gen_spec(config.gen_spec), config.seed);
}

const char* starts_name(StartPolicy p) {
  return p == StartPolicy::uniform ? "uniform" : "degree";
}

void echo_config(OutputTable& table, const RunConfig& config) {
  std::string cmd = "rwring " + config.command;
  if (!config.input_path.empty()) cmd += " --input " + config.input_path;
  if (!config.gen_spec.empty()) cmd += " --gen " + config.gen_spec;
  cmd += " --seed " + std::to_string(config.seed);
  cmd += " --walks " + std::to_string(config.walks);
  cmd += " --null-samples " + std::to_string(config.null_samples);
  cmd += " --community-walks " + std::to_string(config.community_walks);
  cmd += " --seeds-sample " + std::to_string(config.seeds_sample);
  cmd += " --rank " + std::to_string(config.rank);
  cmd += std::string(" --starts ") + starts_name(config.starts);
  cmd += " --nm-threshold " + std::to_string(config.nm_threshold);
  cmd += " --threads " + std::to_string(config.threads);
  cmd += " --reps " + std::to_string(config.reps);
  cmd += " --format " + config.format;
  cmd += " --output " + (config.output.empty() ? std::string("-") : config.output);
  table.meta.emplace_back("command", cmd);
}

void write_text(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + output);
  out << text;
  if (!out) throw std::runtime_error("failed writing output file: " + output);
}

}  // namespace

std::string render_tsv(const OutputTable& table) {
  std::string out;
  for (const auto& [key, value] : table.meta)
    out += "# " + key + "\t" + value + "\n";
  if (!table.columns.empty()) {
    out += "# columns:";
    for (const auto& c : table.columns) out += "\t" + c;
    out += "\n";
  }
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += '\t';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const OutputTable& table) {
  nlohmann::ordered_json j;
  for (const auto& [key, value] : table.meta) j["meta"][key] = value;
  j["columns"] = table.columns;
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json jr = nlohmann::ordered_json::array();
    for (const auto& cell : row) {
      if (std::holds_alternative<std::int64_t>(cell))
        jr.push_back(std::get<std::int64_t>(cell));
      else if (std::holds_alternative<double>(cell))
        jr.push_back(std::get<double>(cell));
      else
        jr.push_back(std::get<std::string>(cell));
    }
    rows.push_back(std::move(jr));
  }
  return j.dump(2) + "\n";
}

std::string render(const OutputTable& table, const std::string& format) {
  if (format == "json") return render_json(table);
  if (format == "tsv") return render_tsv(table);
  throw UsageError("unknown output format: " + format);
}

void cmd_generate(const GenSpec& spec, std::uint64_t seed,
                  const std::string& output, const std::string& truth_path) {
  BuiltGraph built = build_from_spec(spec, seed);

  if (spec.kind == "planted") {
    std::string sidecar = truth_path;
    if (sidecar.empty()) {
      if (output.empty())
        throw UsageError("planted generation needs --output (or --truth) for the "
                         "ground-truth sidecar");
      sidecar = output + ".truth";
    }
    std::ofstream ts(sidecar, std::ios::binary);
    if (!ts) throw std::runtime_error("cannot open truth file: " + sidecar);
    write_partition(*built.truth, ts);
  }

  std::ostringstream edges;
  write_edge_list(built.graph, edges);
  write_text(edges.str(), output);
}

OutputTable cmd_rwm(const RunConfig& config) {
  BuiltGraph built = acquire_graph(config);
  RwmOptions opt;
  opt.walks = config.walks;
  opt.null_samples = config.null_samples;
  opt.starts = config.starts;
  opt.seed = config.seed;
  opt.threads = config.threads;

  Timer timer;
  RwmEstimate est = random_walk_modularity(built.graph, opt);
  double elapsed = timer.seconds();

  auto transitions = [](const RwlEstimate& e) {
    return static_cast<std::int64_t>(
        std::llround(e.mean_length * static_cast<double>(e.walk_count)) +
        static_cast<std::int64_t>(e.walk_count));
  };
  std::int64_t total_transitions = transitions(est.l_g) + transitions(est.l_gr);
  std::uint64_t total_walks = est.l_g.walk_count + est.l_gr.walk_count;
  std::fprintf(stderr, "rwm: %.3f s wall, %.0f walks/s, %lld transitions\n", elapsed,
               static_cast<double>(total_walks) / elapsed,
               static_cast<long long>(total_transitions));

  OutputTable table;
  echo_config(table, config);
  table.meta.emplace_back("network", built.name);
  table.columns = {"q",       "q_se",     "l_g",          "l_g_se",     "l_gr",
                   "l_gr_se", "walks",    "null_samples", "transitions"};
  table.rows.push_back({est.q, est.q_std_error(), est.l_g.mean_length,
                        est.l_g.std_error, est.l_gr.mean_length, est.l_gr.std_error,
                        static_cast<std::int64_t>(est.l_g.walk_count),
                        static_cast<std::int64_t>(est.null_samples),
                        total_transitions});
  return table;
}

OutputTable cmd_community(const RunConfig& config, std::uint64_t seed_node) {
  BuiltGraph built = acquire_graph(config);

  std::unordered_map<std::uint64_t, NodeId> to_internal;
  to_internal.reserve(built.original_ids.size());
  for (NodeId v = 0; v < built.graph.node_count(); ++v)
    to_internal[built.original_ids[v]] = v;
  auto it = to_internal.find(seed_node);
  if (it == to_internal.end())
    throw std::invalid_argument("seed node not present in graph: " +
                                std::to_string(seed_node));

  FindOptions opt;
  opt.walks = config.walks ? config.walks : 1000;
  opt.rank = config.rank;
  opt.seed = config.seed;

  Timer timer;
  CommunitySearch search = find_community_detailed(built.graph, it->second, opt);
  std::fprintf(stderr, "community: %.3f s wall\n", timer.seconds());

  OutputTable table;
  echo_config(table, config);
  table.meta.emplace_back("network", built.name);
  table.meta.emplace_back("seed_node", std::to_string(seed_node));
  table.meta.emplace_back("rank_used", std::to_string(search.community.rank));
  table.meta.emplace_back("conductance", fmt_double(search.community.conductance));
  table.meta.emplace_back("size", std::to_string(search.community.members.size()));
  std::string members;
  for (NodeId v : search.community.members) {
    if (!members.empty()) members += ' ';
    members += std::to_string(built.original_ids[v]);
  }
  table.meta.emplace_back("members", members);

  std::vector<std::uint8_t> is_min(search.sv.nodes.size(), 0);
  for (std::uint32_t k : search.profile.local_minima) is_min[k] = 1;
  table.columns = {"i", "node", "score", "phi", "local_min"};
  for (std::size_t i = 0; i < search.sv.nodes.size(); ++i) {
    table.rows.push_back(
        {static_cast<std::int64_t>(i),
         static_cast<std::int64_t>(built.original_ids[search.sv.nodes[i]]),
         search.sv.scores[i], search.profile.phi[i],
         static_cast<std::int64_t>(is_min[i])});
  }
  return table;
}

OutputTable cmd_report(const RunConfig& config) {
  BuiltGraph built = acquire_graph(config);
  ReportOptions opt;
  opt.walks = config.walks;
  opt.null_samples = config.null_samples;
  opt.community_walks = config.community_walks;
  opt.seed_sample = config.seeds_sample;
  opt.nm_threshold = config.nm_threshold;
  opt.starts = config.starts;
  opt.seed = config.seed;
  opt.threads = config.threads;

  Timer timer;
  ModularityReport report = full_report(built.graph, opt);
  std::fprintf(stderr, "report: %.3f s wall\n", timer.seconds());

  OutputTable table;
  echo_config(table, config);
  table.columns = {"network", "RM", "NM", "CM", "AvgC", "ARL", "AvgS"};
  table.rows.push_back({built.name, report.rwm,
                        report.newman ? *report.newman : -1.0, report.cm,
                        report.avg_conductance, report.arl, report.avg_size});
  return table;
}

std::vector<double> er_p_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 10; ++i) grid.push_back(0.01 * i);
  return grid;
}

std::vector<double> planted_mix_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 9; ++i) grid.push_back(0.05 * i);
  return grid;
}

namespace {

constexpr NodeId kErNodes = 1000;
constexpr NodeId kPlantedNodes = 128;
constexpr NodeId kPlantedGroups = 4;
constexpr double kPlantedDegree = 16.0;

PlantedSpec planted_point(double mix) {
  PlantedSpec spec;
  spec.nodes = kPlantedNodes;
  spec.groups = kPlantedGroups;
  spec.avg_degree = kPlantedDegree;
  spec.mix = mix;
  return spec;
}

}  // namespace

std::vector<GridStat> er_arl_sweep(const RunConfig& config) {
  std::vector<GridStat> stats;
  auto grid = er_p_grid();
  for (std::size_t pi = 0; pi < grid.size(); ++pi) {
    std::vector<double> values;
    for (std::uint32_t rep = 0; rep < config.reps; ++rep) {
      Graph g = gen_er(kErNodes, grid[pi], repro_task_seed(config.seed, pi, rep, 0));
      RwlOptions opt;
      opt.walks = config.walks;
      opt.starts = config.starts;
      opt.seed = repro_task_seed(config.seed, pi, rep, 1);
      opt.threads = config.threads;
      values.push_back(average_rwl(g, opt).mean_length);
    }
    stats.push_back(summarize(grid[pi], values));
  }
  return stats;
}

std::vector<GridStat> planted_arl_sweep(const RunConfig& config) {
  std::vector<GridStat> stats;
  auto grid = planted_mix_grid();
  for (std::size_t mi = 0; mi < grid.size(); ++mi) {
    std::vector<double> values;
    for (std::uint32_t rep = 0; rep < config.reps; ++rep) {
      PlantedGraph pg =
          gen_planted(planted_point(grid[mi]), repro_task_seed(config.seed, mi, rep, 0));
      RwlOptions opt;
      opt.walks = config.walks;
      opt.starts = config.starts;
      opt.seed = repro_task_seed(config.seed, mi, rep, 1);
      opt.threads = config.threads;
      values.push_back(average_rwl(pg.graph, opt).mean_length);
    }
    stats.push_back(summarize(grid[mi], values));
  }
  return stats;
}

std::vector<GridStat> planted_accuracy_sweep(const RunConfig& config) {
  std::vector<GridStat> stats;
  auto grid = planted_mix_grid();
  for (std::size_t mi = 0; mi < grid.size(); ++mi) {
    std::vector<double> values;
    for (std::uint32_t rep = 0; rep < config.reps; ++rep) {
      PlantedGraph pg =
          gen_planted(planted_point(grid[mi]), repro_task_seed(config.seed, mi, rep, 0));
      const Graph& g = pg.graph;

      std::vector<std::vector<NodeId>> truth(pg.truth.community_count);
      for (NodeId v = 0; v < g.node_count(); ++v)
        truth[pg.truth.community[v]].push_back(v);

      // The sweep yields one candidate community per local optimum; all of
      // them compete for the best match, one walk run per seed.
      std::vector<NodeId> seeds = profile_seeds(g, 0, 0);
      std::vector<std::vector<NodeId>> found;
      std::uint64_t walk_seed = repro_task_seed(config.seed, mi, rep, 1);
      for (NodeId s : seeds) {
        FindOptions opt;
        opt.walks = config.community_walks;
        opt.rank = 0;
        opt.seed = derive_seed(walk_seed, streams::community, s);
        CommunitySearch search = find_community_detailed(g, s, opt);
        if (search.profile.local_minima.empty()) {
          found.push_back(std::move(search.community.members));
        } else {
          for (std::uint32_t k : search.profile.local_minima)
            found.emplace_back(search.sv.nodes.begin(),
                               search.sv.nodes.begin() + k + 1);
        }
      }
      values.push_back(best_match_score(truth, found));
    }
    stats.push_back(summarize(grid[mi], values));
  }
  return stats;
}

namespace {

OutputTable grid_table(const RunConfig& config, const char* x_name,
                       const std::vector<GridStat>& stats, bool ceiling) {
  OutputTable table;
  echo_config(table, config);
  table.columns = {x_name, "mean", "se", "reps"};
  if (ceiling) table.columns.push_back("ceiling");
  for (const auto& s : stats) {
    std::vector<Cell> row{s.x, s.mean, s.se,
                          static_cast<std::int64_t>(config.reps)};
    if (ceiling) row.push_back(1.0);
    table.rows.push_back(std::move(row));
  }
  return table;
}

// Shared by the modularity sweeps: RM / NM / CM on one generated graph.
struct ModValues {
  double rm, nm, cm;
};

ModValues measure_modularity(const Graph& g, const RunConfig& config,
                             std::uint64_t rwm_seed, std::uint64_t profile_seed,
                             std::uint64_t seeds_sample) {
  ModValues out{};
  RwmOptions rwm_opt;
  rwm_opt.walks = config.walks;
  rwm_opt.null_samples = config.null_samples;
  rwm_opt.starts = config.starts;
  rwm_opt.seed = rwm_seed;
  rwm_opt.threads = config.threads;
  out.rm = random_walk_modularity(g, rwm_opt).q;

  out.nm = greedy_newman(g).q;

  std::vector<NodeId> seeds = profile_seeds(g, seeds_sample, profile_seed);
  ConductanceProfile profile = conductance_profile(
      g, seeds, config.community_walks, profile_seed, config.threads);
  out.cm = conductance_modularity(profile);
  return out;
}

OutputTable modularity_sweep(const RunConfig& config, bool planted) {
  auto grid = planted ? planted_mix_grid() : er_p_grid();
  // ER profiling over all 1000 seeds per rep is disproportionate for a sweep;
  // default to a 200-seed sample unless the caller pins one.
  std::uint64_t seeds_sample = config.seeds_sample;
  if (!planted && seeds_sample == 0) seeds_sample = 200;

  OutputTable table;
  echo_config(table, config);
  table.meta.emplace_back("profile_seeds",
                          seeds_sample ? std::to_string(seeds_sample) : "all");
  table.columns = {planted ? "mix" : "p", "rm", "rm_se", "nm",   "nm_se",
                   "cm",                  "cm_se", "reps"};
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    std::vector<double> rm, nm, cm;
    for (std::uint32_t rep = 0; rep < config.reps; ++rep) {
      Graph g;
      if (planted) {
        g = gen_planted(planted_point(grid[gi]),
                        repro_task_seed(config.seed, gi, rep, 0))
                .graph;
      } else {
        g = gen_er(kErNodes, grid[gi], repro_task_seed(config.seed, gi, rep, 0));
      }
      ModValues v = measure_modularity(g, config,
                                       repro_task_seed(config.seed, gi, rep, 1),
                                       repro_task_seed(config.seed, gi, rep, 2),
                                       seeds_sample);
      rm.push_back(v.rm);
      nm.push_back(v.nm);
      cm.push_back(v.cm);
    }
    GridStat rm_s = summarize(grid[gi], rm);
    GridStat nm_s = summarize(grid[gi], nm);
    GridStat cm_s = summarize(grid[gi], cm);
    table.rows.push_back({grid[gi], rm_s.mean, rm_s.se, nm_s.mean, nm_s.se,
                          cm_s.mean, cm_s.se,
                          static_cast<std::int64_t>(config.reps)});
  }
  return table;
}

OutputTable deterministic_table(const RunConfig& config) {
  OutputTable table;
  echo_config(table, config);
  table.columns = {"network", "rm", "rm_se", "nm", "cm", "cm_se", "reps"};

  struct Entry {
    const char* name;
    Graph graph;
  };
  std::vector<Entry> entries;
  entries.push_back({"ring", gen_ring(1000)});
  entries.push_back({"tree", gen_tree(1000, 2)});
  entries.push_back({"lattice", gen_lattice(100, 100)});

  for (std::size_t gi = 0; gi < entries.size(); ++gi) {
    const Graph& g = entries[gi].graph;
    double nm = greedy_newman(g).q;  // deterministic; no reps needed
    std::vector<double> rm, cm;
    for (std::uint32_t rep = 0; rep < config.reps; ++rep) {
      RwmOptions rwm_opt;
      rwm_opt.walks = config.walks;
      rwm_opt.null_samples = config.null_samples;
      rwm_opt.starts = config.starts;
      rwm_opt.seed = repro_task_seed(config.seed, gi, rep, 1);
      rwm_opt.threads = config.threads;
      rm.push_back(random_walk_modularity(g, rwm_opt).q);

      std::uint64_t profile_seed = repro_task_seed(config.seed, gi, rep, 2);
      std::vector<NodeId> seeds = profile_seeds(g, config.seeds_sample, profile_seed);
      cm.push_back(conductance_modularity(conductance_profile(
          g, seeds, config.community_walks, profile_seed, config.threads)));
    }
    GridStat rm_s = summarize(0, rm);
    GridStat cm_s = summarize(0, cm);
    table.rows.push_back({std::string(entries[gi].name), rm_s.mean, rm_s.se, nm,
                          cm_s.mean, cm_s.se,
                          static_cast<std::int64_t>(config.reps)});
  }
  return table;
}

}  // namespace

OutputTable cmd_repro(const RunConfig& config, const std::string& experiment) {
  Timer timer;
  OutputTable table;
  if (experiment == "fig-er") {
    table = grid_table(config, "p", er_arl_sweep(config), false);
  } else if (experiment == "fig-gl") {
    table = grid_table(config, "mix", planted_arl_sweep(config), false);
  } else if (experiment == "fig-er-mod") {
    table = modularity_sweep(config, false);
  } else if (experiment == "fig-gl-mod") {
    table = modularity_sweep(config, true);
  } else if (experiment == "table-deterministic") {
    table = deterministic_table(config);
  } else if (experiment == "fig-accuracy") {
    table = grid_table(config, "mix", planted_accuracy_sweep(config), true);
  } else {
    throw UsageError("unknown experiment: " + experiment);
  }
  std::fprintf(stderr, "repro %s: %.3f s wall\n", experiment.c_str(), timer.seconds());
  return table;
}

}  // namespace rwring::bench

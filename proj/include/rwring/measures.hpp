#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rwring/graph.hpp"
#include "rwring/walk.hpp"

namespace rwring {

// Q = sum_c (e_cc - a_c^2): e_cc the fraction of edges inside community c,
// a_c the fraction of edge endpoints in c.
double newman_modularity(const Graph& g, const Partition& part);

struct GreedyResult {
  Partition partition;
  double q = 0.0;
};

// Agglomerative modularity maximization: start from singletons, repeatedly
// merge the connected pair with the largest positive gain. Ties go to the
// smallest community-id pair. Intended for graphs up to ~1e4 nodes.
GreedyResult greedy_newman(const Graph& g);

// Per-seed first-local-optimum community conductances.
struct ProfileEntry {
  NodeId node = 0;
  double conductance = 1.0;
  std::uint32_t community_size = 0;
};

struct ConductanceProfile {
  std::vector<ProfileEntry> entries;
  double coverage = 0.0;  // |seeds| / n
};

ConductanceProfile conductance_profile(const Graph& g, std::span<const NodeId> seeds,
                                       std::uint64_t walks, std::uint64_t seed,
                                       int threads);

// C(G) = max over observed thresholds c of sqrt((1 - c) * f(c)), where f(c)
// is the fraction of profiled nodes whose community conductance is <= c.
double conductance_modularity(const ConductanceProfile& profile);

// |a intersect b| / sqrt(|a| * |b|); inputs are treated as sets.
double similarity(std::span<const NodeId> a, std::span<const NodeId> b);

// Mean over ground-truth communities of the best similarity achieved by any
// found community; 0 when nothing was found.
double best_match_score(const std::vector<std::vector<NodeId>>& truth,
                        const std::vector<std::vector<NodeId>>& found);

struct ModularityReport {
  double rwm = 0.0;
  std::optional<double> newman;  // absent above the greedy size threshold
  double cm = 0.0;
  double avg_conductance = 0.0;
  double arl = 0.0;
  double avg_size = 0.0;
};

struct ReportOptions {
  std::uint64_t walks = 0;            // length/modularity walks; 0 = max(10n, 1e4)
  std::uint32_t null_samples = 3;
  std::uint64_t community_walks = 1000;  // walks per profiled seed
  std::uint64_t seed_sample = 0;      // 0 = all nodes up to 1e5, else 1e4 sampled
  NodeId nm_threshold = 20000;        // skip greedy Newman above this
  StartPolicy starts = StartPolicy::uniform;
  std::uint64_t seed = 42;
  int threads = 1;
};

// Seed set for profiling: all non-isolated nodes, or a uniform sample of
// them when the graph is large (or sample_size is forced).
std::vector<NodeId> profile_seeds(const Graph& g, std::uint64_t sample_size,
                                  std::uint64_t seed);

ModularityReport full_report(const Graph& g, const ReportOptions& opt);

}  // namespace rwring

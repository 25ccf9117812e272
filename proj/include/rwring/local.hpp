#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "rwring/graph.hpp"

namespace rwring {

// Accumulated node tendencies around a seed: every node on a walk trail
// receives 1 / (ring_length * degree(node)) per walk that touches it.
struct ScoreTable {
  std::unordered_map<NodeId, double> score;
  std::uint64_t walks_done = 0;
};

// Touched nodes ordered by descending score (ties by ascending id), with the
// seed pinned to the front regardless of its score.
struct SupportVector {
  std::vector<NodeId> nodes;
  std::vector<double> scores;  // aligned with nodes
  NodeId seed = 0;
};

// phi[i] is the conductance of the first i+1 support-vector nodes.
struct SweepProfile {
  std::vector<double> phi;
  std::vector<std::uint32_t> local_minima;  // ascending indices
};

struct Community {
  std::vector<NodeId> members;  // support-vector prefix order
  double conductance = 1.0;
  NodeId seed = 0;
  std::uint32_t rank = 0;
};

// phi(S) = cut(S) / min(vol(S), vol(V\S)); 1.0 when the smaller side has
// zero volume. Duplicate members are counted once.
double conductance(const Graph& g, std::span<const NodeId> members);

ScoreTable accumulate_scores(const Graph& g, NodeId seed_node,
                             std::uint64_t walks, std::uint64_t rng_seed);

SupportVector order_scores(const ScoreTable& table, NodeId seed_node);

SweepProfile sweep(const Graph& g, const SupportVector& sv);

struct FindOptions {
  std::uint64_t walks = 1000;
  std::uint32_t rank = 0;  // which local optimum of the sweep, 0 = first
  std::uint64_t seed = 42;
};

// Full seeded pipeline: walks -> scores -> ordering -> sweep -> cut at the
// requested local optimum. Falls back to the last optimum when fewer exist,
// and to the global minimum prefix when the sweep has no local optimum.
Community find_community(const Graph& g, NodeId seed_node, const FindOptions& opt);

// Same pipeline keeping the intermediate stages (CLI output, diagnostics).
struct CommunitySearch {
  SupportVector sv;
  SweepProfile profile;
  Community community;
};
CommunitySearch find_community_detailed(const Graph& g, NodeId seed_node,
                                        const FindOptions& opt);

}  // namespace rwring

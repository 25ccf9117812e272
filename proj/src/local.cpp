#include "rwring/local.hpp"

#include <algorithm>
#include <stdexcept>

#include "rwring/rng.hpp"
#include "rwring/walk.hpp"

namespace rwring {

double conductance(const Graph& g, std::span<const NodeId> members) {
  if (members.empty()) throw std::invalid_argument("conductance: empty set");
  const NodeId n = g.node_count();
  std::vector<std::uint8_t> in_set(n, 0);
  std::uint64_t vol = 0;
  for (NodeId v : members) {
    if (v >= n) throw std::invalid_argument("conductance: member out of range");
    if (in_set[v]) continue;
    in_set[v] = 1;
    vol += g.degree(v);
  }
  std::uint64_t cut = 0;
  for (NodeId v : members) {
    // in_set guards duplicates above; count each member's row once
    if (in_set[v] == 1) {
      in_set[v] = 2;
      for (NodeId w : g.neighbors(v))
        if (!in_set[w]) ++cut;
    }
  }
  std::uint64_t total = g.adjacency().size();
  std::uint64_t smaller = std::min(vol, total - vol);
  if (smaller == 0) return 1.0;
  return static_cast<double>(cut) / static_cast<double>(smaller);
}

ScoreTable accumulate_scores(const Graph& g, NodeId seed_node,
                             std::uint64_t walks, std::uint64_t rng_seed) {
  if (seed_node >= g.node_count())
    throw std::invalid_argument("accumulate_scores: seed out of range");
  if (g.degree(seed_node) == 0)
    throw std::invalid_argument("accumulate_scores: isolated seed");
  if (walks < 1) throw std::invalid_argument("accumulate_scores: walks must be >= 1");

  ScoreTable table;
  table.walks_done = walks;
  RingWalker<Graph> walker(g);
  for (std::uint64_t i = 0; i < walks; ++i) {
    SplitMix64 rng(derive_seed(rng_seed, streams::walk, i));
    std::uint32_t l = walker.walk(seed_node, rng);
    auto trail = walker.trail();
    double inv_l = 1.0 / static_cast<double>(l);
    // The closing node repeats an earlier trail entry; credit it once.
    for (std::size_t k = 0; k + 1 < trail.size(); ++k) {
      NodeId v = trail[k];
      table.score[v] += inv_l / static_cast<double>(g.degree(v));
    }
  }
  return table;
}

SupportVector order_scores(const ScoreTable& table, NodeId seed_node) {
  std::vector<std::pair<NodeId, double>> items(table.score.begin(), table.score.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  SupportVector sv;
  sv.seed = seed_node;
  sv.nodes.reserve(items.size());
  sv.scores.reserve(items.size());
  sv.nodes.push_back(seed_node);
  sv.scores.push_back(table.score.count(seed_node) ? table.score.at(seed_node) : 0.0);
  for (const auto& [v, s] : items) {
    if (v == seed_node) continue;
    sv.nodes.push_back(v);
    sv.scores.push_back(s);
  }
  return sv;
}

SweepProfile sweep(const Graph& g, const SupportVector& sv) {
  SweepProfile profile;
  const std::size_t len = sv.nodes.size();
  if (len == 0) throw std::invalid_argument("sweep: empty support vector");
  profile.phi.resize(len);

  std::vector<std::uint8_t> in_set(g.node_count(), 0);
  const std::uint64_t total = g.adjacency().size();
  std::uint64_t vol = 0, cut = 0;
  for (std::size_t i = 0; i < len; ++i) {
    NodeId v = sv.nodes[i];
    vol += g.degree(v);
    for (NodeId w : g.neighbors(v)) {
      if (in_set[w])
        --cut;  // edge becomes internal
      else
        ++cut;
    }
    in_set[v] = 1;
    std::uint64_t smaller = std::min(vol, total - vol);
    profile.phi[i] = smaller == 0
                         ? 1.0
                         : static_cast<double>(cut) / static_cast<double>(smaller);
  }

  // Local minima: strictly below both neighbors; a flat run counts once at
  // its first index when strictly larger values border it on both sides.
  // Index 0 is never a minimum, nor is the final index.
  std::size_t i = 1;
  while (i + 1 < len) {
    if (profile.phi[i] >= profile.phi[i - 1]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < len && profile.phi[j + 1] == profile.phi[i]) ++j;
    if (j + 1 < len && profile.phi[j + 1] > profile.phi[i])
      profile.local_minima.push_back(static_cast<std::uint32_t>(i));
    i = j + 1;
  }
  return profile;
}

CommunitySearch find_community_detailed(const Graph& g, NodeId seed_node,
                                        const FindOptions& opt) {
  CommunitySearch search;
  ScoreTable table = accumulate_scores(g, seed_node, opt.walks, opt.seed);
  search.sv = order_scores(table, seed_node);
  search.profile = sweep(g, search.sv);

  std::uint32_t cut_index;
  std::uint32_t rank_used;
  if (!search.profile.local_minima.empty()) {
    rank_used = std::min<std::uint32_t>(
        opt.rank,
        static_cast<std::uint32_t>(search.profile.local_minima.size()) - 1);
    cut_index = search.profile.local_minima[rank_used];
  } else {
    // No interior optimum: take the best non-singleton prefix.
    rank_used = 0;
    cut_index = 1;
    for (std::size_t i = 2; i < search.profile.phi.size(); ++i)
      if (search.profile.phi[i] < search.profile.phi[cut_index])
        cut_index = static_cast<std::uint32_t>(i);
  }

  Community& c = search.community;
  c.seed = seed_node;
  c.rank = rank_used;
  c.members.assign(search.sv.nodes.begin(),
                   search.sv.nodes.begin() + cut_index + 1);
  c.conductance = conductance(g, c.members);
  return search;
}

Community find_community(const Graph& g, NodeId seed_node, const FindOptions& opt) {
  return find_community_detailed(g, seed_node, opt).community;
}

}  // namespace rwring

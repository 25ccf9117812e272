#include "rwring/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "rwring/rng.hpp"

namespace rwring {

namespace {

void shuffle(std::vector<NodeId>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng.below(i)]);
}

std::uint64_t pack_pair(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

Graph gen_er(NodeId n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_er: n must be >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_er: p outside [0,1]");

  std::vector<std::pair<NodeId, NodeId>> edges;
  if (p >= 1.0) {
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
  }
  if (p > 0.0) {
    // Geometric gap sampling over the ordered pair list: O(n + m).
    SplitMix64 rng(derive_seed(seed, streams::generator, 0));
    const double log_q = std::log1p(-p);
    std::int64_t v = 1, w = -1;
    while (v < static_cast<std::int64_t>(n)) {
      double r = 1.0 - rng.unit();  // (0, 1]
      w += 1 + static_cast<std::int64_t>(std::floor(std::log(r) / log_q));
      while (w >= v && v < static_cast<std::int64_t>(n)) {
        w -= v;
        ++v;
      }
      if (v < static_cast<std::int64_t>(n))
        edges.emplace_back(static_cast<NodeId>(w), static_cast<NodeId>(v));
    }
  }
  return Graph(n, edges);
}

void PlantedSpec::validate() const {
  if (groups < 2) throw std::invalid_argument("planted: need at least 2 groups");
  if (nodes == 0 || nodes % groups != 0)
    throw std::invalid_argument("planted: nodes must be a positive multiple of groups");
  if (group_size() < 2) throw std::invalid_argument("planted: group size must be >= 2");
  if (mix < 0.0 || mix > 1.0) throw std::invalid_argument("planted: mix outside [0,1]");
  if (avg_degree < 0.0) throw std::invalid_argument("planted: negative degree");
  if (p_in() > 1.0)
    throw std::invalid_argument("planted: within-group probability exceeds 1");
  if (p_out() > 1.0)
    throw std::invalid_argument("planted: cross-group probability exceeds 1");
}

PlantedGraph gen_planted(const PlantedSpec& spec, std::uint64_t seed) {
  spec.validate();
  const NodeId n = spec.nodes;
  const NodeId gs = spec.group_size();
  const double p_in = spec.p_in();
  const double p_out = spec.p_out();

  SplitMix64 rng(derive_seed(seed, streams::generator, 1));
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      double p = (u / gs == v / gs) ? p_in : p_out;
      if (rng.unit() < p) edges.emplace_back(u, v);
    }
  }

  PlantedGraph out;
  out.graph = Graph(n, edges);
  out.truth.community.resize(n);
  for (NodeId v = 0; v < n; ++v) out.truth.community[v] = v / gs;
  out.truth.community_count = spec.groups;
  return out;
}

Graph gen_ring(NodeId n) {
  if (n < 3) throw std::invalid_argument("gen_ring: n must be >= 3");
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n);
  for (NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n - 1, 0);
  return Graph(n, edges);
}

Graph gen_tree(NodeId n, NodeId children) {
  if (n < 1) throw std::invalid_argument("gen_tree: n must be >= 1");
  if (children < 1) throw std::invalid_argument("gen_tree: children must be >= 1");
  // Complete children-ary tree filled breadth-first and truncated at n nodes.
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (NodeId v = 1; v < n; ++v) edges.emplace_back((v - 1) / children, v);
  return Graph(n, edges);
}

Graph gen_lattice(NodeId rows, NodeId cols) {
  if (rows < 2 || cols < 2)
    throw std::invalid_argument("gen_lattice: rows and cols must be >= 2");
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(static_cast<std::size_t>(rows) * (cols - 1) +
                static_cast<std::size_t>(cols) * (rows - 1));
  auto id = [cols](NodeId r, NodeId c) { return r * cols + c; };
  for (NodeId r = 0; r < rows; ++r)
    for (NodeId c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph(rows * cols, edges);
}

Graph gen_regular(NodeId n, NodeId d, std::uint64_t seed) {
  if (d >= n) throw std::invalid_argument("gen_regular: need d < n");
  if (static_cast<std::uint64_t>(n) * d % 2 != 0)
    throw std::invalid_argument("gen_regular: n*d must be even");
  if (d == 0) return Graph(n, {});

  SplitMix64 rng(derive_seed(seed, streams::generator, 2));
  std::vector<NodeId> base_stubs;
  base_stubs.reserve(static_cast<std::size_t>(n) * d);
  for (NodeId v = 0; v < n; ++v)
    for (NodeId k = 0; k < d; ++k) base_stubs.push_back(v);

  // Uniform stub matching produces self-loops and duplicates; colliding
  // stubs are thrown back and re-paired until none remain. A round that
  // makes no progress restarts the whole matching.
  constexpr int max_attempts = 500;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::unordered_set<std::uint64_t> used;
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(n) * d / 2);
    std::vector<NodeId> pending = base_stubs;
    bool stuck = false;
    while (!pending.empty()) {
      shuffle(pending, rng);
      std::vector<NodeId> rejected;
      for (std::size_t i = 0; i + 1 < pending.size(); i += 2) {
        NodeId a = pending[i], b = pending[i + 1];
        if (a == b || !used.insert(pack_pair(a, b)).second) {
          rejected.push_back(a);
          rejected.push_back(b);
        } else {
          edges.emplace_back(a, b);
        }
      }
      if (rejected.size() == pending.size()) {
        stuck = true;
        break;
      }
      pending = std::move(rejected);
    }
    if (!stuck) return Graph(n, edges);
  }
  throw std::runtime_error("gen_regular: matching failed to converge");
}

MultiGraph sample_configuration(const Graph& g, std::uint64_t seed) {
  if (g.edge_count() < 1)
    throw std::invalid_argument("sample_configuration: graph has no edges");

  std::vector<NodeId> stubs;
  stubs.reserve(g.adjacency().size());
  for (NodeId v = 0; v < g.node_count(); ++v)
    for (NodeId k = 0; k < g.degree(v); ++k) stubs.push_back(v);

  SplitMix64 rng(derive_seed(seed, streams::generator, 3));
  shuffle(stubs, rng);

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2)
    edges.emplace_back(stubs[i], stubs[i + 1]);
  return MultiGraph(g.node_count(), edges);
}

}  // namespace rwring

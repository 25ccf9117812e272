#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rwring {

using NodeId = std::uint32_t;
using EdgeId = std::uint64_t;

namespace detail {
// Shared CSR storage: offsets has n+1 entries, neighbors holds every
// adjacency entry with each row sorted ascending.
struct Csr {
  std::vector<EdgeId> offsets;
  std::vector<NodeId> neighbors;

  NodeId node_count() const {
    return static_cast<NodeId>(offsets.empty() ? 0 : offsets.size() - 1);
  }
  NodeId degree(NodeId v) const {
    return static_cast<NodeId>(offsets[v + 1] - offsets[v]);
  }
  std::span<const NodeId> row(NodeId v) const {
    return {neighbors.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
};

Csr build_csr(NodeId n, std::span<const std::pair<NodeId, NodeId>> edges,
              bool allow_multi);
}  // namespace detail

// Immutable undirected simple graph. No self-loops, no parallel edges,
// adjacency symmetric; construction rejects anything else.
class Graph {
 public:
  Graph() = default;
  Graph(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges);

  NodeId node_count() const { return csr_.node_count(); }
  EdgeId edge_count() const { return edge_count_; }
  NodeId degree(NodeId v) const { return csr_.degree(v); }
  std::span<const NodeId> neighbors(NodeId v) const { return csr_.row(v); }
  NodeId neighbor(NodeId v, NodeId i) const {
    return csr_.neighbors[csr_.offsets[v] + i];
  }
  bool has_edge(NodeId u, NodeId v) const;

  const std::vector<EdgeId>& offsets() const { return csr_.offsets; }
  const std::vector<NodeId>& adjacency() const { return csr_.neighbors; }

 private:
  detail::Csr csr_;
  EdgeId edge_count_ = 0;
};

// Same layout as Graph but self-loops and parallel edges are allowed.
// A self-loop at v stores v twice in v's own row, so degree(v) counts it
// as 2 and uniform row sampling weights edges by multiplicity.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges);
  explicit MultiGraph(const Graph& g);

  NodeId node_count() const { return csr_.node_count(); }
  EdgeId edge_count() const { return edge_count_; }
  NodeId degree(NodeId v) const { return csr_.degree(v); }
  std::span<const NodeId> neighbors(NodeId v) const { return csr_.row(v); }
  NodeId neighbor(NodeId v, NodeId i) const {
    return csr_.neighbors[csr_.offsets[v] + i];
  }

  const std::vector<EdgeId>& offsets() const { return csr_.offsets; }
  const std::vector<NodeId>& adjacency() const { return csr_.neighbors; }

 private:
  detail::Csr csr_;
  EdgeId edge_count_ = 0;
};

// Dense community assignment: community[v] in [0, community_count).
struct Partition {
  std::vector<NodeId> community;
  NodeId community_count = 0;
};

// Structural invariant walk, used by tests and after deserialization.
bool validate_graph(const Graph& g);
bool validate_multigraph(const MultiGraph& g);

// Degree sequence as a vector indexed by node.
std::vector<NodeId> degree_sequence(const Graph& g);
std::vector<NodeId> degree_sequence(const MultiGraph& g);

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Edge-list text format: one edge per line as two non-negative integers,
// '#' lines are comments. Node ids are remapped to 0..n-1 in order of first
// appearance; original ids are kept so results can be reported back in the
// input's id space. Self-loops and duplicate edges are dropped.
struct LoadedGraph {
  Graph graph;
  std::vector<std::uint64_t> original_ids;
};

LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list_file(const std::string& path);

void write_edge_list(const Graph& g, std::ostream& out);
void write_partition(const Partition& p, std::ostream& out);

}  // namespace rwring

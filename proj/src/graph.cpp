#include "rwring/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

namespace rwring {

namespace detail {

Csr build_csr(NodeId n, std::span<const std::pair<NodeId, NodeId>> edges,
              bool allow_multi) {
  Csr csr;
  csr.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (!allow_multi && u == v) throw std::invalid_argument("self-loop in simple graph");
    csr.offsets[u + 1]++;
    csr.offsets[v + 1]++;
  }
  for (NodeId v = 0; v < n; ++v) csr.offsets[v + 1] += csr.offsets[v];

  csr.neighbors.resize(csr.offsets[n]);
  std::vector<EdgeId> cursor(csr.offsets.begin(), csr.offsets.end() - 1);
  for (const auto& [u, v] : edges) {
    csr.neighbors[cursor[u]++] = v;
    csr.neighbors[cursor[v]++] = u;
  }
  for (NodeId v = 0; v < n; ++v) {
    auto row = csr.neighbors.begin() + static_cast<std::ptrdiff_t>(csr.offsets[v]);
    auto end = csr.neighbors.begin() + static_cast<std::ptrdiff_t>(csr.offsets[v + 1]);
    std::sort(row, end);
    if (!allow_multi && std::adjacent_find(row, end) != end)
      throw std::invalid_argument("duplicate edge in simple graph");
  }
  return csr;
}

}  // namespace detail

Graph::Graph(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges)
    : csr_(detail::build_csr(n, edges, false)), edge_count_(edges.size()) {}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

MultiGraph::MultiGraph(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges)
    : csr_(detail::build_csr(n, edges, true)), edge_count_(edges.size()) {}

MultiGraph::MultiGraph(const Graph& g) : edge_count_(g.edge_count()) {
  csr_.offsets = g.offsets();
  csr_.neighbors = g.adjacency();
}

namespace {

bool rows_symmetric(const detail::Csr& csr, bool allow_multi) {
  const NodeId n = csr.node_count();
  for (NodeId v = 0; v < n; ++v) {
    auto row = csr.row(v);
    if (!std::is_sorted(row.begin(), row.end())) return false;
    for (std::size_t i = 0; i < row.size(); ++i) {
      NodeId w = row[i];
      if (w >= n) return false;
      if (!allow_multi && w == v) return false;
      if (!allow_multi && i + 1 < row.size() && row[i + 1] == w) return false;
    }
  }
  // Multiset symmetry: count of w in row(v) must equal count of v in row(w).
  for (NodeId v = 0; v < n; ++v) {
    auto row = csr.row(v);
    std::size_t i = 0;
    while (i < row.size()) {
      NodeId w = row[i];
      std::size_t j = i;
      while (j < row.size() && row[j] == w) ++j;
      std::size_t count_vw = j - i;
      auto other = csr.row(w);
      std::size_t count_wv = static_cast<std::size_t>(
          std::count(other.begin(), other.end(), v));
      if (count_vw != count_wv) return false;
      i = j;
    }
  }
  return true;
}

}  // namespace

bool validate_graph(const Graph& g) {
  if (g.offsets().size() != static_cast<std::size_t>(g.node_count()) + 1) return false;
  if (g.adjacency().size() != 2 * g.edge_count()) return false;
  detail::Csr csr{g.offsets(), g.adjacency()};
  return rows_symmetric(csr, false);
}

bool validate_multigraph(const MultiGraph& g) {
  if (g.offsets().size() != static_cast<std::size_t>(g.node_count()) + 1) return false;
  if (g.adjacency().size() != 2 * g.edge_count()) return false;
  detail::Csr csr{g.offsets(), g.adjacency()};
  return rows_symmetric(csr, true);
}

std::vector<NodeId> degree_sequence(const Graph& g) {
  std::vector<NodeId> d(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) d[v] = g.degree(v);
  return d;
}

std::vector<NodeId> degree_sequence(const MultiGraph& g) {
  std::vector<NodeId> d(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) d[v] = g.degree(v);
  return d;
}

namespace {

// Packs an unordered pair for dedup; ids are dense by the time this runs.
std::uint64_t pack_pair(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in) {
  std::string buffer(std::istreambuf_iterator<char>(in), {});

  std::unordered_map<std::uint64_t, NodeId> remap;
  std::vector<std::uint64_t> original_ids;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::unordered_set<std::uint64_t> seen;
  const std::size_t estimated_lines = buffer.size() / 9 + 16;
  edges.reserve(estimated_lines);
  seen.reserve(estimated_lines);
  remap.reserve(estimated_lines / 4);

  auto intern = [&](std::uint64_t id) {
    auto [it, inserted] = remap.try_emplace(id, static_cast<NodeId>(original_ids.size()));
    if (inserted) original_ids.push_back(id);
    return it->second;
  };

  const char* p = buffer.data();
  const char* end = p + buffer.size();
  std::size_t line_no = 0;
  while (p < end) {
    ++line_no;
    const char* eol = static_cast<const char*>(memchr(p, '\n', end - p));
    const char* line_end = eol ? eol : end;

    auto skip_blank = [&] {
      while (p < line_end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    };
    skip_blank();
    if (p < line_end && *p != '#') {
      std::uint64_t a = 0, b = 0;
      auto ra = std::from_chars(p, line_end, a);
      bool ok = ra.ec == std::errc() && ra.ptr != p;
      p = ra.ptr;
      skip_blank();
      auto rb = std::from_chars(p, line_end, b);
      ok = ok && rb.ec == std::errc() && rb.ptr != p;
      p = rb.ptr;
      skip_blank();
      if (!ok || p != line_end)
        throw ParseError("line " + std::to_string(line_no) + ": expected two integers");

      NodeId u = intern(a);
      NodeId v = intern(b);
      if (u != v && seen.insert(pack_pair(u, v)).second) edges.emplace_back(u, v);
    }
    p = eol ? eol + 1 : end;
  }
  if (original_ids.empty()) throw ParseError("empty input: no edges or nodes");

  LoadedGraph out;
  out.graph = Graph(static_cast<NodeId>(original_ids.size()), edges);
  out.original_ids = std::move(original_ids);
  return out;
}

LoadedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
}

void write_partition(const Partition& p, std::ostream& out) {
  for (std::size_t v = 0; v < p.community.size(); ++v)
    out << v << ' ' << p.community[v] << '\n';
}

}  // namespace rwring

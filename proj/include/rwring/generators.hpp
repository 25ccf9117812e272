#pragma once

#include <cstdint>

#include "rwring/graph.hpp"

namespace rwring {

// Planted l-partition benchmark: n nodes in equal groups, every node with
// expected total degree avg_degree of which a fraction mix goes outside its
// own group. Edges are independent Bernoulli draws with the derived pair
// probabilities.
struct PlantedSpec {
  NodeId nodes = 0;
  NodeId groups = 0;
  double avg_degree = 0.0;
  double mix = 0.0;

  NodeId group_size() const { return nodes / groups; }
  double z_out() const { return avg_degree * mix; }
  double z_in() const { return avg_degree - z_out(); }
  double p_in() const { return z_in() / (group_size() - 1); }
  double p_out() const { return z_out() / (nodes - group_size()); }

  // Throws std::invalid_argument when a derived probability leaves [0,1]
  // or the shape parameters are inconsistent.
  void validate() const;
};

struct PlantedGraph {
  Graph graph;
  Partition truth;  // community of v is v / group_size
};

Graph gen_er(NodeId n, double p, std::uint64_t seed);
PlantedGraph gen_planted(const PlantedSpec& spec, std::uint64_t seed);

Graph gen_ring(NodeId n);
Graph gen_tree(NodeId n, NodeId children);
Graph gen_lattice(NodeId rows, NodeId cols);
Graph gen_regular(NodeId n, NodeId d, std::uint64_t seed);

// Degree-preserving null model: stubs paired uniformly at random, self-loops
// and parallel edges kept so the degree sequence matches exactly.
MultiGraph sample_configuration(const Graph& g, std::uint64_t seed);

}  // namespace rwring

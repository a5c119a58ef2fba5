#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lapdist/numbers.hpp"

namespace lapdist {

inline constexpr int kMaxOrder = 64;

// Simple undirected graph on at most 64 vertices. One adjacency word per
// vertex, so neighborhood operations are single machine-word operations.
// Value-semantic and immutable: mutators return a new graph.
class Graph {
 public:
  Graph() = default;  // order 0; only meaningful as a nabla_chain placeholder

  static Graph empty(int n);

  int order() const { return static_cast<int>(rows_.size()); }
  bool has_edge(int i, int j) const;
  std::uint64_t neighbor_bits(int i) const;
  int degree(int i) const;
  int edge_count() const;

  Graph with_edge(int i, int j) const;
  Graph without_edge(int i, int j) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_pair(int i, int j) const;
  std::vector<std::uint64_t> rows_;
};

Graph add_edge(const Graph& g, int i, int j);

struct EdgeDeletion {
  Graph graph;
  bool removed;
};
EdgeDeletion delete_edge(const Graph& g, int i, int j);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
// Concatenates the vertex blocks and joins consecutive nonempty blocks.
// An order-0 part is a placeholder that breaks the chain at its position.
Graph nabla_chain(const std::vector<Graph>& parts);

Graph path(int n);
Graph cycle(int n);
Graph star(int n);  // center is vertex 0
Graph complete(int n);
Graph complete_multipartite(const std::vector<int>& parts);

// Two adjacent centers with p and r pendants; order p+r+2.
Graph double_star(int p, int r);

enum class BinaryStarVariant { B, BPrime };

struct BinaryStarParams {
  BinaryStarVariant variant;
  int p, q, r;

  int order() const { return p + q + r + 2; }
  BinaryStarParams normalized() const;  // swaps so that p >= r
};

// Centers u, v with p and r private pendants and q shared degree-2
// neighbors; variant BPrime adds the edge uv. Vertex order: u's pendants,
// shared vertices, v's pendants, then u, then v.
Graph binary_star(const BinaryStarParams& params);
Graph binary_star(BinaryStarVariant variant, int p, int q, int r);

// Path on n vertices with p pendants attached at one end and q at the other.
Graph double_starlike(int p, int n, int q);

// nabla_chain([K1, K_{n-m}, K_{m-1}]); requires 2 <= m <= n-1.
Graph k1_join_family(int n, int m);

std::vector<int> degree_sequence(const Graph& g);  // nonincreasing
bool is_connected(const Graph& g);
int component_count(const Graph& g);

}  // namespace lapdist

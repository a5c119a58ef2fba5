#pragma once

#include <cstddef>
#include <vector>

#include "lapdist/graph.hpp"

namespace lapdist {

// The non-isomorphic graphs of one order, each canonically labeled, in
// ascending canonical-form order.
struct GraphStream {
  int order = 0;
  bool connected_only = false;
  std::vector<Graph> items;

  auto begin() const { return items.begin(); }
  auto end() const { return items.end(); }
  std::size_t size() const { return items.size(); }
};

// Enumerates by vertex augmentation: every canonical (n-1)-vertex graph is
// extended by one vertex with every possible neighborhood, canonicalized and
// deduplicated. Levels are cached for the process lifetime; building a level
// takes a lock, so concurrent callers are safe. Requires 1 <= n <= 9.
GraphStream graphs(int n, bool connected_only);

// Round-robin split into `shards` disjoint streams that together cover the
// input. Requires shards >= 1.
std::vector<GraphStream> stream_partition(const GraphStream& stream, int shards);

}  // namespace lapdist

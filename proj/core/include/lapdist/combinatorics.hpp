#pragma once

#include <string>
#include <vector>

#include "lapdist/graph.hpp"

namespace lapdist {

// Maximum independent set, exact. Branch and bound on the complement's
// maximum clique with a greedy coloring bound; bitset candidate sets keep
// every step a handful of word operations. The returned set is sorted.
std::vector<int> max_independent_set(const Graph& g);
int independence_number(const Graph& g);

// Sum over all vertices with at least one pendant neighbor of
// (pendant neighbor count - 1). A K2 component contributes 0.
int star_degree(const Graph& g);

// Vertices whose entire neighborhood is exactly {u, v}.
std::vector<int> common_neighborhood_set(const Graph& g, int u, int v);

struct Deg2Set {
  int u, v;  // u < v
  std::vector<int> members;
};
// Every pair with a nonempty common-neighborhood set, pairs in ascending
// order.
std::vector<Deg2Set> all_deg2_sets(const Graph& g);

// graph6 string of the canonically relabeled graph. Two graphs get the same
// form exactly when they are isomorphic: the labeling minimizes the
// adjacency bit string over all orderings compatible with iterated equitable
// partition refinement, which covers all automorphism classes.
using CanonicalForm = std::string;

CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

// Relabels g so that vertex order[i] becomes vertex i.
Graph relabel(const Graph& g, const std::vector<int>& order);

}  // namespace lapdist

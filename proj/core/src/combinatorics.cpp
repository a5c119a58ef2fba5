#include "lapdist/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <utility>

#include "lapdist/graph6.hpp"

namespace lapdist {

namespace {

using Mask = std::uint64_t;

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

struct CliqueSearch {
  std::vector<Mask> adj;
  Mask best = 0;
  int best_size = 0;

  void expand(Mask clique, int size, Mask cand) {
    if (!cand) {
      if (size > best_size) {
        best = clique;
        best_size = size;
      }
      return;
    }
    // Greedy coloring: a vertex in color class c cannot extend the current
    // clique by more than c vertices, so classes double as bounds.
    std::vector<std::pair<int, int>> colored;
    Mask uncolored = cand;
    int color = 0;
    while (uncolored) {
      ++color;
      Mask cls = uncolored;
      while (cls) {
        int v = std::countr_zero(cls);
        colored.emplace_back(v, color);
        uncolored &= ~(Mask{1} << v);
        cls &= ~(Mask{1} << v);
        cls &= ~adj[v];
      }
    }
    for (auto it = colored.rbegin(); it != colored.rend(); ++it) {
      auto [v, c] = *it;
      if (size + c <= best_size) return;
      expand(clique | (Mask{1} << v), size + 1, cand & adj[v]);
      cand &= ~(Mask{1} << v);
    }
  }
};

}  // namespace

std::vector<int> max_independent_set(const Graph& g) {
  int n = g.order();
  Mask all = full_mask(n);
  CliqueSearch search;
  search.adj.resize(n);
  for (int i = 0; i < n; ++i)
    search.adj[i] = ~g.neighbor_bits(i) & all & ~(Mask{1} << i);
  search.expand(0, 0, all);
  std::vector<int> out;
  for (Mask m = search.best; m; m &= m - 1) out.push_back(std::countr_zero(m));
  for (size_t a = 0; a < out.size(); ++a)
    for (size_t b = a + 1; b < out.size(); ++b)
      if (g.has_edge(out[a], out[b]))
        throw std::logic_error("independent set witness has an internal edge");
  return out;
}

int independence_number(const Graph& g) {
  return static_cast<int>(max_independent_set(g).size());
}

int star_degree(const Graph& g) {
  int total = 0;
  for (int v = 0; v < g.order(); ++v) {
    int pendants = 0;
    for (Mask m = g.neighbor_bits(v); m; m &= m - 1)
      if (g.degree(std::countr_zero(m)) == 1) ++pendants;
    if (pendants >= 1) total += pendants - 1;
  }
  return total;
}

std::vector<int> common_neighborhood_set(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
    throw std::invalid_argument("vertex index out of range");
  if (u == v) throw std::invalid_argument("pair vertices must differ");
  Mask pair = (Mask{1} << u) | (Mask{1} << v);
  std::vector<int> out;
  for (int w = 0; w < g.order(); ++w)
    if (g.neighbor_bits(w) == pair) out.push_back(w);
  return out;
}

std::vector<Deg2Set> all_deg2_sets(const Graph& g) {
  std::vector<Deg2Set> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      std::vector<int> members = common_neighborhood_set(g, u, v);
      if (!members.empty()) out.push_back(Deg2Set{u, v, std::move(members)});
    }
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& order) {
  int n = g.order();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("relabel order has wrong length");
  Mask seen = 0;
  for (int v : order) {
    if (v < 0 || v >= n) throw std::invalid_argument("relabel order entry out of range");
    seen |= Mask{1} << v;
  }
  if (seen != full_mask(n)) throw std::invalid_argument("relabel order is not a permutation");
  Graph out = Graph::empty(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.has_edge(order[i], order[j])) out = out.with_edge(i, j);
  return out;
}

namespace {

int uf_find(std::vector<int>& uf, int v) {
  while (uf[v] != v) {
    uf[v] = uf[uf[v]];
    v = uf[v];
  }
  return v;
}

struct Canonizer {
  const Graph& g;
  int n;
  std::string best;
  std::vector<int> best_order;
  std::vector<std::vector<int>> gens;

  explicit Canonizer(const Graph& graph) : g(graph), n(graph.order()) {}

  // Equitable refinement: split every cell by the vector of neighbor counts
  // into the current cells until nothing splits. Sub-cells are ordered by
  // their count vectors, which keeps the outcome invariant under relabeling.
  void refine(std::vector<Mask>& cells) const {
    for (;;) {
      bool changed = false;
      std::vector<Mask> next;
      next.reserve(cells.size());
      for (Mask cell : cells) {
        if (std::popcount(cell) == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<std::vector<int>, Mask> split;
        for (Mask m = cell; m; m &= m - 1) {
          int v = std::countr_zero(m);
          std::vector<int> key(cells.size());
          for (size_t s = 0; s < cells.size(); ++s)
            key[s] = std::popcount(g.neighbor_bits(v) & cells[s]);
          split[std::move(key)] |= Mask{1} << v;
        }
        if (split.size() > 1) changed = true;
        for (auto& [key, part] : split) next.push_back(part);
      }
      cells.swap(next);
      if (!changed) return;
    }
  }

  bool preserves_cells(const std::vector<int>& sigma, const std::vector<Mask>& cells) const {
    for (Mask cell : cells) {
      Mask image = 0;
      for (Mask m = cell; m; m &= m - 1) image |= Mask{1} << sigma[std::countr_zero(m)];
      if (image != cell) return false;
    }
    return true;
  }

  void search(std::vector<Mask> cells) {
    refine(cells);
    int target = -1;
    for (size_t i = 0; i < cells.size(); ++i)
      if (std::popcount(cells[i]) > 1) {
        target = static_cast<int>(i);
        break;
      }
    if (target < 0) {
      std::vector<int> order(cells.size());
      for (size_t i = 0; i < cells.size(); ++i) order[i] = std::countr_zero(cells[i]);
      std::string s = graph6_encode(relabel(g, order));
      if (best.empty() || s < best) {
        best = std::move(s);
        best_order = std::move(order);
      } else if (s == best) {
        // Two labelings with the same canonical string compose to an
        // automorphism; remember it for pruning.
        std::vector<int> sigma(n);
        for (int i = 0; i < n; ++i) sigma[best_order[i]] = order[i];
        if (gens.size() < 64) gens.push_back(std::move(sigma));
      }
      return;
    }

    std::vector<int> tried;
    for (Mask cand = cells[target]; cand; cand &= cand - 1) {
      int v = std::countr_zero(cand);
      if (!tried.empty()) {
        // Skip v when a known automorphism that maps every cell of this node
        // onto itself sends an already-explored candidate to v: the two
        // subtrees produce identical strings.
        std::vector<int> uf(n);
        for (int i = 0; i < n; ++i) uf[i] = i;
        for (const auto& sigma : gens)
          if (preserves_cells(sigma, cells))
            for (int i = 0; i < n; ++i) uf[uf_find(uf, i)] = uf_find(uf, sigma[i]);
        bool skip = false;
        for (int w : tried)
          if (uf_find(uf, w) == uf_find(uf, v)) {
            skip = true;
            break;
          }
        if (skip) continue;
      }
      tried.push_back(v);
      std::vector<Mask> child;
      child.reserve(cells.size() + 1);
      for (size_t i = 0; i < cells.size(); ++i) {
        if (static_cast<int>(i) == target) {
          child.push_back(Mask{1} << v);
          child.push_back(cells[i] & ~(Mask{1} << v));
        } else {
          child.push_back(cells[i]);
        }
      }
      search(std::move(child));
    }
  }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  Canonizer canon(g);
  canon.search({full_mask(g.order())});
  return relabel(g, canon.best_order);
}

CanonicalForm canonical_form(const Graph& g) {
  Canonizer canon(g);
  canon.search({full_mask(g.order())});
  return canon.best;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace lapdist

#include "lapdist/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace lapdist {

namespace {

void check_order(int n) {
  if (n < 1) throw std::invalid_argument("graph order must be at least 1");
  if (n > kMaxOrder)
    throw resource_limit_error("graph order " + std::to_string(n) + " exceeds cap of 64");
}

}  // namespace

Graph Graph::empty(int n) {
  check_order(n);
  Graph g;
  g.rows_.assign(n, 0);
  return g;
}

void Graph::check_pair(int i, int j) const {
  if (i < 0 || j < 0 || i >= order() || j >= order())
    throw std::invalid_argument("vertex index out of range");
  if (i == j) throw std::invalid_argument("loops are not allowed");
}

bool Graph::has_edge(int i, int j) const {
  check_pair(i, j);
  return (rows_[i] >> j) & 1u;
}

std::uint64_t Graph::neighbor_bits(int i) const {
  if (i < 0 || i >= order()) throw std::invalid_argument("vertex index out of range");
  return rows_[i];
}

int Graph::degree(int i) const { return std::popcount(neighbor_bits(i)); }

int Graph::edge_count() const {
  int twice = 0;
  for (std::uint64_t row : rows_) twice += std::popcount(row);
  return twice / 2;
}

Graph Graph::with_edge(int i, int j) const {
  check_pair(i, j);
  Graph g = *this;
  g.rows_[i] |= std::uint64_t{1} << j;
  g.rows_[j] |= std::uint64_t{1} << i;
  return g;
}

Graph Graph::without_edge(int i, int j) const {
  check_pair(i, j);
  Graph g = *this;
  g.rows_[i] &= ~(std::uint64_t{1} << j);
  g.rows_[j] &= ~(std::uint64_t{1} << i);
  return g;
}

Graph add_edge(const Graph& g, int i, int j) { return g.with_edge(i, j); }

EdgeDeletion delete_edge(const Graph& g, int i, int j) {
  bool present = g.has_edge(i, j);
  return EdgeDeletion{g.without_edge(i, j), present};
}

Graph complement(const Graph& g) {
  int n = g.order();
  Graph out = Graph::empty(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.has_edge(i, j)) out = out.with_edge(i, j);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  return nabla_chain({a, Graph{}, b});
}

Graph join(const Graph& a, const Graph& b) { return nabla_chain({a, b}); }

Graph nabla_chain(const std::vector<Graph>& parts) {
  long total = 0;
  for (const Graph& p : parts) total += p.order();
  check_order(static_cast<int>(std::max<long>(total, 1)));
  if (total == 0) throw std::invalid_argument("nabla chain of empty parts");
  Graph out = Graph::empty(static_cast<int>(total));
  int offset = 0;
  int prev_offset = -1, prev_size = 0;
  for (const Graph& p : parts) {
    int k = p.order();
    if (k == 0) {
      prev_offset = -1;  // an empty block breaks the chain
      prev_size = 0;
      continue;
    }
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (p.has_edge(i, j)) out = out.with_edge(offset + i, offset + j);
    if (prev_offset >= 0)
      for (int i = 0; i < prev_size; ++i)
        for (int j = 0; j < k; ++j) out = out.with_edge(prev_offset + i, offset + j);
    prev_offset = offset;
    prev_size = k;
    offset += k;
  }
  return out;
}

Graph path(int n) {
  Graph g = Graph::empty(n);
  for (int i = 0; i + 1 < n; ++i) g = g.with_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  return path(n).with_edge(0, n - 1);
}

Graph star(int n) {
  Graph g = Graph::empty(n);
  for (int i = 1; i < n; ++i) g = g.with_edge(0, i);
  return g;
}

Graph complete(int n) { return complement(Graph::empty(n)); }

Graph complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("no parts given");
  long total = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("each part must have at least 1 vertex");
    total += p;
  }
  check_order(static_cast<int>(total));
  Graph g = Graph::empty(static_cast<int>(total));
  int a_off = 0;
  for (size_t a = 0; a < parts.size(); ++a) {
    int b_off = a_off + parts[a];
    for (size_t b = a + 1; b < parts.size(); ++b) {
      for (int i = 0; i < parts[a]; ++i)
        for (int j = 0; j < parts[b]; ++j) g = g.with_edge(a_off + i, b_off + j);
      b_off += parts[b];
    }
    a_off += parts[a];
  }
  return g;
}

Graph binary_star(const BinaryStarParams& params) {
  const auto& [variant, p, q, r] = params;
  if (p < 0 || q < 0 || r < 0) throw std::invalid_argument("binary star parameters must be >= 0");
  if (variant == BinaryStarVariant::B && q == 0)
    throw std::invalid_argument("variant B requires q >= 1 (q = 0 is disconnected)");
  check_order(params.order());
  Graph g = Graph::empty(params.order());
  int u = p + q + r, v = p + q + r + 1;
  for (int i = 0; i < p; ++i) g = g.with_edge(u, i);
  for (int i = 0; i < q; ++i) {
    g = g.with_edge(u, p + i);
    g = g.with_edge(v, p + i);
  }
  for (int i = 0; i < r; ++i) g = g.with_edge(v, p + q + i);
  if (variant == BinaryStarVariant::BPrime) g = g.with_edge(u, v);
  return g;
}

Graph binary_star(BinaryStarVariant variant, int p, int q, int r) {
  return binary_star(BinaryStarParams{variant, p, q, r});
}

BinaryStarParams BinaryStarParams::normalized() const {
  BinaryStarParams out = *this;
  if (out.p < out.r) std::swap(out.p, out.r);
  return out;
}

Graph double_star(int p, int r) {
  return binary_star(BinaryStarVariant::BPrime, p, 0, r);
}

Graph double_starlike(int p, int n, int q) {
  if (n < 2 || p < 1 || q < 1) throw std::invalid_argument("double starlike needs n >= 2, p,q >= 1");
  check_order(p + n + q);
  Graph g = Graph::empty(p + n + q);
  for (int i = 0; i < p; ++i) g = g.with_edge(p, i);
  for (int i = 0; i + 1 < n; ++i) g = g.with_edge(p + i, p + i + 1);
  for (int i = 0; i < q; ++i) g = g.with_edge(p + n - 1, p + n + i);
  return g;
}

Graph k1_join_family(int n, int m) {
  if (m < 2 || m > n - 1)
    throw std::invalid_argument("k1 join family needs 2 <= m <= n-1");
  check_order(n);
  return nabla_chain({complete(1), complete(n - m), complete(m - 1)});
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> degs(g.order());
  for (int i = 0; i < g.order(); ++i) degs[i] = g.degree(i);
  std::sort(degs.rbegin(), degs.rend());
  return degs;
}

namespace {

std::uint64_t reachable_from(const Graph& g, int start) {
  std::uint64_t seen = std::uint64_t{1} << start;
  for (;;) {
    std::uint64_t next = seen;
    for (int i = 0; i < g.order(); ++i)
      if ((seen >> i) & 1u) next |= g.neighbor_bits(i);
    if (next == seen) return seen;
    seen = next;
  }
}

}  // namespace

bool is_connected(const Graph& g) {
  int n = g.order();
  if (n == 0) return false;
  std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return reachable_from(g, 0) == all;
}

int component_count(const Graph& g) {
  int n = g.order();
  std::uint64_t remaining = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  int components = 0;
  while (remaining) {
    remaining &= ~reachable_from(g, std::countr_zero(remaining));
    ++components;
  }
  return components;
}

}  // namespace lapdist

#include "lapdist/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "lapdist/combinatorics.hpp"
#include "lapdist/graph6.hpp"

namespace lapdist {

namespace {

constexpr int kEnumerationCap = 9;

std::mutex cache_mutex;
std::map<int, std::vector<Graph>>& level_cache() {
  static std::map<int, std::vector<Graph>> cache;
  return cache;
}

// Caller holds cache_mutex.
const std::vector<Graph>& level(int n) {
  auto& cache = level_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<std::pair<std::string, Graph>> found;
  if (n == 1) {
    Graph k1 = Graph::empty(1);
    found.emplace_back(graph6_encode(k1), k1);
  } else {
    std::set<std::string> seen;
    for (const Graph& parent : level(n - 1)) {
      Graph base = disjoint_union(parent, Graph::empty(1));
      std::uint64_t subsets = std::uint64_t{1} << (n - 1);
      for (std::uint64_t subset = 0; subset < subsets; ++subset) {
        Graph child = base;
        for (std::uint64_t m = subset; m; m &= m - 1)
          child = child.with_edge(std::countr_zero(m), n - 1);
        Graph canon = canonical_graph(child);
        std::string form = graph6_encode(canon);
        if (seen.insert(form).second) found.emplace_back(std::move(form), std::move(canon));
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [form, graph] : found) out.push_back(std::move(graph));
  return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace

GraphStream graphs(int n, bool connected_only) {
  if (n < 1) throw std::invalid_argument("enumeration order must be at least 1");
  if (n > kEnumerationCap)
    throw resource_limit_error("enumeration order " + std::to_string(n) +
                               " exceeds cap of " + std::to_string(kEnumerationCap));
  std::lock_guard<std::mutex> lock(cache_mutex);
  GraphStream stream{n, connected_only, {}};
  for (const Graph& g : level(n))
    if (!connected_only || is_connected(g)) stream.items.push_back(g);
  return stream;
}

std::vector<GraphStream> stream_partition(const GraphStream& stream, int shards) {
  if (shards < 1) throw std::invalid_argument("shard count must be at least 1");
  std::vector<GraphStream> out(shards);
  for (int i = 0; i < shards; ++i) {
    out[i].order = stream.order;
    out[i].connected_only = stream.connected_only;
  }
  for (std::size_t i = 0; i < stream.items.size(); ++i)
    out[i % shards].items.push_back(stream.items[i]);
  return out;
}

}  // namespace lapdist

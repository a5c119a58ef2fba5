#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lapdist/combinatorics.hpp"
#include "lapdist/enumeration.hpp"
#include "lapdist/graph.hpp"
#include "lapdist/graph6.hpp"
#include "oracles.hpp"

using namespace lapdist;
namespace oracle = lapdist::testing;

namespace {

Graph petersen() {
  Graph g = Graph::empty(10);
  for (int i = 0; i < 5; ++i) {
    g = g.with_edge(i, (i + 1) % 5);
    g = g.with_edge(i, i + 5);
    g = g.with_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace

TEST_CASE("independence numbers of known graphs") {
  CHECK(independence_number(cycle(5)) == 2);
  CHECK(independence_number(path(6)) == 3);
  CHECK(independence_number(complete(6)) == 1);
  CHECK(independence_number(complete_multipartite({3, 4})) == 4);
  CHECK(independence_number(petersen()) == 4);
  CHECK(independence_number(Graph::empty(5)) == 5);
  CHECK(independence_number(path(1)) == 1);
}

TEST_CASE("max independent set witnesses are valid and optimal") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : graphs(n, false)) {
      std::vector<int> witness = max_independent_set(g);
      CHECK(std::is_sorted(witness.begin(), witness.end()));
      for (std::size_t a = 0; a < witness.size(); ++a)
        for (std::size_t b = a + 1; b < witness.size(); ++b)
          CHECK(!g.has_edge(witness[a], witness[b]));
      CHECK(static_cast<int>(witness.size()) == oracle::brute_alpha(g));
      CHECK(independence_number(g) == static_cast<int>(witness.size()));
    }
}

TEST_CASE("star degree") {
  CHECK(star_degree(star(5)) == 3);
  CHECK(star_degree(path(3)) == 1);
  CHECK(star_degree(path(4)) == 0);
  CHECK(star_degree(path(2)) == 0);
  CHECK(star_degree(Graph::empty(3)) == 0);
  CHECK(star_degree(double_star(2, 3)) == 3);
  CHECK(star_degree(binary_star(BinaryStarVariant::B, 2, 1, 2)) == 2);
  CHECK(star_degree(disjoint_union(path(2), path(2))) == 0);
  CHECK(star_degree(disjoint_union(star(4), star(3))) == 3);
}

TEST_CASE("common neighborhood sets") {
  Graph c4 = cycle(4);
  CHECK(common_neighborhood_set(c4, 0, 2) == std::vector<int>{1, 3});
  CHECK(common_neighborhood_set(c4, 0, 1).empty());
  CHECK_THROWS_AS((void)common_neighborhood_set(c4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)common_neighborhood_set(c4, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS((void)common_neighborhood_set(c4, -1, 2), std::invalid_argument);

  // the shared degree-2 vertices of a binary star sit between the centers
  Graph b = binary_star(BinaryStarVariant::B, 2, 3, 1);
  CHECK(common_neighborhood_set(b, 6, 7) == std::vector<int>{2, 3, 4});

  std::vector<Deg2Set> sets = all_deg2_sets(c4);
  REQUIRE(sets.size() == 2);
  CHECK(sets[0].u == 0);
  CHECK(sets[0].v == 2);
  CHECK(sets[0].members == std::vector<int>{1, 3});
  CHECK(sets[1].u == 1);
  CHECK(sets[1].v == 3);
  CHECK(sets[1].members == std::vector<int>{0, 2});

  CHECK(all_deg2_sets(complete(4)).empty());
  std::vector<Deg2Set> bsets = all_deg2_sets(b);
  REQUIRE(bsets.size() == 1);
  CHECK(bsets[0].u == 6);
  CHECK(bsets[0].v == 7);
  CHECK(bsets[0].members == std::vector<int>{2, 3, 4});
}

TEST_CASE("relabel") {
  CHECK(graph6_encode(relabel(path(3), {2, 1, 0})) == graph6_encode(path(3)));
  Graph g = relabel(path(3), {1, 0, 2});  // vertex 1 (the middle) becomes 0
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(1) == 1);
  CHECK_THROWS_AS((void)relabel(path(3), {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS((void)relabel(path(3), {0, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS((void)relabel(path(3), {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937_64 rng(4242);
  std::vector<Graph> samples = {path(5),
                                cycle(6),
                                star(6),
                                binary_star(BinaryStarVariant::BPrime, 2, 2, 1),
                                double_starlike(2, 3, 2),
                                complete_multipartite({2, 2, 2}),
                                petersen()};
  for (const Graph& g : samples) {
    CanonicalForm form = canonical_form(g);
    for (int t = 0; t < 20; ++t)
      CHECK(canonical_form(relabel(g, random_permutation(g.order(), rng))) == form);
  }
}

TEST_CASE("canonical form separates exactly the isomorphism classes") {
  // group every labeled graph by canonical form; class counts are the known
  // unlabeled graph counts, and membership agrees with the permutation oracle
  std::map<int, int> expected_classes = {{1, 1}, {2, 2}, {3, 4}, {4, 11}, {5, 34}};
  for (int n = 1; n <= 5; ++n) {
    std::map<CanonicalForm, std::vector<Graph>> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << oracle::pair_count(n)); ++mask) {
      Graph g = oracle::labeled_graph(n, mask);
      classes[canonical_form(g)].push_back(g);
    }
    CHECK(static_cast<int>(classes.size()) == expected_classes[n]);
    std::vector<Graph> reps;
    for (const auto& [form, members] : classes) {
      reps.push_back(members.front());
      for (const Graph& g : members) CHECK(oracle::brute_isomorphic(g, members.front()));
    }
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b)
        CHECK(!oracle::brute_isomorphic(reps[a], reps[b]));
  }
}

TEST_CASE("isomorphism checks on regular pairs") {
  Graph k33 = complete_multipartite({3, 3});
  Graph prism = Graph::empty(6);
  for (int i = 0; i < 3; ++i) {
    prism = prism.with_edge(i, (i + 1) % 3);
    prism = prism.with_edge(3 + i, 3 + (i + 1) % 3);
    prism = prism.with_edge(i, 3 + i);
  }
  CHECK(!is_isomorphic(k33, prism));
  CHECK(!oracle::brute_isomorphic(k33, prism));
  CHECK(is_isomorphic(star(4), complete_multipartite({1, 3})));
  CHECK(!is_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))));
  CHECK(!is_isomorphic(path(3), path(4)));

  std::mt19937_64 rng(99);
  Graph pet = petersen();
  for (int t = 0; t < 10; ++t)
    CHECK(is_isomorphic(pet, relabel(pet, random_permutation(10, rng))));
}

TEST_CASE("canonical graph") {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : graphs(n, false)) {
      Graph scrambled = relabel(g, random_permutation(n, rng));
      Graph canon = canonical_graph(scrambled);
      CHECK(is_isomorphic(canon, scrambled));
      CHECK(graph6_encode(canon) == canonical_form(scrambled));
      CHECK(graph6_encode(canonical_graph(canon)) == graph6_encode(canon));
    }
}

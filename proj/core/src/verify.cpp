#include "lapdist/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "lapdist/combinatorics.hpp"
#include "lapdist/enumeration.hpp"
#include "lapdist/graph6.hpp"
#include "lapdist/interval.hpp"
#include "lapdist/intpoly.hpp"
#include "lapdist/roots.hpp"
#include "lapdist/spectral.hpp"

namespace lapdist {

namespace {

class Timer {
 public:
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_range(const char* what, int value, int lo, int hi) {
  if (value < lo) {
    std::ostringstream os;
    os << what << " must be at least " << lo << ", got " << value;
    throw std::invalid_argument(os.str());
  }
  if (value > hi) {
    std::ostringstream os;
    os << what << " is capped at " << hi << ", got " << value;
    throw resource_limit_error(os.str());
  }
}

std::string join_all(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

using GraphTest = std::function<std::optional<std::string>(const Graph&)>;

// Applies test to every graph; violations become counterexamples. With
// jobs > 1 the items are strided across threads; the caller sorts, so the
// result set is identical either way.
std::vector<Counterexample> sweep(const std::vector<Graph>& items, int jobs,
                                  const GraphTest& test) {
  if (jobs > static_cast<int>(items.size())) jobs = static_cast<int>(items.size());
  std::vector<Counterexample> found;
  if (jobs <= 1) {
    for (const Graph& g : items)
      if (auto detail = test(g)) found.push_back({graph6_encode(g), *detail});
    return found;
  }
  std::vector<std::vector<Counterexample>> partial(jobs);
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&items, &partial, &test, jobs, j] {
      for (std::size_t i = j; i < items.size(); i += jobs)
        if (auto detail = test(items[i]))
          partial[j].push_back({graph6_encode(items[i]), *detail});
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& part : partial) found.insert(found.end(), part.begin(), part.end());
  return found;
}

void seal(Report& r, const Timer& timer) {
  r.pass = r.counterexamples.empty();
  finalize_counterexamples(r);
  r.elapsed_ms = timer.ms();
}

const char* variant_name(BinaryStarVariant variant) {
  return variant == BinaryStarVariant::B ? "B" : "B'";
}

}  // namespace

Report verify_lower_bound(int max_n, int jobs) {
  require_range("max-n", max_n, 3, 9);
  Timer timer;
  Report r;
  r.check = "lower-bound";
  r.params = {{"max-n", std::to_string(max_n)}};
  for (int n = 3; n <= max_n; ++n) {
    GraphStream stream = graphs(n, true);
    r.graphs_examined += static_cast<long long>(stream.size());
    auto found = sweep(stream.items, jobs, [n](const Graph& g) -> std::optional<std::string> {
      int alpha = independence_number(g);
      int count = m_count(g, Interval::closed(Rat(0), Rat(n - alpha)));
      if (alpha <= count) return std::nullopt;
      std::ostringstream os;
      os << "alpha = " << alpha << " exceeds m[0, " << n - alpha << "] = " << count;
      return os.str();
    });
    r.counterexamples.insert(r.counterexamples.end(), found.begin(), found.end());
  }
  seal(r, timer);
  return r;
}

Report classify_equality_alpha2(int n) {
  require_range("n", n, 4, 9);
  Timer timer;
  Report r;
  r.check = "alpha2-classification";
  r.params = {{"n", std::to_string(n)}};
  GraphStream stream = graphs(n, true);
  r.graphs_examined = static_cast<long long>(stream.size());
  std::set<std::string> equality_set;
  for (const Graph& g : stream) {
    if (independence_number(g) != 2) continue;
    if (m_count(g, Interval::closed(Rat(0), Rat(n - 2))) != 2) continue;
    equality_set.insert(graph6_encode(g));
  }
  std::set<std::string> family;
  for (int m = 2; m <= n - 1; ++m) family.insert(canonical_form(k1_join_family(n, m)));
  for (const std::string& s : equality_set)
    if (!family.count(s))
      r.counterexamples.push_back({s, "meets both equalities but is not a two-clique join"});
  for (const std::string& s : family)
    if (!equality_set.count(s))
      r.counterexamples.push_back({s, "two-clique join missing from the equality set"});
  seal(r, timer);
  return r;
}

Report classify_equality_alpha_n_minus_2(int n) {
  require_range("n", n, 4, 9);
  Timer timer;
  Report r;
  r.check = "alpha-n-minus-2-classification";
  r.params = {{"n", std::to_string(n)}};
  GraphStream stream = graphs(n, true);
  r.graphs_examined = static_cast<long long>(stream.size());
  std::set<std::string> equality_set;
  for (const Graph& g : stream) {
    if (independence_number(g) != n - 2) continue;
    if (m_count(g, Interval::closed(Rat(0), Rat(2))) != n - 2) continue;
    equality_set.insert(graph6_encode(g));
  }
  std::set<std::string> family;
  const int s = n - 2;
  if (s >= 3) {
    for (int p = 0; p <= s; ++p)
      for (int q = 1; q <= s - p; ++q)
        family.insert(canonical_form(binary_star(BinaryStarVariant::B, p, q, s - p - q)));
  }
  for (int p = 1; p < s; ++p)
    if (p * (s - p) >= 2)
      family.insert(canonical_form(binary_star(BinaryStarVariant::BPrime, p, 0, s - p)));
  for (int p = 0; p <= s; ++p)
    for (int q = 1; q <= s - p; ++q)
      family.insert(canonical_form(binary_star(BinaryStarVariant::BPrime, p, q, s - p - q)));
  for (const std::string& g6 : equality_set)
    if (!family.count(g6))
      r.counterexamples.push_back({g6, "meets both equalities but is not a binary star"});
  for (const std::string& g6 : family)
    if (!equality_set.count(g6))
      r.counterexamples.push_back({g6, "binary star missing from the equality set"});
  seal(r, timer);
  return r;
}

Report verify_eigenvalue_brackets(BinaryStarVariant variant, int p, int q, int r) {
  BinaryStarParams params = BinaryStarParams{variant, p, q, r}.normalized();
  Timer timer;
  Report rep;
  rep.check = "brackets";
  rep.params = {{"variant", variant_name(variant)},
                {"p", std::to_string(params.p)},
                {"q", std::to_string(params.q)},
                {"r", std::to_string(params.r)}};
  Graph g = binary_star(params);
  rep.graphs_examined = 1;
  const int n = params.order();
  const int P = params.p, Q = params.q, R = params.r;
  IntPoly cp = charpoly(g);
  std::vector<std::string> faults;

  auto expect_value = [&faults](const char* label, const Rat& got, const Rat& want) {
    if (got != want)
      faults.push_back(std::string(label) + " = " + got.get_str() + ", expected " +
                       want.get_str());
  };
  expect_value("f(1)", binary_star_quartic(P, Q, R).eval(Rat(1)), Rat(-P * R));
  expect_value("f(2)", binary_star_quartic(P, Q, R).eval(Rat(2)), Rat(Q * (P + Q + R - 2)));
  expect_value("g(1)", double_star_cubic(P, R).eval(Rat(1)), Rat(P * R));
  expect_value("g(p+2)", double_star_cubic(P, R).eval(Rat(P + 2)), Rat(-R));
  expect_value("h(1)", binary_star_prime_quartic(P, Q, R).eval(Rat(1)), Rat(-P * R));
  expect_value("h(2)", binary_star_prime_quartic(P, Q, R).eval(Rat(2)), Rat(Q * (P + Q + R)));

  bool window_scope;  // exactly two eigenvalues in (2, n]
  bool strict_scope;  // 2 < lambda_2 < w < lambda_1 < w + 1
  int w;
  if (variant == BinaryStarVariant::B) {
    window_scope = P + Q + R >= 3;
    strict_scope = window_scope && P >= 1;
    w = P + Q + 1;
  } else if (Q == 0) {
    window_scope = P * R >= 2;
    strict_scope = window_scope;
    w = P + 2;
  } else {
    window_scope = true;
    strict_scope = R >= 1;
    w = P + Q + 2;
  }
  if (window_scope) {
    int count = count_roots_with_multiplicity(cp, Interval::half_open(Rat(2), Rat(n)));
    if (count != 2) {
      std::ostringstream os;
      os << "m(2, " << n << "] = " << count << ", expected 2";
      faults.push_back(os.str());
    }
  }
  if (strict_scope) {
    auto expect_order = [&](int k, int c, Ordering want) {
      if (lambda_k_vs(cp, k, Rat(c)) != want) {
        std::ostringstream os;
        os << "lambda_" << k << " is not "
           << (want == Ordering::greater ? "above " : "below ") << c;
        faults.push_back(os.str());
      }
    };
    expect_order(2, 2, Ordering::greater);
    expect_order(2, w, Ordering::less);
    expect_order(1, w, Ordering::greater);
    expect_order(1, w + 1, Ordering::less);
  }
  if (Q >= 2 && lambda_k_vs(cp, 3, Rat(2)) != Ordering::equal)
    faults.push_back("lambda_3 != 2 despite q >= 2");

  if (!faults.empty())
    rep.counterexamples.push_back({graph6_encode(g), join_all(faults, "; ")});
  seal(rep, timer);
  return rep;
}

Report verify_eigenvalue_brackets_sweep(int max_order) {
  require_range("max-order", max_order, 3, kMaxOrder);
  Timer timer;
  Report rep;
  rep.check = "brackets";
  rep.params = {{"max-order", std::to_string(max_order)}};
  for (int n = 3; n <= max_order; ++n) {
    const int s = n - 2;
    for (int p = 0; p <= s; ++p) {
      for (int r = 0; r <= p; ++r) {
        int q = s - p - r;
        if (q < 0) continue;
        for (auto variant : {BinaryStarVariant::B, BinaryStarVariant::BPrime}) {
          if (variant == BinaryStarVariant::B && q == 0) continue;
          Report one = verify_eigenvalue_brackets(variant, p, q, r);
          rep.graphs_examined += one.graphs_examined;
          rep.counterexamples.insert(rep.counterexamples.end(), one.counterexamples.begin(),
                                     one.counterexamples.end());
        }
      }
    }
  }
  seal(rep, timer);
  return rep;
}

Report verify_spanning_trees(int max_order) {
  require_range("max-order", max_order, 3, 16);
  Timer timer;
  Report rep;
  rep.check = "spanning-trees";
  rep.params = {{"max-order", std::to_string(max_order)}};
  for (int n = 3; n <= max_order; ++n) {
    const int s = n - 2;
    for (int p = 0; p <= s; ++p) {
      for (int r = 0; r <= p; ++r) {
        int q = s - p - r;
        if (q < 0) continue;
        for (auto variant : {BinaryStarVariant::B, BinaryStarVariant::BPrime}) {
          if (variant == BinaryStarVariant::B && q == 0) continue;
          Graph g = binary_star(variant, p, q, r);
          Int formula;
          if (variant == BinaryStarVariant::B)
            formula = Int(q) << static_cast<unsigned>(q - 1);
          else if (q == 0)
            formula = 1;
          else
            formula = (Int(q) << static_cast<unsigned>(q - 1)) + (Int(1) << static_cast<unsigned>(q));
          Int by_coeff = spanning_tree_count(g);
          Int by_det = spanning_tree_count_determinant(g);
          ++rep.graphs_examined;
          if (by_coeff != formula || by_det != formula) {
            std::ostringstream os;
            os << "spanning trees: coefficient " << by_coeff << ", determinant " << by_det
               << ", formula " << formula;
            rep.counterexamples.push_back({graph6_encode(g), os.str()});
          }
        }
      }
    }
  }
  seal(rep, timer);
  return rep;
}

Report verify_algebraic_connectivity(int max_order) {
  require_range("max-order", max_order, 4, 16);
  Timer timer;
  Report rep;
  rep.check = "algebraic-connectivity";
  rep.params = {{"max-order", std::to_string(max_order)}};
  for (int n = 4; n <= max_order; ++n) {
    const int s = n - 2;
    for (int p = 1; p <= s - 1; ++p) {
      for (int r = 1; r <= p; ++r) {
        int q = s - p - r;
        if (q < 0) continue;
        for (auto variant : {BinaryStarVariant::B, BinaryStarVariant::BPrime}) {
          if (variant == BinaryStarVariant::B && q == 0) continue;
          Graph g = binary_star(variant, p, q, r);
          ++rep.graphs_examined;
          IntPoly cp = charpoly(g);
          std::vector<std::string> faults;
          if (lambda_k_vs(cp, n - 1, Rat(0)) != Ordering::greater)
            faults.push_back("algebraic connectivity is not positive");
          if (lambda_k_vs(cp, n - 1, Rat(1)) != Ordering::less)
            faults.push_back("algebraic connectivity is not below 1");
          if (!faults.empty())
            rep.counterexamples.push_back({graph6_encode(g), join_all(faults, "; ")});
        }
      }
    }
  }
  seal(rep, timer);
  return rep;
}

Report verify_multiplicity_lemmas(int n_exhaustive, int random_trials, std::uint64_t seed) {
  require_range("n-exhaustive", n_exhaustive, 1, 7);
  if (random_trials < 0) throw std::invalid_argument("trials must be >= 0");
  Timer timer;
  Report rep;
  rep.check = "multiplicity";
  rep.params = {{"n-exhaustive", std::to_string(n_exhaustive)},
                {"trials", std::to_string(random_trials)},
                {"seed", std::to_string(seed)}};
  GraphTest test = [](const Graph& g) -> std::optional<std::string> {
    IntPoly cp = charpoly(g);
    std::vector<std::string> faults;
    int m1 = multiplicity_at(cp, Rat(1));
    int sd = star_degree(g);
    if (m1 < sd)
      faults.push_back("eigenvalue 1 multiplicity " + std::to_string(m1) +
                       " below star degree " + std::to_string(sd));
    int m2 = multiplicity_at(cp, Rat(2));
    int total = 0;
    for (const Deg2Set& set : all_deg2_sets(g)) {
      int need = static_cast<int>(set.members.size()) - 1;
      total += need;
      if (m2 < need) {
        std::ostringstream os;
        os << "eigenvalue 2 multiplicity " << m2 << " below |N(" << set.u << "," << set.v
           << ")| - 1 = " << need;
        faults.push_back(os.str());
      }
    }
    if (m2 < total)
      faults.push_back("eigenvalue 2 multiplicity " + std::to_string(m2) +
                       " below summed bound " + std::to_string(total));
    if (faults.empty()) return std::nullopt;
    return join_all(faults, "; ");
  };
  for (int n = 1; n <= n_exhaustive; ++n) {
    GraphStream stream = graphs(n, false);
    rep.graphs_examined += static_cast<long long>(stream.size());
    auto found = sweep(stream.items, 1, test);
    rep.counterexamples.insert(rep.counterexamples.end(), found.begin(), found.end());
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < random_trials; ++t) {
    int n = 4 + static_cast<int>(rng() % 9);
    Graph g = random_graph(n, rng);
    ++rep.graphs_examined;
    if (auto detail = test(g)) rep.counterexamples.push_back({graph6_encode(g), *detail});
  }
  seal(rep, timer);
  return rep;
}

Report verify_interlacing(int random_trials, std::uint64_t seed) {
  if (random_trials < 1) throw std::invalid_argument("trials must be >= 1");
  Timer timer;
  Report rep;
  rep.check = "interlacing";
  rep.params = {{"trials", std::to_string(random_trials)}, {"seed", std::to_string(seed)}};
  std::mt19937_64 rng(seed);
  for (int t = 0; t < random_trials; ++t) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = random_graph(n, rng);
    while (g.edge_count() == 0) g = random_graph(n, rng);
    int pick = static_cast<int>(rng() % static_cast<std::uint64_t>(g.edge_count()));
    int u = -1, v = -1;
    for (int i = 0; i < n && u < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (g.has_edge(i, j) && pick-- == 0) {
          u = i;
          v = j;
          break;
        }
    ++rep.graphs_examined;
    if (!edge_deletion_interlaces(g, u, v)) {
      std::ostringstream os;
      os << "deleting edge " << u << "-" << v << " violates interlacing";
      rep.counterexamples.push_back({graph6_encode(g), os.str()});
    }
  }
  seal(rep, timer);
  return rep;
}

Report verify_degree_eigenvalue_bounds(int max_n, int jobs) {
  require_range("max-n", max_n, 4, 9);
  Timer timer;
  Report rep;
  rep.check = "degree-bounds";
  rep.params = {{"max-n", std::to_string(max_n)}};
  GraphTest test = [](const Graph& g) -> std::optional<std::string> {
    std::vector<int> degs = degree_sequence(g);
    IntPoly cp = charpoly(g);
    std::vector<std::string> faults;
    if (lambda_k_vs(cp, 1, Rat(degs[0] + 1)) == Ordering::less)
      faults.push_back("lambda_1 < d1 + 1 = " + std::to_string(degs[0] + 1));
    if (lambda_k_vs(cp, 2, Rat(degs[1])) == Ordering::less)
      faults.push_back("lambda_2 < d2 = " + std::to_string(degs[1]));
    if (lambda_k_vs(cp, 3, Rat(degs[2] - 1)) == Ordering::less)
      faults.push_back("lambda_3 < d3 - 1 = " + std::to_string(degs[2] - 1));
    if (faults.empty()) return std::nullopt;
    return join_all(faults, "; ");
  };
  for (int n = 4; n <= max_n; ++n) {
    GraphStream stream = graphs(n, true);
    rep.graphs_examined += static_cast<long long>(stream.size());
    auto found = sweep(stream.items, jobs, test);
    rep.counterexamples.insert(rep.counterexamples.end(), found.begin(), found.end());
  }
  seal(rep, timer);
  return rep;
}

Report verify_cospectral_invariants(int max_n) {
  require_range("max-n", max_n, 1, 8);
  Timer timer;
  Report rep;
  rep.check = "cospectral-invariants";
  rep.params = {{"max-n", std::to_string(max_n)}};
  for (int n = 1; n <= max_n; ++n) {
    GraphStream stream = graphs(n, false);
    rep.graphs_examined += static_cast<long long>(stream.size());
    struct Item {
      std::string g6;
      int edges;
      int comps;
      Int trees;
      long long degsq;
    };
    std::map<SpectrumKey, std::vector<Item>> classes;
    for (const Graph& g : stream) {
      IntPoly cp = charpoly(g);
      std::string g6 = graph6_encode(g);
      int comps = component_count(g);
      int m0 = multiplicity_at(cp, Rat(0));
      if (m0 != comps) {
        std::ostringstream os;
        os << "eigenvalue 0 multiplicity " << m0 << " differs from component count " << comps;
        rep.counterexamples.push_back({g6, os.str()});
      }
      long long degsq = 0;
      for (int i = 0; i < n; ++i) degsq += static_cast<long long>(g.degree(i)) * g.degree(i);
      classes[cp.coeffs()].push_back(
          {std::move(g6), g.edge_count(), comps, spanning_tree_count(g), degsq});
    }
    for (const auto& [key, members] : classes) {
      if (members.size() < 2) continue;
      std::vector<std::string> names;
      for (const Item& it : members) names.push_back(it.g6);
      std::ostringstream note;
      note << "n=" << n << " cospectral class: " << join_all(names, " ");
      rep.notes.push_back(note.str());
      const Item& base = members.front();
      for (std::size_t i = 1; i < members.size(); ++i) {
        const Item& it = members[i];
        std::vector<std::string> faults;
        if (it.edges != base.edges) faults.push_back("edge count differs");
        if (it.comps != base.comps) faults.push_back("component count differs");
        if (it.trees != base.trees) faults.push_back("spanning tree count differs");
        if (it.degsq != base.degsq) faults.push_back("degree-square sum differs");
        if (!faults.empty())
          rep.counterexamples.push_back(
              {it.g6, join_all(faults, "; ") + " from cospectral mate " + base.g6});
      }
    }
  }
  seal(rep, timer);
  return rep;
}

std::vector<std::vector<int>> feasible_degree_sequences(int n, int p, int q,
                                                        BinaryStarVariant variant) {
  if (p < 0 || q < 0) throw std::invalid_argument("parameters must be >= 0");
  if (variant == BinaryStarVariant::B && q < 1)
    throw std::invalid_argument("variant B requires q >= 1");
  if (n != 2 * p + q + 2) throw std::invalid_argument("order must equal 2p + q + 2");
  if (n < 4) throw std::invalid_argument("order must be at least 4");
  IntPoly cp = variant == BinaryStarVariant::B ? charpoly_binary_star(p, q, p)
                                               : charpoly_binary_star_prime(p, q, p);
  // d1 is capped one below the top of the family's lambda_1 bracket,
  // d3 by the largest d with lambda_3 >= d - 1.
  const int d1_cap = variant == BinaryStarVariant::B ? p + q : p + q + 1;
  int d3_cap = 0;
  for (int d = n - 1; d >= 1; --d)
    if (lambda_k_vs(cp, 3, Rat(d - 1)) != Ordering::less) {
      d3_cap = d;
      break;
    }
  const long edges2 = variant == BinaryStarVariant::B ? 4L * (p + q) : 4L * (p + q) + 2;
  const long degsq = variant == BinaryStarVariant::B
                         ? 2L * (p + q) * (p + q) + 4L * q + 2L * p
                         : 2L * (p + q + 1) * (p + q + 1) + 4L * q + 2L * p;
  const long c = n - 2;
  std::vector<std::vector<int>> out;
  for (int d1 = 1; d1 <= d1_cap; ++d1) {
    for (int d2 = 1; d2 <= d1; ++d2) {
      // Tail of n-2 vertices with degrees in {1, 2, 3}: counts follow from
      // the vertex, degree-sum and degree-square equations.
      long a = edges2 - d1 - d2;
      long b = degsq - 1L * d1 * d1 - 1L * d2 * d2;
      long t1 = a - c;
      long t2 = b - a;
      if (t2 % 2 != 0) continue;
      long n3 = t2 / 2 - t1;
      long n2 = t1 - 2 * n3;
      long n1 = c - n3 - n2;
      if (n3 < 0 || n2 < 0 || n1 < 0) continue;
      int head = n3 > 0 ? 3 : (n2 > 0 ? 2 : (n1 > 0 ? 1 : 0));
      if (head == 0 || head > d2 || head > d3_cap) continue;
      std::vector<int> seq{d1, d2};
      seq.insert(seq.end(), static_cast<std::size_t>(n3), 3);
      seq.insert(seq.end(), static_cast<std::size_t>(n2), 2);
      seq.insert(seq.end(), static_cast<std::size_t>(n1), 1);
      out.push_back(std::move(seq));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Report dls_check(int max_n, int jobs) {
  require_range("max-n", max_n, 2, 9);
  Timer timer;
  Report rep;
  rep.check = "dls";
  rep.params = {{"max-n", std::to_string(max_n)}};
  for (int n = 2; n <= max_n; ++n) {
    GraphStream stream = graphs(n, true);
    rep.graphs_examined += static_cast<long long>(stream.size());
    std::vector<SpectrumKey> keys(stream.size());
    int workers = jobs;
    if (workers > static_cast<int>(stream.size())) workers = static_cast<int>(stream.size());
    if (workers <= 1) {
      for (std::size_t i = 0; i < stream.size(); ++i) keys[i] = spectrum_key(stream.items[i]);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (int j = 0; j < workers; ++j)
        pool.emplace_back([&stream, &keys, workers, j] {
          for (std::size_t i = j; i < stream.size(); i += workers)
            keys[i] = spectrum_key(stream.items[i]);
        });
      for (auto& t : pool) t.join();
    }
    std::map<SpectrumKey, std::vector<std::string>> classes;
    for (std::size_t i = 0; i < stream.size(); ++i)
      classes[keys[i]].push_back(graph6_encode(stream.items[i]));
    std::set<std::string> family;
    for (int p = 0; 2 * p + 2 <= n; ++p) {
      int qq = n - 2 - 2 * p;
      if (qq >= 1) family.insert(canonical_form(binary_star(BinaryStarVariant::B, p, qq, p)));
      family.insert(canonical_form(binary_star(BinaryStarVariant::BPrime, p, qq, p)));
    }
    for (const auto& [key, members] : classes) {
      if (members.size() < 2) continue;
      std::ostringstream note;
      note << "n=" << n << " cospectral class: " << join_all(members, " ");
      rep.notes.push_back(note.str());
      if (n <= 5) {
        rep.counterexamples.push_back(
            {members.front(), "order-" + std::to_string(n) +
                                  " graphs sharing a spectrum: " + join_all(members, " ")});
        continue;
      }
      for (const std::string& g6 : members) {
        if (!family.count(g6)) continue;
        std::vector<std::string> mates;
        for (const std::string& other : members)
          if (other != g6) mates.push_back(other);
        rep.counterexamples.push_back(
            {g6, "symmetric binary star shares its spectrum with " + join_all(mates, " ")});
      }
    }
  }
  seal(rep, timer);
  return rep;
}

Graph random_graph(int n, std::mt19937_64& rng) {
  Graph g = Graph::empty(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() & 1) g = g.with_edge(i, j);
  return g;
}

}  // namespace lapdist

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lapdist/combinatorics.hpp"
#include "lapdist/enumeration.hpp"
#include "lapdist/graph.hpp"
#include "lapdist/graph6.hpp"
#include "lapdist/interval.hpp"
#include "lapdist/intpoly.hpp"
#include "lapdist/numbers.hpp"
#include "lapdist/report.hpp"
#include "lapdist/roots.hpp"
#include "lapdist/spectral.hpp"
#include "lapdist/verify.hpp"

namespace {

using namespace lapdist;

Graph read_graph(const std::string& arg) {
  if (arg != "-") return graph6_decode(arg);
  std::string line;
  if (!std::getline(std::cin, line))
    throw std::invalid_argument("expected a graph6 line on standard input");
  return graph6_decode(line);
}

void require_flag(const CLI::Option* opt, const std::string& family, const char* name) {
  if (opt->count() == 0)
    throw std::invalid_argument("family " + family + " requires " + name);
}

int emit_report(const Report& r, const std::string& format) {
  std::string text = format == "json" ? r.to_json() : r.to_text();
  if (text.empty() || text.back() != '\n') text += '\n';
  std::cout << text;
  return r.pass ? 0 : 1;
}

// The per-order classification checks swept over 4..max_n as one report.
Report classification_sweep(const char* check, int max_n, Report (*one_order)(int)) {
  Report out;
  out.check = check;
  out.params = {{"max-n", std::to_string(max_n)}};
  for (int n = 4; n <= max_n; ++n) {
    Report part = one_order(n);
    out.graphs_examined += part.graphs_examined;
    out.elapsed_ms += part.elapsed_ms;
    out.counterexamples.insert(out.counterexamples.end(), part.counterexamples.begin(),
                               part.counterexamples.end());
    out.notes.insert(out.notes.end(), part.notes.begin(), part.notes.end());
  }
  out.pass = out.counterexamples.empty();
  finalize_counterexamples(out);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Laplacian spectra of small graphs and pendant-star families"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto* construct = app.add_subcommand("construct", "Build a family graph and print its graph6");
  std::string family;
  int c_n = 0, c_m = 0, c_p = 0, c_q = 0, c_r = 0;
  std::vector<int> c_parts;
  std::string c_variant = "B";
  construct
      ->add_option("--family", family,
                   "path, cycle, star, complete, complete-multipartite, binary-star, "
                   "double-star, double-starlike, k1-join")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "star", "complete", "complete-multipartite",
                             "binary-star", "double-star", "double-starlike", "k1-join"}));
  auto* opt_n = construct->add_option("--n", c_n, "order (path, cycle, star, complete, k1-join) or path length (double-starlike)");
  auto* opt_m = construct->add_option("--m", c_m, "clique split parameter (k1-join)");
  auto* opt_p = construct->add_option("--p", c_p, "pendant count");
  auto* opt_q = construct->add_option("--q", c_q, "shared degree-2 vertex count (binary-star) or pendant count (double-starlike)");
  auto* opt_r = construct->add_option("--r", c_r, "pendant count");
  auto* opt_parts = construct->add_option("--parts", c_parts, "part sizes (complete-multipartite)");
  construct->add_option("--variant", c_variant, "binary star variant: B or B' (alias Bprime)")
      ->check(CLI::IsMember({"B", "B'", "Bprime"}));
  construct->callback([&] {
    Graph g;
    if (family == "path" || family == "cycle" || family == "star" || family == "complete") {
      require_flag(opt_n, family, "--n");
      g = family == "path"    ? path(c_n)
          : family == "cycle" ? cycle(c_n)
          : family == "star"  ? star(c_n)
                              : complete(c_n);
    } else if (family == "complete-multipartite") {
      require_flag(opt_parts, family, "--parts");
      g = complete_multipartite(c_parts);
    } else if (family == "binary-star") {
      require_flag(opt_p, family, "--p");
      require_flag(opt_q, family, "--q");
      require_flag(opt_r, family, "--r");
      auto variant = c_variant == "B" ? BinaryStarVariant::B : BinaryStarVariant::BPrime;
      g = binary_star(variant, c_p, c_q, c_r);
    } else if (family == "double-star") {
      require_flag(opt_p, family, "--p");
      require_flag(opt_r, family, "--r");
      g = double_star(c_p, c_r);
    } else if (family == "double-starlike") {
      require_flag(opt_p, family, "--p");
      require_flag(opt_n, family, "--n");
      require_flag(opt_q, family, "--q");
      g = double_starlike(c_p, c_n, c_q);
    } else {
      require_flag(opt_n, family, "--n");
      require_flag(opt_m, family, "--m");
      g = k1_join_family(c_n, c_m);
    }
    std::cout << graph6_encode(g) << "\n";
  });

  auto* charpoly_cmd =
      app.add_subcommand("charpoly", "Laplacian characteristic polynomial coefficients, constant term first");
  std::string cp_graph;
  charpoly_cmd->add_option("graph", cp_graph, "graph6 string, or - to read one line from stdin")
      ->required();
  charpoly_cmd->callback([&] {
    std::vector<std::string> parts = charpoly(read_graph(cp_graph)).coeff_strings();
    for (std::size_t i = 0; i < parts.size(); ++i)
      std::cout << parts[i] << (i + 1 < parts.size() ? " " : "\n");
  });

  auto* spectrum_cmd = app.add_subcommand(
      "spectrum", "Laplacian eigenvalues: exact value or isolating interval, with multiplicity");
  std::string sp_graph, sp_width = "1/1048576";
  spectrum_cmd->add_option("graph", sp_graph, "graph6 string, or - to read one line from stdin")
      ->required();
  spectrum_cmd->add_option("--width", sp_width, "isolating interval width bound (rational)");
  spectrum_cmd->callback([&] {
    Rat width = parse_rat(sp_width);
    if (width <= 0) throw std::invalid_argument("--width must be positive");
    RootSummary summary = isolate_roots(charpoly(read_graph(sp_graph)), width);
    for (const RootEntry& e : summary.roots) {
      if (e.exact)
        std::cout << e.exact->get_str() << " " << e.multiplicity << "\n";
      else
        std::cout << "(" << e.lo.get_str() << "," << e.hi.get_str() << ") " << e.multiplicity
                  << "\n";
    }
  });

  auto* count_cmd =
      app.add_subcommand("count", "Laplacian eigenvalues in an interval, counted with multiplicity");
  std::string ct_graph, ct_interval;
  count_cmd
      ->add_option("--interval", ct_interval,
                   "interval such as \"[0,2]\", \"(2,7]\" or \"[0,7/2)\"; inf for unbounded ends")
      ->required();
  count_cmd->add_option("graph", ct_graph, "graph6 string, or - to read one line from stdin")
      ->required();
  count_cmd->callback([&] {
    std::cout << m_count(read_graph(ct_graph), Interval::parse(ct_interval)) << "\n";
  });

  auto* alpha_cmd =
      app.add_subcommand("alpha", "Independence number and one maximum independent set");
  std::string al_graph;
  alpha_cmd->add_option("graph", al_graph, "graph6 string, or - to read one line from stdin")
      ->required();
  alpha_cmd->callback([&] {
    std::vector<int> witness = max_independent_set(read_graph(al_graph));
    std::cout << witness.size() << "\n";
    for (std::size_t i = 0; i < witness.size(); ++i)
      std::cout << witness[i] << (i + 1 < witness.size() ? " " : "\n");
  });

  auto* iso_cmd = app.add_subcommand("iso", "Decide whether two graphs are isomorphic");
  std::string iso_a, iso_b;
  iso_cmd->add_option("first", iso_a, "graph6 string, or - to read one line from stdin")
      ->required();
  iso_cmd->add_option("second", iso_b, "graph6 string, or - to read one line from stdin")
      ->required();
  iso_cmd->callback([&] {
    Graph a = read_graph(iso_a);
    Graph b = read_graph(iso_b);
    std::cout << (is_isomorphic(a, b) ? "isomorphic" : "non-isomorphic") << "\n";
  });

  auto* enumerate_cmd = app.add_subcommand(
      "enumerate", "All non-isomorphic graphs of one order, canonical graph6, sorted");
  int en_n = 0;
  bool en_connected = false;
  enumerate_cmd->add_option("--n", en_n, "order, at most 9")->required();
  enumerate_cmd->add_flag("--connected", en_connected, "connected graphs only");
  enumerate_cmd->callback([&] {
    for (const Graph& g : graphs(en_n, en_connected)) std::cout << graph6_encode(g) << "\n";
  });

  auto* verify_cmd = app.add_subcommand("verify", "Run one theorem check and report the outcome");
  std::string v_check, v_format = "text";
  int v_max_n = 0, v_trials = 0, v_jobs = 1;
  std::uint64_t v_seed = 1;
  verify_cmd->add_option("check", v_check, "which check to run")
      ->required()
      ->check(CLI::IsMember({"lower-bound", "alpha2-classification",
                             "alpha-n-minus-2-classification", "brackets", "spanning-trees",
                             "algebraic-connectivity", "multiplicity", "interlacing",
                             "degree-bounds", "cospectral-invariants"}));
  auto* v_maxn_opt = verify_cmd->add_option("--max-n", v_max_n, "sweep bound; default depends on the check");
  auto* v_trials_opt = verify_cmd->add_option("--trials", v_trials, "random trials (multiplicity, interlacing)");
  verify_cmd->add_option("--seed", v_seed, "random seed, default 1");
  verify_cmd->add_option("--jobs", v_jobs, "worker threads for graph sweeps, default 1")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", v_format, "json or text, default text")
      ->check(CLI::IsMember({"json", "text"}));
  verify_cmd->callback([&] {
    auto max_n = [&](int fallback) { return v_maxn_opt->count() ? v_max_n : fallback; };
    auto trials = [&](int fallback) { return v_trials_opt->count() ? v_trials : fallback; };
    Report r;
    if (v_check == "lower-bound")
      r = verify_lower_bound(max_n(7), v_jobs);
    else if (v_check == "alpha2-classification")
      r = classification_sweep("alpha2-classification", max_n(7), classify_equality_alpha2);
    else if (v_check == "alpha-n-minus-2-classification")
      r = classification_sweep("alpha-n-minus-2-classification", max_n(7),
                               classify_equality_alpha_n_minus_2);
    else if (v_check == "brackets")
      r = verify_eigenvalue_brackets_sweep(max_n(14));
    else if (v_check == "spanning-trees")
      r = verify_spanning_trees(max_n(16));
    else if (v_check == "algebraic-connectivity")
      r = verify_algebraic_connectivity(max_n(14));
    else if (v_check == "multiplicity")
      r = verify_multiplicity_lemmas(max_n(7), trials(1000), v_seed);
    else if (v_check == "interlacing")
      r = verify_interlacing(trials(500), v_seed);
    else if (v_check == "degree-bounds")
      r = verify_degree_eigenvalue_bounds(max_n(7), v_jobs);
    else
      r = verify_cospectral_invariants(max_n(7));
    exit_code = emit_report(r, v_format);
  });

  auto* dls_cmd = app.add_subcommand(
      "dls", "Check that symmetric binary stars are determined by their Laplacian spectrum");
  int d_max_n = 8, d_jobs = 1;
  std::string d_format = "text";
  dls_cmd->add_option("--max-n", d_max_n, "largest order to sweep, default 8, at most 9");
  dls_cmd->add_option("--jobs", d_jobs, "worker threads, default 1")->check(CLI::PositiveNumber);
  dls_cmd->add_option("--format", d_format, "json or text, default text")
      ->check(CLI::IsMember({"json", "text"}));
  dls_cmd->callback([&] { exit_code = emit_report(dls_check(d_max_n, d_jobs), d_format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

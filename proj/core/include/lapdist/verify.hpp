#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lapdist/graph.hpp"
#include "lapdist/report.hpp"

namespace lapdist {

// Theorem checks. A mathematical violation is never an exception: it lands
// in the report as a counterexample. jobs > 1 shards the graph sweep across
// threads where a check supports it; reports are identical either way.

// alpha(G) <= m_G[0, n - alpha(G)] over all connected graphs of order
// 3..max_n. Requires 3 <= max_n <= 9.
Report verify_lower_bound(int max_n, int jobs = 1);

// The connected graphs with alpha = 2 and m_G[0, n-2] = 2 are exactly the
// two-clique joins K_(n-m) joined onto K_1 and K_(m-1), 2 <= m <= n-1.
// Set equality both ways at one order. Requires 4 <= n <= 9.
Report classify_equality_alpha2(int n);

// The connected graphs with alpha = n-2 and m_G[0,2] = n-2 are exactly the
// binary stars: B(p,q,r) with p+q+r >= 3, B'(p,0,r) with pr >= 2, and
// B'(p,q,r) with q >= 1. Requires 4 <= n <= 9.
Report classify_equality_alpha_n_minus_2(int n);

// One parameter triple, normalized so p >= r: eigenvalue count in (2, n],
// lambda_3 = 2 where the multiplicity factor exists, the strict lambda_1 and
// lambda_2 windows where they hold, and the factor sign-table identities.
Report verify_eigenvalue_brackets(BinaryStarVariant variant, int p, int q, int r);
// Every valid triple of both variants with order <= max_order.
Report verify_eigenvalue_brackets_sweep(int max_order);

// Spanning tree counts of both families against their closed formulas, and
// coefficient extraction against the reduced determinant. Order <= 16.
Report verify_spanning_trees(int max_order);

// Algebraic connectivity strictly between 0 and 1 for every family member
// with pendants on both centers (pr != 0). Order <= 16.
Report verify_algebraic_connectivity(int max_order);

// Multiplicity of eigenvalue 1 at least the star degree; multiplicity of
// eigenvalue 2 at least |N|-1 for every degree-2 common-neighborhood set N,
// and at least the sum of those over all pairs. Exhaustive to n_exhaustive
// (<= 7) plus seeded random graphs on up to 12 vertices.
Report verify_multiplicity_lemmas(int n_exhaustive, int random_trials, std::uint64_t seed);

// Edge-deletion interlacing on seeded random (graph, edge) pairs, n <= 10.
Report verify_interlacing(int random_trials, std::uint64_t seed);

// d1 <= lambda_1 - 1, d2 <= lambda_2, d3 <= lambda_3 + 1 over all connected
// graphs of order 4..max_n. Requires max_n <= 9.
Report verify_degree_eigenvalue_bounds(int max_n, int jobs = 1);

// Groups all graphs of each order <= max_n (<= 8) by spectrum and asserts
// the spectral invariants (edges, components, spanning trees, degree-square
// sum) agree within every group; also that the multiplicity of eigenvalue 0
// is the component count. Cospectral groups are reported as notes.
Report verify_cospectral_invariants(int max_n);

// Degree sequences compatible with the spectrum of B(p,q,p) or B'(p,q,p):
// solutions (d1, d2, 3^n3, 2^n2, 1^n1) of the vertex, edge and degree-square
// equations under the exact spectral caps on d1 and d3. Sorted ascending.
std::vector<std::vector<int>> feasible_degree_sequences(int n, int p, int q,
                                                        BinaryStarVariant variant);

// Every symmetric binary star B(p,q,p) and B'(p,q,p) of order <= max_n is
// alone in its cospectral class among connected graphs, and every class with
// at most 5 vertices is a singleton. Requires 2 <= max_n <= 9.
Report dls_check(int max_n, int jobs = 1);

// Erdos-Renyi G(n, 1/2): one generator word per vertex pair, pairs in
// row-major order, low bit decides. Deterministic across platforms.
Graph random_graph(int n, std::mt19937_64& rng);

}  // namespace lapdist

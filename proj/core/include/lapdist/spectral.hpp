#pragma once

#include <vector>

#include "lapdist/graph.hpp"
#include "lapdist/interval.hpp"
#include "lapdist/intpoly.hpp"

namespace lapdist {

class LaplacianMatrix {
 public:
  explicit LaplacianMatrix(const Graph& g);

  int size() const { return n_; }
  const Int& at(int i, int j) const { return entries_[i * n_ + j]; }

 private:
  int n_;
  std::vector<Int> entries_;
};

// det(xI - L(G)): monic, degree n, constant term 0. Faddeev-LeVerrier with
// exact integer divisions.
IntPoly charpoly(const Graph& g);

// Determinant of L(G) with row and column 0 removed, by fraction-free
// elimination. Equals the spanning tree count (matrix-tree).
Int reduced_laplacian_det(const Graph& g);

// Characteristic polynomial of the join of a and b without building the
// graph. The division it performs is always exact; divisibility_error here
// means a bug.
IntPoly charpoly_join(const Graph& a, const Graph& b);

// Closed forms for the graph families. Each equals charpoly of the
// corresponding constructor's graph, coefficient for coefficient.
IntPoly charpoly_double_star(int p, int r);  // requires p + r >= 2
IntPoly charpoly_binary_star(int p, int q, int r);  // requires q >= 1
IntPoly charpoly_binary_star_prime(int p, int q, int r);  // requires p+q+r >= 1
IntPoly charpoly_binary_star(const BinaryStarParams& params);
IntPoly charpoly_k1_join_family(int n, int m);

// Low-degree factors of the family characteristic polynomials, exposed for
// the sign-table checks.
IntPoly binary_star_quartic(int p, int q, int r);
IntPoly binary_star_cubic(int p, int q);  // variant B with one pendant side empty
IntPoly binary_star_prime_quartic(int p, int q, int r);
IntPoly double_star_cubic(int p, int r);

// Laplacian eigenvalues of g in iv, counted with multiplicity.
int m_count(const Graph& g, const Interval& iv);

// Spanning tree count from the degree-1 coefficient of the characteristic
// polynomial (exact division by n), and independently from the reduced
// determinant. Both are 0 for disconnected graphs.
Int spanning_tree_count(const Graph& g);
Int spanning_tree_count_determinant(const Graph& g);

// Exact polynomial identity relating the characteristic polynomials of a
// graph and its complement: x * mu(G, n-x) = (-1)^(n-1) (n-x) * mu(co-G, x).
bool complement_identity_check(const Graph& g);

enum class Ordering { less, equal, greater };

// Compares the k-th largest Laplacian eigenvalue (1 <= k <= n) with c by
// root counting, so the answer is exact even at multiple eigenvalues.
Ordering lambda_k_vs(const Graph& g, int k, const Rat& c);
Ordering lambda_k_vs(const IntPoly& cp, int k, const Rat& c);

// Checks the full edge-deletion interlacing chain between g and g minus the
// edge uv: with both spectra sorted ascending, theta_j(g-e) <= theta_j(g) <=
// theta_(j+1)(g-e) for every j. The edge must be present.
bool edge_deletion_interlaces(const Graph& g, int u, int v);

// Characteristic polynomial coefficient vector, low degree first. Equal keys
// exactly when the Laplacian spectra coincide.
using SpectrumKey = std::vector<Int>;
SpectrumKey spectrum_key(const Graph& g);

}  // namespace lapdist

#include "lapdist/spectral.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include "lapdist/roots.hpp"

namespace lapdist {

namespace {

IntPoly linear(long root) { return IntPoly{-root, 1}; }  // x - root

void check_family_order(long n) {
  if (n > kMaxOrder)
    throw resource_limit_error("family order " + std::to_string(n) + " exceeds cap of 64");
}

}  // namespace

LaplacianMatrix::LaplacianMatrix(const Graph& g) : n_(g.order()), entries_(n_ * n_) {
  for (int i = 0; i < n_; ++i) {
    entries_[i * n_ + i] = g.degree(i);
    std::uint64_t nb = g.neighbor_bits(i);
    while (nb) {
      int j = std::countr_zero(nb);
      nb &= nb - 1;
      entries_[i * n_ + j] = -1;
    }
  }
}

IntPoly charpoly(const Graph& g) {
  int n = g.order();
  std::vector<Int> coeffs(n + 1);
  coeffs[n] = 1;
  std::vector<Int> M(n * n), LM(n * n);
  for (int i = 0; i < n; ++i) M[i * n + i] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) {
      long deg = g.degree(i);
      for (int j = 0; j < n; ++j) {
        Int s = M[i * n + j] * deg;
        std::uint64_t nb = g.neighbor_bits(i);
        while (nb) {
          int t = std::countr_zero(nb);
          nb &= nb - 1;
          s -= M[t * n + j];
        }
        LM[i * n + j] = std::move(s);
      }
    }
    Int tr = 0;
    for (int i = 0; i < n; ++i) tr += LM[i * n + i];
    Int c = -tr;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
    coeffs[n - k] = c;
    M = LM;
    for (int i = 0; i < n; ++i) M[i * n + i] += c;
  }
  return IntPoly(std::move(coeffs));
}

Int reduced_laplacian_det(const Graph& g) {
  int m = g.order() - 1;
  if (m == 0) return 1;
  std::vector<Int> a(m * m);
  LaplacianMatrix L(g);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a[i * m + j] = L.at(i + 1, j + 1);
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < m; ++k) {
    if (a[k * m + k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < m; ++i)
        if (a[i * m + k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = k; j < m; ++j) std::swap(a[k * m + j], a[piv * m + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j < m; ++j) {
        Int t = a[i * m + j] * a[k * m + k] - a[i * m + k] * a[k * m + j];
        mpz_divexact(a[i * m + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * m + k] = 0;
    }
    prev = a[k * m + k];
  }
  return sign > 0 ? a[m * m - 1] : -a[m * m - 1];
}

IntPoly charpoly_join(const Graph& a, const Graph& b) {
  long n1 = a.order(), n2 = b.order();
  check_family_order(n1 + n2);
  IntPoly num = IntPoly::x() * linear(n1 + n2) * charpoly(a).shifted(Int(-n2)) *
                charpoly(b).shifted(Int(-n1));
  return num.exact_divide(linear(n1)).exact_divide(linear(n2));
}

IntPoly double_star_cubic(int p, int r) {
  long n = p + r + 2;
  return IntPoly{-n, 2 * n + long{p} * r + 1, -(n + 2), 1};
}

IntPoly charpoly_double_star(int p, int r) {
  if (p < 0 || r < 0) throw std::invalid_argument("pendant counts must be >= 0");
  if (p + r < 2) throw std::invalid_argument("double star closed form needs p + r >= 2");
  long n = p + r + 2;
  check_family_order(n);
  return IntPoly::x() * linear(1).pow(static_cast<unsigned>(n - 4)) * double_star_cubic(p, r);
}

IntPoly binary_star_quartic(int p, int q, int r) {
  long P = p, Q = q, R = r;
  long a1 = 2 * Q + P + R + 4;
  long a2 = Q * Q + (P + R) * Q + P * R + 3 * (2 * Q + P + R) + 5;
  long a3 = 2 * (Q * Q + P * Q + R * Q + P * R + 3 * Q + P + R + 1);
  long a4 = (P + Q + R + 2) * Q;
  return IntPoly{a4, -a3, a2, -a1, 1};
}

IntPoly binary_star_cubic(int p, int q) {
  long P = p, Q = q;
  long b1 = 2 * Q + P + 3;
  long b2 = Q * Q + P * Q + 4 * Q + 2 * P + 2;
  long b3 = (P + Q + 2) * Q;
  return IntPoly{-b3, b2, -b1, 1};
}

IntPoly binary_star_prime_quartic(int p, int q, int r) {
  long P = p, Q = q, R = r;
  long a1 = 2 * Q + P + R + 6;
  long a2 = Q * Q + (P + R) * Q + P * R + 4 * (2 * Q + P + R) + 13;
  long a3 = 2 * (Q * Q + P * Q + R * Q + P * R) + 5 * (2 * Q + P + R) + 12;
  long a4 = Q * Q + (P + R) * Q + 2 * (2 * Q + P + R) + 4;
  return IntPoly{a4, -a3, a2, -a1, 1};
}

IntPoly charpoly_binary_star(int p, int q, int r) {
  if (p < 0 || r < 0) throw std::invalid_argument("pendant counts must be >= 0");
  if (q < 1) throw std::invalid_argument("variant B closed form needs q >= 1");
  long n = long{p} + q + r + 2;
  check_family_order(n);
  IntPoly x = IntPoly::x();
  IntPoly two_part = linear(2).pow(static_cast<unsigned>(q - 1));
  if (p == 0 && r == 0) return x * two_part * linear(q) * linear(n);
  if (p == 0 || r == 0) {
    int s = std::max(p, r);
    return x * linear(1).pow(static_cast<unsigned>(s - 1)) * two_part * binary_star_cubic(s, q);
  }
  return x * linear(1).pow(static_cast<unsigned>(p + r - 2)) * two_part *
         binary_star_quartic(p, q, r);
}

IntPoly charpoly_binary_star_prime(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw std::invalid_argument("parameters must be >= 0");
  if (p + q + r < 1) throw std::invalid_argument("closed form needs p + q + r >= 1");
  long n = long{p} + q + r + 2;
  check_family_order(n);
  IntPoly x = IntPoly::x();
  if (q >= 1 && (p == 0 || r == 0)) {
    int s = std::max(p, r);
    return x * linear(1).pow(static_cast<unsigned>(s)) *
           linear(2).pow(static_cast<unsigned>(q - 1)) * linear(q + 2) * linear(n);
  }
  IntPoly quartic = binary_star_prime_quartic(p, q, r);
  if (p + r >= 2) {
    IntPoly ones = linear(1).pow(static_cast<unsigned>(p + r - 2));
    if (q >= 1) return x * ones * linear(2).pow(static_cast<unsigned>(q - 1)) * quartic;
    return x * ones * quartic.exact_divide(linear(2));
  }
  // remaining case: q = 0 and p + r = 1
  return x * quartic.exact_divide(linear(2)).exact_divide(linear(1));
}

IntPoly charpoly_binary_star(const BinaryStarParams& params) {
  if (params.variant == BinaryStarVariant::B)
    return charpoly_binary_star(params.p, params.q, params.r);
  return charpoly_binary_star_prime(params.p, params.q, params.r);
}

IntPoly charpoly_k1_join_family(int n, int m) {
  if (m < 2 || m > n - 1) throw std::invalid_argument("k1 join family needs 2 <= m <= n-1");
  check_family_order(n);
  return IntPoly::x() * linear(n - m) * linear(n - 1).pow(static_cast<unsigned>(m - 2)) *
         linear(n).pow(static_cast<unsigned>(n - m));
}

int m_count(const Graph& g, const Interval& iv) {
  return count_roots_with_multiplicity(charpoly(g), iv);
}

Int spanning_tree_count(const Graph& g) {
  IntPoly mu = charpoly(g);
  Int c1 = abs_int(mu.coeff(1));
  Int t, rem;
  mpz_tdiv_qr_ui(t.get_mpz_t(), rem.get_mpz_t(), c1.get_mpz_t(),
                 static_cast<unsigned long>(g.order()));
  if (rem != 0)
    throw divisibility_error("degree-1 coefficient of the characteristic polynomial "
                             "is not divisible by the order");
  return t;
}

Int spanning_tree_count_determinant(const Graph& g) { return reduced_laplacian_det(g); }

bool complement_identity_check(const Graph& g) {
  long n = g.order();
  IntPoly lhs = IntPoly::x() * charpoly(g).reflected().shifted(Int(-n));
  IntPoly rhs = IntPoly{n, -1} * charpoly(complement(g));
  if (n % 2 == 0) rhs = -rhs;
  return lhs == rhs;
}

Ordering lambda_k_vs(const IntPoly& cp, int k, const Rat& c) {
  int n = cp.degree();
  if (k < 1 || k > n) throw std::invalid_argument("eigenvalue index out of range");
  int above = count_roots_with_multiplicity(cp, Interval::above(c));
  if (above >= k) return Ordering::greater;
  if (above + multiplicity_at(cp, c) >= k) return Ordering::equal;
  return Ordering::less;
}

Ordering lambda_k_vs(const Graph& g, int k, const Rat& c) {
  return lambda_k_vs(charpoly(g), k, c);
}

namespace {

// Eigenvalue counting function t -> #{ eigenvalues <= t }, with the chains
// built once so repeated queries are cheap.
class CountAtMost {
 public:
  explicit CountAtMost(const IntPoly& p) {
    for (auto& [factor, mult] : squarefree_decomposition(p))
      parts_.emplace_back(SturmChain(factor), mult);
  }

  int operator()(const Rat& t) const {
    int total = 0;
    for (const auto& [chain, mult] : parts_)
      total += mult * chain.count(Interval::at_most(t));
    return total;
  }

 private:
  std::vector<std::pair<SturmChain, int>> parts_;
};

}  // namespace

bool edge_deletion_interlaces(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("edge not present");
  IntPoly mu_g = charpoly(g);
  IntPoly mu_h = charpoly(g.without_edge(u, v));
  CountAtMost count_g(mu_g), count_h(mu_h);

  // Both counting functions are right-continuous steps, constant between
  // consecutive distinct roots of the product. One rational sample strictly
  // inside each gap (plus one below and one above everything) decides the
  // chain; strict separation of the isolating intervals guarantees the
  // samples land in the gaps.
  IntPoly product = squarefree_part(mu_g * mu_h);
  RootSummary summary;
  for (Rat width(1, 4);; width /= 2) {
    summary = isolate_roots(product, width);
    bool separated = true;
    for (size_t i = 0; i + 1 < summary.roots.size(); ++i)
      if (!(summary.roots[i].upper() < summary.roots[i + 1].lower())) {
        separated = false;
        break;
      }
    if (separated) break;
  }

  std::vector<Rat> samples;
  samples.push_back(summary.roots.front().lower() - 1);
  for (size_t i = 0; i + 1 < summary.roots.size(); ++i)
    samples.push_back((summary.roots[i].upper() + summary.roots[i + 1].lower()) / 2);
  samples.push_back(summary.roots.back().upper() + 1);

  for (const Rat& t : samples) {
    int cg = count_g(t), ch = count_h(t);
    if (cg > ch || ch > cg + 1) return false;
  }
  return true;
}

SpectrumKey spectrum_key(const Graph& g) { return charpoly(g).coeffs(); }

}  // namespace lapdist

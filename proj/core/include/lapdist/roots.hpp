#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lapdist/interval.hpp"
#include "lapdist/intpoly.hpp"

namespace lapdist {

// Sturm chain of a squarefree polynomial. The sequence is built once; every
// query is a pass of exact sign evaluations.
class SturmChain {
 public:
  explicit SturmChain(IntPoly squarefree);

  const IntPoly& polynomial() const { return seq_.front(); }

  int variations_at(const Rat& v) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

  // Distinct roots in (a, b] for a <= b.
  int count_half_open(const Rat& a, const Rat& b) const;
  // Distinct roots in an arbitrary interval.
  int count(const Interval& iv) const;

 private:
  std::vector<IntPoly> seq_;
};

// Distinct real roots of p in iv. p must be nonzero.
int count_distinct_roots(const IntPoly& p, const Interval& iv);

// Real roots of p in iv counted with multiplicity. p must be nonzero.
int count_roots_with_multiplicity(const IntPoly& p, const Interval& iv);

// Multiplicity of v as a root of p (0 when p(v) != 0). p must be nonzero.
int multiplicity_at(const IntPoly& p, const Rat& v);

// One real root: either exact rational, or an open isolating interval with
// rational endpoints containing exactly one real root of the polynomial.
struct RootEntry {
  std::optional<Rat> exact;
  Rat lo, hi;
  int multiplicity = 1;

  Rat lower() const { return exact ? *exact : lo; }
  Rat upper() const { return exact ? *exact : hi; }
};

struct RootSummary {
  std::vector<RootEntry> roots;  // ascending
  int total_multiplicity() const;
};

// Isolates every real root of a nonzero polynomial. Rational roots are
// extracted exactly (divisor trial on each squarefree factor); the rest get
// pairwise disjoint open intervals, each no wider than the requested width.
// Sturm chains are built once per squarefree factor and reused across calls.
class RootIsolator {
 public:
  explicit RootIsolator(const IntPoly& p);
  RootSummary isolate(const Rat& width) const;

 private:
  struct Factor {
    IntPoly poly;  // squarefree, no rational roots, degree >= 1
    SturmChain chain;
    int multiplicity;
  };
  std::vector<std::pair<Rat, int>> rational_roots_;  // ascending
  std::vector<Factor> factors_;
};

RootSummary isolate_roots(const IntPoly& p, const Rat& width = Rat(1, 1 << 20));

}  // namespace lapdist

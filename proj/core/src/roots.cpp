#include "lapdist/roots.hpp"

#include <algorithm>

namespace lapdist {

SturmChain::SturmChain(IntPoly squarefree) {
  if (squarefree.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
  seq_.push_back(squarefree.primitive_part());
  if (seq_.front().degree() < 1) return;
  seq_.push_back(seq_.front().derivative().primitive_part());
  while (seq_.back().degree() > 0) {
    const IntPoly& a = seq_[seq_.size() - 2];
    const IntPoly& b = seq_.back();
    IntPoly r = pseudo_rem(a, b);
    if (r.is_zero()) break;
    // pseudo_rem scales by lc(b)^(delta+1); flip so the scale is positive,
    // then negate as the Sturm recurrence requires.
    int delta = a.degree() - b.degree();
    bool positive_scale = sgn(b.leading()) > 0 || delta % 2 == 1;
    seq_.push_back((positive_scale ? -r : r).primitive_part());
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int prev = 0, count = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int SturmChain::variations_at(const Rat& v) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const IntPoly& p : seq_) signs.push_back(p.sign_at(v));
  return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const IntPoly& p : seq_) signs.push_back(p.sign_at_neg_inf());
  return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const IntPoly& p : seq_) signs.push_back(p.sign_at_pos_inf());
  return count_variations(signs);
}

int SturmChain::count_half_open(const Rat& a, const Rat& b) const {
  if (a > b) throw std::invalid_argument("inverted root-count range");
  if (a == b) return 0;
  return variations_at(a) - variations_at(b);
}

int SturmChain::count(const Interval& iv) const {
  int va = iv.lo ? variations_at(*iv.lo) : variations_at_neg_inf();
  int vb = iv.hi ? variations_at(*iv.hi) : variations_at_pos_inf();
  int c = va - vb;  // distinct roots in (lo, hi]
  if (iv.lo && iv.lo_closed && seq_.front().sign_at(*iv.lo) == 0) ++c;
  if (iv.hi && !iv.hi_closed && seq_.front().sign_at(*iv.hi) == 0) --c;
  return c;
}

int count_distinct_roots(const IntPoly& p, const Interval& iv) {
  if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  if (p.degree() == 0) return 0;
  return SturmChain(squarefree_part(p)).count(iv);
}

int count_roots_with_multiplicity(const IntPoly& p, const Interval& iv) {
  if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  int total = 0;
  for (const auto& [f, m] : squarefree_decomposition(p)) total += m * SturmChain(f).count(iv);
  return total;
}

int multiplicity_at(const IntPoly& p, const Rat& v) {
  if (p.is_zero()) throw std::invalid_argument("multiplicity in zero polynomial");
  IntPoly lin(std::vector<Int>{-v.get_num(), v.get_den()});
  IntPoly q = p;
  int k = 0;
  while (!q.is_zero() && q.sign_at(v) == 0) {
    q = q.exact_divide(lin);
    ++k;
  }
  return k;
}

RootIsolator::RootIsolator(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of zero polynomial");
  for (auto& [f, m] : squarefree_decomposition(p)) {
    IntPoly g = f;
    if (g.coeff(0) == 0) {
      rational_roots_.emplace_back(Rat(0), m);
      g = g.exact_divide(IntPoly::x());
    }
    if (g.degree() >= 1) {
      // Any rational root n/d in lowest terms has n | g(0) and d | lc(g).
      std::vector<Int> nums = divisors(g.coeff(0));
      std::vector<Int> dens = divisors(g.leading());
      for (const Int& den : dens) {
        for (const Int& num : nums) {
          if (gcd(num, den) != 1) continue;
          for (int s : {1, -1}) {
            if (g.degree() < 1) break;
            Rat r(s > 0 ? num : Int(-num), den);
            if (g.sign_at(r) == 0) {
              rational_roots_.emplace_back(r, m);
              g = g.exact_divide(IntPoly(std::vector<Int>{-r.get_num(), r.get_den()}));
            }
          }
        }
      }
    }
    if (g.degree() >= 1) factors_.push_back({g, SturmChain(g), m});
  }
  std::sort(rational_roots_.begin(), rational_roots_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

namespace {

struct Box {
  Rat lo, hi;
  const SturmChain* chain;
  int multiplicity;
};

void refine_once(Box& b) {
  Rat mid = (b.lo + b.hi) / 2;
  if (b.chain->count_half_open(b.lo, mid) == 1)
    b.hi = mid;
  else
    b.lo = mid;
}

}  // namespace

RootSummary RootIsolator::isolate(const Rat& width) const {
  if (sgn(width) <= 0) throw std::invalid_argument("isolation width must be positive");
  std::vector<Box> boxes;
  for (const Factor& f : factors_) {
    Int maxc = 0;
    for (int i = 0; i < f.poly.degree(); ++i) maxc = std::max(maxc, Int(abs(f.poly.coeff(i))));
    Int bound;
    mpz_cdiv_q(bound.get_mpz_t(), maxc.get_mpz_t(), Int(abs(f.poly.leading())).get_mpz_t());
    bound += 2;
    struct Piece {
      Rat a, b;
      int va, vb;
    };
    std::vector<Piece> stack{{Rat(-bound), Rat(bound), f.chain.variations_at(Rat(-bound)),
                              f.chain.variations_at(Rat(bound))}};
    while (!stack.empty()) {
      Piece pc = stack.back();
      stack.pop_back();
      int n = pc.va - pc.vb;
      if (n == 0) continue;
      if (n == 1) {
        boxes.push_back({pc.a, pc.b, &f.chain, f.multiplicity});
        continue;
      }
      Rat mid = (pc.a + pc.b) / 2;
      int vm = f.chain.variations_at(mid);
      stack.push_back({pc.a, mid, pc.va, vm});
      stack.push_back({mid, pc.b, vm, pc.vb});
    }
  }

  for (Box& b : boxes) {
    while (b.hi - b.lo > width) refine_once(b);
    for (const auto& [r, m] : rational_roots_)
      while (b.lo < r && r < b.hi) refine_once(b);
  }

  std::sort(boxes.begin(), boxes.end(), [](const Box& x, const Box& y) { return x.lo < y.lo; });
  for (bool overlapped = true; overlapped;) {
    overlapped = false;
    for (size_t i = 0; i + 1 < boxes.size(); ++i) {
      while (boxes[i].hi > boxes[i + 1].lo) {
        refine_once(boxes[i]);
        refine_once(boxes[i + 1]);
        overlapped = true;
      }
    }
    if (overlapped)
      std::sort(boxes.begin(), boxes.end(), [](const Box& x, const Box& y) { return x.lo < y.lo; });
  }

  RootSummary out;
  for (const auto& [r, m] : rational_roots_) {
    RootEntry e;
    e.exact = r;
    e.multiplicity = m;
    out.roots.push_back(std::move(e));
  }
  for (const Box& b : boxes) {
    RootEntry e;
    e.lo = b.lo;
    e.hi = b.hi;
    e.multiplicity = b.multiplicity;
    out.roots.push_back(std::move(e));
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const RootEntry& a, const RootEntry& b) {
    if (a.lower() != b.lower()) return a.lower() < b.lower();
    return a.exact.has_value() && !b.exact.has_value();
  });
  return out;
}

int RootSummary::total_multiplicity() const {
  int t = 0;
  for (const RootEntry& e : roots) t += e.multiplicity;
  return t;
}

RootSummary isolate_roots(const IntPoly& p, const Rat& width) {
  return RootIsolator(p).isolate(width);
}

}  // namespace lapdist

#include "lapdist/intpoly.hpp"

#include <algorithm>

namespace lapdist {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(Int c) {
  IntPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

IntPoly IntPoly::monomial(Int coeff, int deg) {
  IntPoly p;
  if (coeff != 0) {
    p.c_.assign(deg + 1, Int(0));
    p.c_[deg] = std::move(coeff);
  }
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
  return c_[i];
}

const Int& IntPoly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& k) const {
  if (k == 0) return {};
  IntPoly r = *this;
  for (auto& v : r.c_) v *= k;
  return r;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly r{1};
  IntPoly base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1u) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Int> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
  return IntPoly(std::move(r));
}

Int IntPoly::eval(const Int& v) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

Rat IntPoly::eval(const Rat& v) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + Rat(*it);
  return acc;
}

int IntPoly::sign_at(const Rat& v) const {
  if (is_zero()) return 0;
  // Homogeneous Horner: sign of sum c_i num^i den^(deg-i).
  const Int& num = v.get_num();
  const Int& den = v.get_den();
  Int acc = c_.back();
  Int dp = 1;
  for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) {
    dp *= den;
    acc = acc * num + *it * dp;
  }
  return sgn(acc);
}

int IntPoly::sign_at_pos_inf() const { return is_zero() ? 0 : sgn(c_.back()); }

int IntPoly::sign_at_neg_inf() const {
  if (is_zero()) return 0;
  int s = sgn(c_.back());
  return (degree() % 2 == 0) ? s : -s;
}

IntPoly IntPoly::shifted(const Int& c) const {
  IntPoly r;
  IntPoly lin{0, 1};
  lin = lin + IntPoly::constant(c);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + IntPoly::constant(*it);
  return r;
}

IntPoly IntPoly::reflected() const {
  IntPoly r = *this;
  for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

IntPoly IntPoly::exact_divide(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (is_zero()) return {};
  int n = degree(), m = divisor.degree();
  if (n < m) throw divisibility_error("degree of dividend below divisor");
  std::vector<Int> rem = c_;
  std::vector<Int> quot(n - m + 1, Int(0));
  const Int& dm = divisor.c_.back();
  for (int k = n - m; k >= 0; --k) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[m + k].get_mpz_t(), dm.get_mpz_t());
    if (r != 0) throw divisibility_error("inexact polynomial division");
    quot[k] = q;
    if (q != 0)
      for (int i = 0; i <= m; ++i) rem[i + k] -= q * divisor.c_[i];
  }
  for (const Int& v : rem)
    if (v != 0) throw divisibility_error("nonzero remainder in exact division");
  return IntPoly(std::move(quot));
}

Int IntPoly::content() const {
  Int g = 0;
  for (const Int& v : c_) g = gcd(g, v);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Int c = content();
  IntPoly r = *this;
  for (auto& v : r.c_) v /= c;
  return r;
}

std::vector<std::string> IntPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const Int& v : c_) out.push_back(v.get_str());
  return out;
}

IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  int e = a.degree() - b.degree() + 1;
  const Int& d = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    IntPoly t = IntPoly::monomial(a.leading(), a.degree() - b.degree());
    a = a * d - t * b;
    --e;
  }
  if (e > 0) a = a * pow_int(d, e);
  return a;
}

namespace {

IntPoly positive_primitive(const IntPoly& p) {
  IntPoly r = p.primitive_part();
  if (!r.is_zero() && sgn(r.leading()) < 0) r = -r;
  return r;
}

Int exact_quot(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return positive_primitive(b);
  if (b.is_zero()) return positive_primitive(a);
  IntPoly A = positive_primitive(a);
  IntPoly B = positive_primitive(b);
  if (A.degree() < B.degree()) std::swap(A, B);
  // Subresultant remainder sequence keeps intermediate coefficients small.
  Int g = 1, h = 1;
  for (;;) {
    int delta = A.degree() - B.degree();
    IntPoly R = pseudo_rem(A, B);
    if (R.is_zero()) return positive_primitive(B);
    if (R.degree() == 0) return IntPoly{1};
    A = B;
    Int div = g * pow_int(h, delta);
    std::vector<Int> rc = R.coeffs();
    for (auto& v : rc) v = exact_quot(v, div);
    B = IntPoly(std::move(rc));
    g = abs(A.leading());
    h = (delta == 0) ? h : exact_quot(pow_int(g, delta), pow_int(h, delta - 1));
  }
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() <= 0) return out;
  IntPoly w = positive_primitive(p);
  IntPoly g = poly_gcd(w, w.derivative());
  if (g.degree() == 0) {
    out.emplace_back(w, 1);
    return out;
  }
  IntPoly b = w.exact_divide(g);
  IntPoly d = w.derivative().exact_divide(g) - b.derivative();
  int m = 1;
  while (b.degree() > 0) {
    IntPoly f = poly_gcd(b, d);
    if (f.degree() > 0) out.emplace_back(f, m);
    b = b.exact_divide(f);
    d = d.exact_divide(f) - b.derivative();
    ++m;
  }
  return out;
}

IntPoly squarefree_part(const IntPoly& p) {
  IntPoly r{1};
  for (const auto& [f, m] : squarefree_decomposition(p)) r = r * f;
  return r;
}

}  // namespace lapdist

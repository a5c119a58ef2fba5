#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "lapdist/numbers.hpp"

namespace lapdist {

// Dense univariate polynomial with arbitrary-precision integer coefficients.
// Coefficients are stored low degree first with no trailing zeros, so the
// zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<Int> coeffs);

  static IntPoly constant(Int c);
  static IntPoly x();
  static IntPoly monomial(Int coeff, int deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int i) const;
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& leading() const;

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const Int& k) const;
  bool operator==(const IntPoly& o) const = default;

  IntPoly pow(unsigned e) const;
  IntPoly derivative() const;

  Int eval(const Int& v) const;
  Rat eval(const Rat& v) const;
  // Sign of the value at v, computed without rational arithmetic.
  int sign_at(const Rat& v) const;
  int sign_at_pos_inf() const;
  int sign_at_neg_inf() const;

  // p(x + c)
  IntPoly shifted(const Int& c) const;
  // p(-x)
  IntPoly reflected() const;

  // Quotient of an exact division; throws divisibility_error on any remainder.
  IntPoly exact_divide(const IntPoly& divisor) const;

  // Gcd of the coefficients, nonnegative; zero for the zero polynomial.
  Int content() const;
  // p divided by its content; leading sign is preserved.
  IntPoly primitive_part() const;

  std::vector<std::string> coeff_strings() const;

 private:
  void trim();
  std::vector<Int> c_;
};

inline IntPoly operator*(const Int& k, const IntPoly& p) { return p * k; }

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, for deg a >= deg b.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b);

// Primitive gcd with positive leading coefficient (subresultant remainder
// sequence, so coefficient growth stays polynomial). gcd(0, 0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Yun decomposition: returns [(f1, m1), (f2, m2), ...] with m1 < m2 < ...,
// each fi primitive with positive leading coefficient and squarefree, and
// p = c * prod fi^mi for a rational constant c. Constants decompose to [].
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Product of the distinct irreducible factors of p, primitive with positive
// leading coefficient.
IntPoly squarefree_part(const IntPoly& p);

}  // namespace lapdist

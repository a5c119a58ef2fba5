#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lapdist {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a computation would exceed a hard size cap (graph order, sweep size).
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an exact division that must succeed leaves a remainder.
struct divisibility_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int sign(const Int& v) { return sgn(v); }
inline int sign(const Rat& v) { return sgn(v); }

inline Int abs_int(const Int& v) { return abs(v); }

inline Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

// Parses "-3", "7/2". Result is canonicalized to lowest terms with positive denominator.
Rat parse_rat(std::string_view s);

// Positive divisors of |v|, sorted ascending. v must be nonzero.
std::vector<Int> divisors(const Int& v);

}  // namespace lapdist

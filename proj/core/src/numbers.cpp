#include "lapdist/numbers.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace lapdist {

Rat parse_rat(std::string_view s) {
  auto bad = [&] { throw std::invalid_argument("malformed rational: '" + std::string(s) + "'"); };
  if (s.empty()) bad();
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) t.remove_prefix(1);
    if (t.empty()) return false;
    return std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  std::string_view num = s, den;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (!is_int(den)) bad();
  }
  if (!is_int(num)) bad();
  // mpz rejects a leading '+' even though it is valid here.
  auto to_int = [](std::string_view t) {
    if (t[0] == '+') t.remove_prefix(1);
    return Int(std::string(t));
  };
  Rat r;
  if (den.empty()) {
    r = to_int(num);
  } else {
    Int d = to_int(den);
    if (d == 0) bad();
    r = Rat(to_int(num), d);
  }
  r.canonicalize();
  return r;
}

namespace {

Int pollard_rho(const Int& n) {
  // n is odd, composite and has no small prime factors.
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
  if (n <= 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 32) != 0) {
    ++out[n];
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<Int> divisors(const Int& v) {
  if (v == 0) throw std::invalid_argument("divisors of zero are undefined");
  Int n = abs(v);
  std::map<Int, unsigned> factors;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    while (n % p == 0) {
      ++factors[p];
      n /= p;
    }
  }
  factor_into(n, factors);
  std::vector<Int> divs{1};
  for (const auto& [p, e] : factors) {
    size_t base = divs.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace lapdist

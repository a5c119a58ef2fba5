#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lapdist/numbers.hpp"

namespace lapdist {

// Interval over the rationals. A missing endpoint means that side is
// unbounded; unbounded sides are always open.
struct Interval {
  std::optional<Rat> lo, hi;
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval closed(const Rat& a, const Rat& b);
  static Interval open(const Rat& a, const Rat& b);
  static Interval half_open(const Rat& a, const Rat& b);  // (a, b]
  static Interval point(const Rat& a);
  static Interval at_least(const Rat& a);  // [a, +inf)
  static Interval above(const Rat& a);     // (a, +inf)
  static Interval at_most(const Rat& b);   // (-inf, b]
  static Interval all();

  // Accepts "[a,b]", "(a,b]", "[a,b)", "(a,b)" with rational endpoints like
  // "5" or "7/2", and "inf"/"-inf" (or "+inf") for unbounded sides.
  static Interval parse(std::string_view s);

  bool contains(const Rat& v) const;
  std::string str() const;
};

}  // namespace lapdist

#include "lapdist/interval.hpp"

#include <algorithm>
#include <cctype>

namespace lapdist {

namespace {

Interval make(std::optional<Rat> lo, std::optional<Rat> hi, bool lc, bool hc) {
  if (!lo) lc = false;
  if (!hi) hc = false;
  if (lo && hi) {
    if (*lo > *hi) throw std::invalid_argument("inverted interval");
    if (*lo == *hi && !(lc && hc)) throw std::invalid_argument("empty interval");
  }
  return Interval{std::move(lo), std::move(hi), lc, hc};
}

}  // namespace

Interval Interval::closed(const Rat& a, const Rat& b) { return make(a, b, true, true); }
Interval Interval::open(const Rat& a, const Rat& b) { return make(a, b, false, false); }
Interval Interval::half_open(const Rat& a, const Rat& b) { return make(a, b, false, true); }
Interval Interval::point(const Rat& a) { return make(a, a, true, true); }
Interval Interval::at_least(const Rat& a) { return make(a, std::nullopt, true, false); }
Interval Interval::above(const Rat& a) { return make(a, std::nullopt, false, false); }
Interval Interval::at_most(const Rat& b) { return make(std::nullopt, b, false, true); }
Interval Interval::all() { return Interval{}; }

Interval Interval::parse(std::string_view s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto bad = [&] { throw std::invalid_argument("malformed interval: '" + std::string(s) + "'"); };
  if (t.size() < 3) bad();
  bool lc = t.front() == '[';
  if (!lc && t.front() != '(') bad();
  bool hc = t.back() == ']';
  if (!hc && t.back() != ')') bad();
  std::string body = t.substr(1, t.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos) bad();
  auto endpoint = [&](const std::string& e, bool neg_side) -> std::optional<Rat> {
    if (e == "inf" || e == "+inf" || e == "-inf") {
      if (neg_side != (e == "-inf")) bad();
      return std::nullopt;
    }
    return parse_rat(e);
  };
  auto lo = endpoint(body.substr(0, comma), true);
  auto hi = endpoint(body.substr(comma + 1), false);
  if (!lo && lc) bad();
  if (!hi && hc) bad();
  return make(std::move(lo), std::move(hi), lc, hc);
}

bool Interval::contains(const Rat& v) const {
  if (lo) {
    if (v < *lo || (v == *lo && !lo_closed)) return false;
  }
  if (hi) {
    if (v > *hi || (v == *hi && !hi_closed)) return false;
  }
  return true;
}

std::string Interval::str() const {
  std::string out;
  out += lo_closed ? '[' : '(';
  out += lo ? to_string(*lo) : std::string("-inf");
  out += ',';
  out += hi ? to_string(*hi) : std::string("inf");
  out += hi_closed ? ']' : ')';
  return out;
}

}  // namespace lapdist

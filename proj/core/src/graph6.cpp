#include "lapdist/graph6.hpp"

#include <stdexcept>

namespace lapdist {

namespace {

constexpr int kOffset = 63;

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

std::string graph6_encode(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kOffset));
        chunk = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kOffset));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  for (char c : text)
    if (!printable(c)) throw std::invalid_argument("graph6: byte out of printable range");

  size_t pos = 0;
  long n;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') {
      if (text.size() < 8) throw std::invalid_argument("graph6: truncated order header");
      throw resource_limit_error("graph6: order exceeds cap of 64");
    }
    if (text.size() < 4) throw std::invalid_argument("graph6: truncated order header");
    n = (long{text[1] - kOffset} << 12) | (long{text[2] - kOffset} << 6) | long{text[3] - kOffset};
    if (n <= 62) throw std::invalid_argument("graph6: non-canonical order header");
    pos = 4;
  } else {
    n = text[0] - kOffset;
    pos = 1;
  }
  if (n == 0) throw std::invalid_argument("graph6: order 0 not supported");
  if (n > kMaxOrder) throw resource_limit_error("graph6: order exceeds cap of 64");

  long bits = n * (n - 1) / 2;
  size_t body = static_cast<size_t>((bits + 5) / 6);
  if (text.size() - pos != body) throw std::invalid_argument("graph6: body length mismatch");

  Graph g = Graph::empty(static_cast<int>(n));
  long consumed = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      int chunk = text[pos + consumed / 6] - kOffset;
      int bit = (chunk >> (5 - consumed % 6)) & 1;
      if (bit) g = g.with_edge(i, j);
      ++consumed;
    }
  if (consumed % 6 != 0) {
    int chunk = text[pos + consumed / 6] - kOffset;
    int pad = 6 - static_cast<int>(consumed % 6);
    if (chunk & ((1 << pad) - 1)) throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return g;
}

}  // namespace lapdist

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lapdist {

struct Counterexample {
  std::string graph6;
  std::string detail;
  bool operator==(const Counterexample&) const = default;
};

// Outcome of one verification check. Fails exactly when counterexamples are
// present. Serialization is deterministic: params keep insertion order and
// counterexamples are sorted, so reruns differ only in elapsed_ms.
struct Report {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = true;
  std::vector<Counterexample> counterexamples;
  long long graphs_examined = 0;
  long long elapsed_ms = 0;
  std::vector<std::string> notes;  // informational findings, never affect pass

  std::string to_json() const;
  std::string to_text() const;
};

// Combines partial reports of the same check: stats add, counterexamples and
// notes concatenate (sorted), pass ANDs. Associative and order-insensitive.
Report merge_reports(const Report& a, const Report& b);

// Sorts counterexamples and keeps at most cap of them (cap < 0 keeps all).
void finalize_counterexamples(Report& r, int cap = 10);

}  // namespace lapdist

#include "lapdist/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace lapdist {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

bool counterexample_less(const Counterexample& a, const Counterexample& b) {
  if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
  return a.detail < b.detail;
}

}  // namespace

std::string Report::to_json() const {
  std::ostringstream os;
  os << "{\"check\":\"" << json_escape(check) << "\",\"params\":{";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) os << ',';
    os << '"' << json_escape(params[i].first) << "\":\"" << json_escape(params[i].second)
       << '"';
  }
  os << "},\"status\":\"" << (pass ? "pass" : "fail") << "\",\"counterexamples\":[";
  for (std::size_t i = 0; i < counterexamples.size(); ++i) {
    if (i) os << ',';
    os << "{\"graph6\":\"" << json_escape(counterexamples[i].graph6) << "\",\"detail\":\""
       << json_escape(counterexamples[i].detail) << "\"}";
  }
  os << "],\"stats\":{\"graphs_examined\":" << graphs_examined
     << ",\"elapsed_ms\":" << elapsed_ms << '}';
  if (!notes.empty()) {
    os << ",\"notes\":[";
    for (std::size_t i = 0; i < notes.size(); ++i) {
      if (i) os << ',';
      os << '"' << json_escape(notes[i]) << '"';
    }
    os << ']';
  }
  os << '}';
  return os.str();
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "check                           status  graphs_examined  elapsed_ms\n";
  std::string name = check;
  if (name.size() < 30) name.resize(30, ' ');
  os << name << "  " << (pass ? "pass  " : "fail  ");
  std::string examined = std::to_string(graphs_examined);
  os << std::string(examined.size() < 15 ? 15 - examined.size() : 0, ' ') << examined << "  ";
  std::string ms = std::to_string(elapsed_ms);
  os << std::string(ms.size() < 10 ? 10 - ms.size() : 0, ' ') << ms << '\n';
  for (const auto& [key, value] : params) os << "param  " << key << "  " << value << '\n';
  for (const auto& ce : counterexamples)
    os << "counterexample  " << ce.graph6 << "  " << ce.detail << '\n';
  for (const auto& note : notes) os << "note  " << note << '\n';
  return os.str();
}

Report merge_reports(const Report& a, const Report& b) {
  if (a.check != b.check)
    throw std::invalid_argument("cannot merge reports of different checks");
  Report out = a;
  out.pass = a.pass && b.pass;
  out.counterexamples.insert(out.counterexamples.end(), b.counterexamples.begin(),
                             b.counterexamples.end());
  std::sort(out.counterexamples.begin(), out.counterexamples.end(), counterexample_less);
  out.graphs_examined += b.graphs_examined;
  out.elapsed_ms += b.elapsed_ms;
  out.notes.insert(out.notes.end(), b.notes.begin(), b.notes.end());
  return out;
}

void finalize_counterexamples(Report& r, int cap) {
  std::sort(r.counterexamples.begin(), r.counterexamples.end(), counterexample_less);
  if (cap >= 0 && r.counterexamples.size() > static_cast<std::size_t>(cap))
    r.counterexamples.resize(cap);
}

}  // namespace lapdist

#pragma once

#include <cstddef>
#include <cstdio>
#include <functional>
#include <utility>
#include <sstream>
#include <string>
#include <vector>

namespace ordcal {

inline std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
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

/// One JSONL line per term.
inline std::string jsonl_terms(const std::vector<std::string>& terms) {
  std::string out;
  for (const auto& t : terms) out += "{\"term\": \"" + json_escape(t) + "\"}\n";
  return out;
}

/// Covers relation of a finite partial order by transitive reduction.
inline std::vector<std::pair<std::size_t, std::size_t>> covers(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
  auto lt = [&](std::size_t a, std::size_t b) {
    return a != b && leq(a, b) && !leq(b, a);
  };
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!lt(i, j)) continue;
      bool direct = true;
      for (std::size_t m = 0; m < n && direct; ++m)
        if (lt(i, m) && lt(m, j)) direct = false;
      if (direct) out.emplace_back(i, j);
    }
  return out;
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

/// DOT digraph of the Hasse diagram.
inline std::string dot_hasse(
    const std::vector<std::string>& labels,
    const std::function<bool(std::size_t, std::size_t)>& leq) {
  std::ostringstream out;
  out << "digraph hasse {\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    out << "  n" << i << " [label=\"" << dot_escape(labels[i]) << "\"];\n";
  for (auto [i, j] : covers(labels.size(), leq))
    out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

/// Edge list back out of our own DOT output.
inline std::vector<std::pair<std::size_t, std::size_t>> parse_dot_edges(
    const std::string& dot) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::istringstream in(dot);
  std::string line;
  while (std::getline(in, line)) {
    auto arrow = line.find("->");
    if (arrow == std::string::npos) continue;
    std::size_t a = 0, b = 0;
    if (std::sscanf(line.c_str(), " n%zu -> n%zu", &a, &b) == 2)
      out.emplace_back(a, b);
  }
  return out;
}

/// CSV comparison matrix with a label header row and column.
inline std::string csv_matrix(
    const std::vector<std::string>& labels,
    const std::function<std::string(std::size_t, std::size_t)>& cell) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::string out;
  for (const auto& l : labels) out += "," + quote(l);
  out += "\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out += quote(labels[i]);
    for (std::size_t j = 0; j < labels.size(); ++j) out += "," + cell(i, j);
    out += "\n";
  }
  return out;
}

}  // namespace ordcal

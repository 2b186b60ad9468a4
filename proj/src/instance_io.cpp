#include "listchroma/instance_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace listchroma {

ParseError::ParseError(int line, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(std::move(tok));
  return out;
}

long long to_int(const std::string& tok, int line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("expected an integer for ") + what + ", got '" + tok + "'");
  return value;
}

int to_id(const std::string& tok, int line, const char* what, long long limit) {
  const long long v = to_int(tok, line, what);
  if (v < 1 || v > limit)
    throw ParseError(line, std::string(what) + " " + tok + " is out of range 1.." + std::to_string(limit));
  return static_cast<int>(v - 1);
}

}  // namespace

RawInstance parse_instance(std::istream& in) {
  RawInstance raw;
  bool have_header = false;
  long long n = 0, m = 0, ncolors = 0;
  long long edges_seen = 0;
  std::vector<char> weight_seen, list_seen;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokenize(line);
    if (tok.empty() || tok[0] == "c") continue;
    const std::string& kind = tok[0];

    if (kind == "p") {
      if (have_header) throw ParseError(lineno, "duplicate problem line");
      if (tok.size() != 5 || tok[1] != "mwlcp")
        throw ParseError(lineno, "expected 'p mwlcp <n> <m> <ncolors>'");
      n = to_int(tok[2], lineno, "n");
      m = to_int(tok[3], lineno, "m");
      ncolors = to_int(tok[4], lineno, "ncolors");
      if (n < 0 || m < 0 || ncolors < 0) throw ParseError(lineno, "counts must be non-negative");
      raw.graph = Graph(static_cast<int>(n));
      raw.weights.assign(static_cast<std::size_t>(ncolors), 0);
      raw.lists.assign(static_cast<std::size_t>(n), {});
      weight_seen.assign(static_cast<std::size_t>(ncolors), 0);
      list_seen.assign(static_cast<std::size_t>(n), 0);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "problem line must come first");

    if (kind == "e") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
      const int u = to_id(tok[1], lineno, "vertex", n);
      const int v = to_id(tok[2], lineno, "vertex", n);
      if (u == v) throw ParseError(lineno, "self-loop on vertex " + tok[1]);
      if (raw.graph.adjacent(u, v)) throw ParseError(lineno, "duplicate edge " + tok[1] + " " + tok[2]);
      if (++edges_seen > m) throw ParseError(lineno, "more edges than declared (" + std::to_string(m) + ")");
      raw.graph.add_edge(u, v);
    } else if (kind == "w") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'w <j> <weight>'");
      const int j = to_id(tok[1], lineno, "color", ncolors);
      const long long w = to_int(tok[2], lineno, "weight");
      if (w < 0) throw ParseError(lineno, "weight must be non-negative");
      if (weight_seen[j]) throw ParseError(lineno, "duplicate weight for color " + tok[1]);
      weight_seen[j] = 1;
      raw.weights[j] = w;
    } else if (kind == "l") {
      if (tok.size() < 3) throw ParseError(lineno, "expected 'l <v> <len> <j1> ... <jlen>'");
      const int v = to_id(tok[1], lineno, "vertex", n);
      const long long len = to_int(tok[2], lineno, "list length");
      if (len < 0 || static_cast<long long>(tok.size()) != 3 + len)
        throw ParseError(lineno, "list length " + tok[2] + " does not match " +
                                     std::to_string(tok.size() - 3) + " listed colors");
      if (list_seen[v]) throw ParseError(lineno, "duplicate list for vertex " + tok[1]);
      list_seen[v] = 1;
      auto& list = raw.lists[v];
      for (std::size_t i = 3; i < tok.size(); ++i) {
        const int j = to_id(tok[i], lineno, "color", ncolors);
        for (int prev : list)
          if (prev == j) throw ParseError(lineno, "color " + tok[i] + " listed twice");
        list.push_back(j);
      }
    } else {
      throw ParseError(lineno, "unknown line type '" + kind + "'");
    }
  }

  if (!have_header) throw ParseError(lineno, "missing problem line");
  if (edges_seen != m)
    throw ParseError(lineno, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges_seen));
  for (long long j = 0; j < ncolors; ++j)
    if (!weight_seen[j]) throw ParseError(lineno, "missing weight for color " + std::to_string(j + 1));
  for (long long v = 0; v < n; ++v)
    if (!list_seen[v]) throw ParseError(lineno, "missing list for vertex " + std::to_string(v + 1));
  return raw;
}

RawInstance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const RawInstance& raw,
                    const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  const auto edges = raw.graph.edges();
  out << "p mwlcp " << raw.graph.size() << ' ' << edges.size() << ' ' << raw.weights.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  for (std::size_t j = 0; j < raw.weights.size(); ++j) out << "w " << j + 1 << ' ' << raw.weights[j] << '\n';
  for (std::size_t v = 0; v < raw.lists.size(); ++v) {
    out << "l " << v + 1 << ' ' << raw.lists[v].size();
    for (ColorId j : raw.lists[v]) out << ' ' << j + 1;
    out << '\n';
  }
}

std::string instance_text(const RawInstance& raw, const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_instance(out, raw, comments);
  return out.str();
}

}  // namespace listchroma

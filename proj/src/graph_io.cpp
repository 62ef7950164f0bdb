#include "sqcm/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "sqcm/errors.hpp"

namespace sqcm {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    out.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

[[noreturn]] void parse_fail(int line, int column, const std::string& msg) {
  throw input_error("edge list, line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + msg);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<std::string> names;
  std::map<std::string, int> ids;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int lineno = 0;
  auto intern = [&](const std::string& name) {
    auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    const int id = static_cast<int>(names.size());
    names.push_back(name);
    ids.emplace(name, id);
    return id;
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() == 1)
      parse_fail(lineno, toks[0].column, "expected two vertex names, got one");
    if (toks.size() > 2)
      parse_fail(lineno, toks[2].column, "expected two vertex names, got " +
                                             std::to_string(toks.size()));
    const int u = intern(toks[0].text);
    const int v = intern(toks[1].text);
    if (u == v) parse_fail(lineno, toks[0].column, "loop edge '" + toks[0].text + "' rejected");
    edges.emplace_back(u, v);
  }
  if (names.size() > 64)
    throw input_error("edge list: more than 64 vertices are not supported");
  Graph g(std::move(names));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) out += g.name(u) + " " + g.name(v) + "\n";
  std::string isolated;
  for (int v : g.vertices())
    if (g.degree(v) == 0) isolated += " " + g.name(v);
  if (!isolated.empty()) out += "# isolated:" + isolated + "\n";
  return out;
}

Graph parse_graph6(const std::string& line) {
  if (line.empty()) throw input_error("graph6: empty string");
  if (line[0] == '~') throw input_error("graph6: extended size headers are not supported");
  const int n = line[0] - 63;
  if (n < 0 || n > 62) throw input_error("graph6: bad size byte");
  const int nbits = n * (n - 1) / 2;
  const int nchars = (nbits + 5) / 6;
  if (static_cast<int>(line.size()) != 1 + nchars)
    throw input_error("graph6: expected " + std::to_string(1 + nchars) +
                      " characters, got " + std::to_string(line.size()));
  Graph g = Graph::with_default_names(n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      const char c = line[static_cast<size_t>(1 + bit / 6)];
      if (c < 63 || c > 126) throw input_error("graph6: byte out of range");
      if (((c - 63) >> (5 - bit % 6)) & 1) g.add_edge(i, j);
      ++bit;
    }
  return g;
}

std::string to_graph6(const Graph& g) {
  const auto verts = g.vertex_list();
  const int n = static_cast<int>(verts.size());
  if (n > 62) throw input_error("graph6: more than 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int bit = 0;
  char acc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = static_cast<char>(acc << 1);
      if (g.adjacent(verts[static_cast<size_t>(i)], verts[static_cast<size_t>(j)])) acc |= 1;
      if (++bit % 6 == 0) {
        out += static_cast<char>(acc + 63);
        acc = 0;
      }
    }
  if (bit % 6 != 0) out += static_cast<char>((acc << (6 - bit % 6)) + 63);
  return out;
}

std::string canonical_graph6(const Graph& g) {
  const auto verts = g.vertex_list();
  const int n = static_cast<int>(verts.size());
  if (n > 8) throw resource_error("canonical_graph6: exact canonicalization capped at n <= 8");
  std::vector<int> perm(verts.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    Graph h = Graph::with_default_names(n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (g.adjacent(verts[static_cast<size_t>(perm[static_cast<size_t>(i)])],
                       verts[static_cast<size_t>(perm[static_cast<size_t>(j)])]))
          h.add_edge(i, j);
    std::string enc = to_graph6(h);
    if (best.empty() || enc < best) best = std::move(enc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best.empty() ? to_graph6(g) : best;
}

namespace {

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  int val = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    val = val * 10 + (c - '0');
    if (val > 1000000) return false;
  }
  out = val;
  return true;
}

Graph paper_p3() {
  Graph g(std::vector<std::string>{"x", "y", "z", "w"});
  g.add_edge(2, 0);  // z-x
  g.add_edge(0, 1);  // x-y
  g.add_edge(1, 3);  // y-w
  return g;
}

}  // namespace

Graph graph_from_spec(const std::string& spec) {
  if (spec == "triangle") return triangle_graph();
  if (spec == "k2") return single_edge();
  if (spec == "p3") return paper_p3();
  if (spec.rfind("g6:", 0) == 0) return parse_graph6(spec.substr(3));
  if (spec.rfind("whisker:", 0) == 0) return whisker(graph_from_spec(spec.substr(8)));
  if (spec.rfind("doublestar:", 0) == 0) {
    const std::string rest = spec.substr(11);
    const auto comma = rest.find(',');
    int s = 0, t = 0;
    if (comma == std::string::npos || !parse_int(rest.substr(0, comma), s) ||
        !parse_int(rest.substr(comma + 1), t))
      throw input_error("graph spec: expected doublestar:<s>,<t>");
    return double_star(s, t);
  }
  if (spec.size() >= 2 && (spec[0] == 'c' || spec[0] == 'p')) {
    int k = 0;
    if (parse_int(spec.substr(1), k)) return spec[0] == 'c' ? cycle(k) : path_graph(k);
  }
  if (spec.size() >= 2 && spec[0] == 'k') {
    const auto comma = spec.find(',');
    int m = 0, n = 0;
    if (comma != std::string::npos && parse_int(spec.substr(1, comma - 1), m) &&
        parse_int(spec.substr(comma + 1), n))
      return complete_bipartite(m, n);
  }
  std::ifstream file(spec);
  if (!file)
    throw input_error("graph spec: '" + spec +
                      "' is neither a builtin spec nor a readable file");
  return parse_edge_list(file);
}

}  // namespace sqcm

#include "sqcm/graph.hpp"

#include <algorithm>
#include <cassert>

#include "sqcm/errors.hpp"

namespace sqcm {

Graph::Graph(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > 64)
    throw input_error("graph too large: at most 64 vertices are supported");
  verts_ = VertexSet::full(static_cast<int>(names_.size()));
  adj_.assign(names_.size(), VertexSet{});
}

Graph Graph::with_default_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return Graph(std::move(names));
}

void Graph::add_edge(int u, int v) {
  if (!has_vertex(u) || !has_vertex(v))
    throw input_error("add_edge: unknown vertex id");
  if (u == v)
    throw input_error("add_edge: loop {" + name(u) + "," + name(v) + "} rejected");
  adj_[static_cast<size_t>(u)] = adj_[static_cast<size_t>(u)].with(v);
  adj_[static_cast<size_t>(v)] = adj_[static_cast<size_t>(v)].with(u);
}

bool Graph::adjacent(int u, int v) const {
  return has_vertex(u) && has_vertex(v) && adj_[static_cast<size_t>(u)].contains(v);
}

VertexSet Graph::neighbors(int v) const {
  if (!has_vertex(v)) return {};
  return adj_[static_cast<size_t>(v)] & verts_;
}

std::vector<int> Graph::vertex_list() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(vertex_count()));
  for (int v : verts_) out.push_back(v);
  return out;
}

int Graph::active_rank(int v) const {
  if (!has_vertex(v)) return -1;
  return (verts_ & VertexSet::full(v)).count();
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u : verts_)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v : verts_) twice += degree(v);
  return twice / 2;
}

Graph Graph::restricted_to(VertexSet u) const {
  Graph h;
  h.names_ = names_;
  h.verts_ = u & verts_;
  h.adj_ = adj_;
  return h;
}

// --- queries ---------------------------------------------------------------

VertexSet neighborhood(const Graph& g, int v) {
  if (!g.has_vertex(v)) throw input_error("neighborhood: unknown vertex");
  return g.neighbors(v);
}

VertexSet closed_neighborhood(const Graph& g, VertexSet w) {
  if (!w.subset_of(g.vertices()))
    throw input_error("closed_neighborhood: set contains a vertex outside the graph");
  VertexSet out = w;
  for (int v : w) out = out | g.neighbors(v);
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet u) {
  if (!u.subset_of(g.vertices()))
    throw input_error("induced_subgraph: set contains a vertex outside the graph");
  return g.restricted_to(u);
}

Graph deletion(const Graph& g, VertexSet u) {
  return g.restricted_to(g.vertices() - u);
}

bool is_independent_set(const Graph& g, VertexSet s) {
  for (int v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

bool is_maximal_independent_set(const Graph& g, VertexSet s) {
  if (!is_independent_set(g, s)) return false;
  for (int v : g.vertices() - s)
    if (!g.neighbors(v).intersects(s)) return false;
  return true;
}

namespace {

// Include/exclude recursion over the lowest free vertex. Every independent set
// that cannot be extended inside `allowed` is emitted; the caller filters for
// maximality in the whole graph.
void enumerate_mis(const Graph& g, VertexSet current, VertexSet allowed,
                   std::vector<VertexSet>& out) {
  if (allowed.empty()) {
    if (is_maximal_independent_set(g, current)) out.push_back(current);
    return;
  }
  int v = allowed.lowest();
  enumerate_mis(g, current.with(v),
                allowed - closed_neighborhood(g, VertexSet::single(v)), out);
  enumerate_mis(g, current, allowed.without(v), out);
}

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  enumerate_mis(g, {}, g.vertices(), out);
  std::sort(out.begin(), out.end(), seq_less);
  assert(std::adjacent_find(out.begin(), out.end()) == out.end());
  return out;
}

int independence_number(const Graph& g) {
  int best = 0;
  for (const VertexSet& a : maximal_independent_sets(g)) best = std::max(best, a.count());
  return best;
}

bool is_unmixed(const Graph& g) {
  const auto sets = maximal_independent_sets(g);
  for (const VertexSet& a : sets)
    if (a.count() != sets.front().count()) return false;
  return true;
}

// --- structure ---------------------------------------------------------------

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  VertexSet seen = VertexSet::single(g.vertices().lowest());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next = next | g.neighbors(v);
    frontier = next - seen;
    seen = seen | next;
  }
  return seen == g.vertices();
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && is_connected(g) &&
         g.edge_count() == g.vertex_count() - 1;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<size_t>(g.universe_size()), -1);
  for (int root : g.vertices()) {
    if (color[static_cast<size_t>(root)] != -1) continue;
    color[static_cast<size_t>(root)] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u)) {
        if (color[static_cast<size_t>(v)] == -1) {
          color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
          stack.push_back(v);
        } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_chordal(const Graph& g) {
  // Repeated simplicial-vertex elimination.
  Graph h = g;
  while (h.vertex_count() > 0) {
    int pick = -1;
    for (int v : h.vertices()) {
      VertexSet nb = h.neighbors(v);
      bool clique = true;
      for (int a : nb)
        if (!(nb.without(a)).subset_of(h.neighbors(a))) {
          clique = false;
          break;
        }
      if (clique) {
        pick = v;
        break;
      }
    }
    if (pick < 0) return false;
    h = deletion(h, VertexSet::single(pick));
  }
  return true;
}

bool has_triangle(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (!(g.neighbors(u) & g.neighbors(v)).empty()) return true;
  return false;
}

bool is_whiskered(const Graph& g) {
  // Single edge: whisker of a one-vertex graph, by convention.
  if (g.vertex_count() == 2 && g.edge_count() == 1) return true;
  if (g.vertex_count() == 0) return false;
  VertexSet leaves;
  for (int v : g.vertices())
    if (g.degree(v) == 1) leaves = leaves.with(v);
  VertexSet core = g.vertices() - leaves;
  if (leaves.count() != core.count() || core.empty()) return false;
  for (int c : core)
    if ((g.neighbors(c) & leaves).count() != 1) return false;
  for (int l : leaves)
    if ((g.neighbors(l) & core).empty()) return false;
  return true;
}

bool has_isolated_vertex(const Graph& g) {
  for (int v : g.vertices())
    if (g.degree(v) == 0) return true;
  return false;
}

bool is_cycle_graph(const Graph& g) {
  if (g.vertex_count() < 3 || !is_connected(g)) return false;
  for (int v : g.vertices())
    if (g.degree(v) != 2) return false;
  return true;
}

StructuralPredicates structural_predicates(const Graph& g) {
  StructuralPredicates p;
  p.is_connected = is_connected(g);
  p.is_tree = is_tree(g);
  p.is_bipartite = is_bipartite(g);
  p.is_chordal = is_chordal(g);
  p.has_triangle = has_triangle(g);
  p.is_whiskered = is_whiskered(g);
  return p;
}

std::optional<LeafPathWitness> leaf_path3_witness(const Graph& g) {
  for (int z : g.vertices()) {
    if (g.degree(z) != 1) continue;
    int x = g.neighbors(z).lowest();
    for (int y : g.neighbors(x)) {
      if (y == z) continue;
      for (int w : g.neighbors(y)) {
        if (w == x || w == z || g.degree(w) != 1) continue;
        if (g.adjacent(z, y) || g.adjacent(z, w) || g.adjacent(x, w)) continue;
        return LeafPathWitness{z, x, y, w};
      }
    }
  }
  return std::nullopt;
}

// --- constructors ------------------------------------------------------------

Graph cycle(int t) {
  if (t < 3) throw input_error("cycle: need t >= 3");
  Graph g = Graph::with_default_names(t);
  for (int i = 0; i < t; ++i) g.add_edge(i, (i + 1) % t);
  return g;
}

Graph path_graph(int k) {
  if (k < 1) throw input_error("path_graph: need k >= 1 edges");
  Graph g = Graph::with_default_names(k + 1);
  for (int i = 0; i < k; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw input_error("complete_bipartite: need m, n >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("a" + std::to_string(i));
  for (int j = 1; j <= n; ++j) names.push_back("b" + std::to_string(j));
  Graph g(std::move(names));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
  return g;
}

Graph whisker(const Graph& g) {
  const auto base = g.vertex_list();
  std::vector<std::string> names;
  names.reserve(base.size() * 2);
  for (int v : base) names.push_back(g.name(v));
  for (int v : base) names.push_back(g.name(v) + "'");
  Graph out(std::move(names));
  const int n = static_cast<int>(base.size());
  for (auto [u, v] : g.edges())
    out.add_edge(g.active_rank(u), g.active_rank(v));
  for (int i = 0; i < n; ++i) out.add_edge(i, n + i);
  return out;
}

Graph double_star(int s, int t) {
  if (s < 1 || t < 1) throw input_error("double_star: need s, t >= 1");
  std::vector<std::string> names{"x0", "y0"};
  for (int i = 1; i <= t; ++i) names.push_back("x" + std::to_string(i));
  for (int j = 1; j <= s; ++j) names.push_back("y" + std::to_string(j));
  Graph g(std::move(names));
  g.add_edge(0, 1);
  for (int i = 1; i <= t; ++i) g.add_edge(0, 1 + i);
  for (int j = 1; j <= s; ++j) g.add_edge(1, 1 + t + j);
  return g;
}

Graph single_edge() {
  Graph g(std::vector<std::string>{"x", "y"});
  g.add_edge(0, 1);
  return g;
}

Graph triangle_graph() {
  Graph g(std::vector<std::string>{"a", "b", "c"});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  return g;
}

}  // namespace sqcm

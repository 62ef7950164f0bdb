#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqcm/vertex_set.hpp"

namespace sqcm {

/// A finite simple undirected graph on labeled vertices.
///
/// Vertices are dense integer ids 0..N-1 with optional string names. A graph
/// carries an *active* vertex set, so induced subgraphs and deletions preserve
/// vertex identities (ids and names) instead of relabeling. Isolated vertices
/// are permitted; classification entry points reject them separately.
///
/// Graphs are value types and are treated as immutable once built; all queries
/// are const and safe for concurrent use.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> names);
  /// n vertices named v0..v{n-1}, no edges.
  static Graph with_default_names(int n);

  /// Build-phase mutator. Loops are rejected; parallel edges collapse.
  void add_edge(int u, int v);

  int universe_size() const { return static_cast<int>(names_.size()); }
  VertexSet vertices() const { return verts_; }
  int vertex_count() const { return verts_.count(); }
  bool has_vertex(int v) const { return verts_.contains(v); }
  bool adjacent(int u, int v) const;
  VertexSet neighbors(int v) const;  // unchecked; see neighborhood() for the checked op
  int degree(int v) const { return neighbors(v).count(); }
  const std::string& name(int v) const { return names_[static_cast<size_t>(v)]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Active vertex ids in ascending order.
  std::vector<int> vertex_list() const;
  /// Rank of v within the active vertex set (0-based), -1 if inactive.
  int active_rank(int v) const;

  /// Edges {u,v} with u < v, both active.
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  /// Same universe and names, active set restricted to U, edges masked.
  Graph restricted_to(VertexSet u) const;

 private:
  std::vector<std::string> names_;
  VertexSet verts_;
  std::vector<VertexSet> adj_;
};

// --- combinatorial queries ---------------------------------------------------

/// Open neighborhood N(v). Unknown vertex is an input error.
VertexSet neighborhood(const Graph& g, int v);
/// Closed neighborhood N[W] = union of N[w] over w in W.
VertexSet closed_neighborhood(const Graph& g, VertexSet w);
/// Induced subgraph on U; vertex identities preserved.
Graph induced_subgraph(const Graph& g, VertexSet u);
/// G minus U, i.e. the induced subgraph on V \ U. May leave isolated vertices.
Graph deletion(const Graph& g, VertexSet u);

bool is_independent_set(const Graph& g, VertexSet s);
bool is_maximal_independent_set(const Graph& g, VertexSet s);

/// All maximal independent sets, in ascending seq_less order.
/// The empty graph yields { {} }.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);
int independence_number(const Graph& g);
/// True iff all maximal independent sets share one cardinality.
bool is_unmixed(const Graph& g);

// --- structural predicates ---------------------------------------------------

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_chordal(const Graph& g);
bool has_triangle(const Graph& g);
/// Recognizes graphs built by attaching one pendant edge to every vertex of
/// some base graph. K2 counts (the whisker of a single vertex).
bool is_whiskered(const Graph& g);
bool has_isolated_vertex(const Graph& g);
/// Connected and 2-regular.
bool is_cycle_graph(const Graph& g);

struct StructuralPredicates {
  bool is_connected = false;
  bool is_tree = false;
  bool is_bipartite = false;
  bool is_chordal = false;
  bool has_triangle = false;
  bool is_whiskered = false;
};
StructuralPredicates structural_predicates(const Graph& g);

/// An induced path z-x-y-w whose endpoints z, w have degree 1 in the whole
/// graph. Lexicographically first such tuple, or nullopt.
struct LeafPathWitness {
  int z, x, y, w;
};
std::optional<LeafPathWitness> leaf_path3_witness(const Graph& g);

// --- constructors --------------------------------------------------------

/// Cycle on t >= 3 vertices v0..v{t-1}.
Graph cycle(int t);
/// Path with k >= 1 edges on k+1 vertices v0..vk.
Graph path_graph(int k);
/// Complete bipartite graph on parts a1..am and b1..bn, m, n >= 1.
Graph complete_bipartite(int m, int n);
/// One new pendant neighbor per vertex (named by appending a prime).
Graph whisker(const Graph& g);
/// Centers x0-y0; x0 also adjacent to x1..xt, y0 also adjacent to y1..ys.
Graph double_star(int s, int t);
/// The one-edge graph on x, y.
Graph single_edge();
/// Triangle on a, b, c.
Graph triangle_graph();

}  // namespace sqcm

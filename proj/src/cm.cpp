#include "sqcm/cm.hpp"

#include <algorithm>
#include <numeric>

#include "sqcm/errors.hpp"
#include "sqcm/graph_io.hpp"
#include "sqcm/monomial.hpp"

namespace sqcm {

std::string to_string(FastFail f) {
  switch (f) {
    case FastFail::NotConnected: return "not-connected";
    case FastFail::NotPure: return "not-pure";
    case FastFail::NecessaryConditionScreen: return "paper-necessary-condition";
  }
  return "?";
}

std::string to_string(BuildRoute r) {
  switch (r) {
    case BuildRoute::Catalog: return "catalog";
    case BuildRoute::Generic: return "generic";
    case BuildRoute::Both: return "both";
  }
  return "?";
}

int component_count(const SimplicialComplex& complex) {
  VertexSet remaining = complex.vertex_set();
  int components = 0;
  while (!remaining.empty()) {
    VertexSet seen = VertexSet::single(remaining.lowest());
    bool grew = true;
    while (grew) {
      grew = false;
      for (VertexSet f : complex.facets())
        if (f.intersects(seen) && !(f - seen).empty()) {
          seen = seen | f;
          grew = true;
        }
    }
    remaining = remaining - seen;
    ++components;
  }
  return components;
}

CmVerdict is_cohen_macaulay(const SimplicialComplex& complex, FieldSpec field,
                            bool use_fast_fail) {
  if (complex.facet_count() == 0)
    throw input_error("is_cohen_macaulay: empty complex");
  CmVerdict verdict;
  verdict.field = field;
  const int dim = complex.dimension();
  if (use_fast_fail) {
    // A CM complex of positive dimension is connected, and CM complexes are
    // pure. Zero-dimensional complexes are CM regardless of connectivity.
    if (dim >= 1 && !is_connected_complex(complex)) {
      verdict.fast_fail = FastFail::NotConnected;
      return verdict;
    }
    if (!complex.is_pure()) {
      verdict.fast_fail = FastFail::NotPure;
      return verdict;
    }
  }

  const std::vector<VertexSet> faces = complex.all_faces();

  // degree 0 first: a disconnected link of positive dimension fails over any
  // field, and needs no matrices.
  std::vector<SimplicialComplex> links;
  links.reserve(faces.size());
  for (VertexSet sigma : faces) {
    links.push_back(link(complex, sigma));
    const SimplicialComplex& lk = links.back();
    if (lk.dimension() >= 1) {
      const int components = component_count(lk);
      if (components > 1) {
        verdict.witness = CmWitness{sigma, 0, components - 1};
        return verdict;
      }
    }
  }

  // higher degrees, lowest degree first; profiles computed once on demand
  std::vector<std::optional<HomologyProfile>> profiles(faces.size());
  for (int i = 1; i < dim; ++i) {
    for (size_t k = 0; k < faces.size(); ++k) {
      if (links[k].dimension() <= i) continue;
      if (!profiles[k]) profiles[k] = reduced_betti_numbers(links[k], field);
      const long b = profiles[k]->reduced_betti(i);
      if (b != 0) {
        verdict.witness = CmWitness{faces[k], i, b};
        return verdict;
      }
    }
  }
  verdict.is_cm = true;
  return verdict;
}

CmVerdict square_is_cm(const Graph& g, FieldSpec field, bool use_fast_fail,
                       BuildRoute route) {
  if (g.vertex_count() == 0)
    throw input_error("square_is_cm: empty graph");
  if (has_isolated_vertex(g))
    throw input_error(
        "square_is_cm: the graph has an isolated vertex; Cohen-Macaulay "
        "complexes are connected, so only connected graphs without isolated "
        "vertices are classified");
  if (!is_connected(g))
    throw input_error(
        "square_is_cm: the graph is disconnected; a Cohen-Macaulay complex "
        "is connected, so only connected graphs are classified");
  const SimplicialComplex complex =
      route == BuildRoute::Generic ? square_complex_generic(g) : catalog_to_complex(g);
  bool cross_check = route == BuildRoute::Both;
#ifndef NDEBUG
  cross_check = true;
#endif
  if (cross_check && route != BuildRoute::Generic) {
    const SimplicialComplex other = square_complex_generic(g);
    if (other.facets() != complex.facets())
      throw internal_error("square_is_cm: catalog and generic facet sets disagree");
  }
  CmVerdict verdict = is_cohen_macaulay(complex, field, use_fast_fail);
  verdict.route = to_string(route);
  return verdict;
}

PurityReport purity_report(const Graph& g) {
  if (has_isolated_vertex(g))
    throw input_error("purity_report: the graph has an isolated vertex");
  const SimplicialComplex complex = catalog_to_complex(g);
  PurityReport report;
  report.is_pure = complex.is_pure();
  report.expected = is_unmixed(g) && !has_triangle(g);
  report.dim = complex.dimension();
  report.formula_dim = g.vertex_count() + independence_number(g) - 1;
  if (report.is_pure != report.expected)
    throw internal_error(
        "purity_report: computed purity contradicts the unmixed/triangle-free "
        "criterion");
  if (report.is_pure && report.dim != report.formula_dim)
    throw internal_error("purity_report: pure complex dimension is not n + alpha - 1");
  return report;
}

std::optional<ScreenRejection> necessary_condition_screen(const Graph& g) {
  if (g.vertex_count() == 0 || has_isolated_vertex(g) || !is_connected(g))
    throw input_error(
        "necessary_condition_screen: need a connected graph without isolated "
        "vertices");
  if (!(is_unmixed(g) && !has_triangle(g)))
    return ScreenRejection{ScreenRejection::Reason::NotPure, std::nullopt};
  if (auto w = leaf_path3_witness(g))
    return ScreenRejection{ScreenRejection::Reason::LeafPath3, w};
  return std::nullopt;
}

bool cycle_square_classification(int t, FieldSpec field, CycleMode mode, int verify_cap) {
  if (t < 3) throw input_error("cycle_square_classification: need t >= 3");
  const bool unmixed_expected = t == 3 || t == 4 || t == 5 || t == 7;
  if (is_unmixed(cycle(t)) != unmixed_expected)
    throw internal_error(
        "cycle_square_classification: unmixedness disagrees with the "
        "t in {3,4,5,7} rule");
  if (mode == CycleMode::Theorem) return t == 5;
  if (t > verify_cap)
    throw resource_error("cycle_square_classification: verification capped at t <= " +
                         std::to_string(verify_cap) + "; t = " + std::to_string(t) +
                         " is too big to sweep, not wrong");
  const bool verified = square_is_cm(cycle(t), field, true).is_cm;
  if (verified != (t == 5))
    throw internal_error(
        "cycle_square_classification: verified verdict disagrees with the "
        "t = 5 rule");
  return verified;
}

DoubleStarCheck double_star_obstruction_details(int s, int t) {
  const Graph g = double_star(s, t);
  const SimplicialComplex complex = catalog_to_complex(g);
  DoubleStarCheck check;
  const VertexSet centers{0, 1};  // x0, y0
  const VertexSet pi = copy1(g, centers) | copy2(g, g.vertices() - centers);
  check.pi_is_face = complex.contains_face(pi);
  if (!check.pi_is_face) return check;
  const SimplicialComplex lk = link(complex, pi);
  for (VertexSet f : lk.facets()) check.link_facet_names.push_back(lk.face_names(f));
  VertexSet x_arms, y_arms;
  for (int i = 1; i <= t; ++i) x_arms = x_arms.with(1 + i);
  for (int j = 1; j <= s; ++j) y_arms = y_arms.with(1 + t + j);
  const VertexSet expected_a = copy1(g, y_arms) | copy2(g, VertexSet::single(0));
  const VertexSet expected_b = copy1(g, x_arms) | copy2(g, VertexSet::single(1));
  std::vector<VertexSet> expected{expected_a, expected_b};
  std::sort(expected.begin(), expected.end(), card_seq_less);
  check.link_matches = lk.facets() == expected;
  check.b0 = reduced_betti_numbers(lk, FieldSpec(2)).reduced_betti(0);
  check.ok = check.link_matches && check.b0 == 1;
  return check;
}

bool double_star_obstruction_check(int s, int t) {
  return double_star_obstruction_details(s, t).ok;
}

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

// mask bit k corresponds to pairs_ordered[k]
std::vector<std::pair<int, int>> vertex_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

bool mask_connected(int n, const std::vector<std::uint32_t>& adj) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v)
      if ((frontier >> v) & 1) next |= adj[static_cast<size_t>(v)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
}

}  // namespace

std::vector<Graph> connected_graph_census(int n) {
  if (n < 1) throw input_error("connected_graph_census: need n >= 1");
  if (n > 7)
    throw resource_error("connected_graph_census: exhaustive enumeration capped at n <= 7");
  const auto pairs = vertex_pairs(n);
  const int np = pair_count(n);
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  // pair_index[i][j] = bit of pair {i,j}
  std::vector<std::vector<int>> pair_index(static_cast<size_t>(n),
                                           std::vector<int>(static_cast<size_t>(n), -1));
  for (int k = 0; k < np; ++k) {
    pair_index[static_cast<size_t>(pairs[static_cast<size_t>(k)].first)]
              [static_cast<size_t>(pairs[static_cast<size_t>(k)].second)] = k;
    pair_index[static_cast<size_t>(pairs[static_cast<size_t>(k)].second)]
              [static_cast<size_t>(pairs[static_cast<size_t>(k)].first)] = k;
  }
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << np); ++mask) {
    std::vector<std::uint32_t> adj(static_cast<size_t>(n), 0);
    for (int k = 0; k < np; ++k)
      if ((mask >> k) & 1) {
        adj[static_cast<size_t>(pairs[static_cast<size_t>(k)].first)] |=
            std::uint32_t{1} << pairs[static_cast<size_t>(k)].second;
        adj[static_cast<size_t>(pairs[static_cast<size_t>(k)].second)] |=
            std::uint32_t{1} << pairs[static_cast<size_t>(k)].first;
      }
    if (!mask_connected(n, adj)) continue;
    // canonical = no permutation maps the mask to a smaller one
    bool canonical = true;
    for (const auto& perm : perms) {
      std::uint32_t pmask = 0;
      for (int k = 0; k < np; ++k)
        if ((mask >> k) & 1)
          pmask |= std::uint32_t{1}
                   << pair_index[static_cast<size_t>(
                          perm[static_cast<size_t>(pairs[static_cast<size_t>(k)].first)])]
                                [static_cast<size_t>(perm[static_cast<size_t>(
                                     pairs[static_cast<size_t>(k)].second)])];
      if (pmask < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    Graph g = Graph::with_default_names(n);
    for (int k = 0; k < np; ++k)
      if ((mask >> k) & 1)
        g.add_edge(pairs[static_cast<size_t>(k)].first, pairs[static_cast<size_t>(k)].second);
    out.push_back(std::move(g));
  }
  return out;
}

CensusReport census(int n_max, FieldSpec primary, int cap) {
  if (n_max < 1) throw input_error("census: need n_max >= 1");
  if (cap < 1) throw input_error("census: cap must be >= 1");
  if (n_max > cap)
    throw resource_error("census: n_max = " + std::to_string(n_max) +
                         " exceeds the configured cap " + std::to_string(cap) +
                         "; too big, not wrong");
  CensusReport report;
  report.n_max = n_max;
  report.primary_characteristic = primary.p;
  std::vector<int> characteristics{2, 3};
  if (primary.p != 2 && primary.p != 3) characteristics.push_back(primary.p);
  for (int n = 2; n <= n_max; ++n) {
    for (const Graph& g : connected_graph_census(n)) {
      CensusRow row;
      row.g6 = canonical_graph6(g);
      row.n = n;
      row.m = g.edge_count();
      row.preds = structural_predicates(g);
      row.is_cycle = is_cycle_graph(g);
      row.cm_bipartite =
          row.preds.is_bipartite &&
          is_cohen_macaulay(stanley_reisner_complex(edge_ideal(g)), primary, true).is_cm;
      row.screen = necessary_condition_screen(g);
      for (int p : characteristics) {
        if (row.screen) {
          CmVerdict v;
          v.is_cm = false;
          v.field = FieldSpec(p);
          v.fast_fail = FastFail::NecessaryConditionScreen;
          row.verdicts.emplace(p, v);
        } else {
          row.verdicts.emplace(p, square_is_cm(g, FieldSpec(p), true));
        }
      }
      row.field_disagreement = row.verdicts.at(2).is_cm != row.verdicts.at(3).is_cm;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace sqcm

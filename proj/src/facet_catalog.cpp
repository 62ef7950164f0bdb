#include "sqcm/facet_catalog.hpp"

#include <algorithm>
#include <map>

#include "sqcm/errors.hpp"

namespace sqcm {

std::string to_string(FacetKind kind) {
  switch (kind) {
    case FacetKind::Independent: return "independent";
    case FacetKind::Leaf: return "leaf";
    case FacetKind::Star: return "star";
    case FacetKind::Triangle: return "triangle";
  }
  return "?";
}

int polarized_id(const Graph& g, int v, int copy) {
  return 2 * g.active_rank(v) + (copy - 1);
}

std::vector<std::string> polarized_vertex_names(const Graph& g, NameStyle style) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(2 * g.vertex_count()));
  for (int v : g.vertices()) {
    names.push_back(polarized_name(g.name(v), 1, style));
    names.push_back(polarized_name(g.name(v), 2, style));
  }
  return names;
}

VertexSet copy1(const Graph& g, VertexSet s) {
  VertexSet out;
  for (int v : s) out = out.with(polarized_id(g, v, 1));
  return out;
}

VertexSet copy2(const Graph& g, VertexSet s) {
  VertexSet out;
  for (int v : s) out = out.with(polarized_id(g, v, 2));
  return out;
}

namespace {

// Nonempty independent subsets of `pool`, ascending by bitmask.
std::vector<VertexSet> independent_subsets(const Graph& g, VertexSet pool) {
  std::vector<VertexSet> out;
  const std::uint64_t bits = pool.bits();
  for (std::uint64_t sub = bits; sub != 0; sub = (sub - 1) & bits) {
    VertexSet s = VertexSet::from_bits(sub);
    if (is_independent_set(g, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), card_seq_less);
  return out;
}

}  // namespace

std::vector<CatalogFacet> catalog_facets(const Graph& g) {
  if (has_isolated_vertex(g))
    throw input_error("catalog_facets: graph has an isolated vertex");
  if (g.vertex_count() > 32)
    throw resource_error("catalog_facets: more than 32 vertices");

  const VertexSet all = g.vertices();
  struct Candidate {
    VertexSet facet;
    FacetWitness witness;
  };
  std::vector<Candidate> pool;
  auto assemble = [&](VertexSet w, VertexSet a, VertexSet z) {
    return copy1(g, w | a) | copy2(g, z);
  };

  // independent type: W empty, A maximal independent, Z = V
  for (VertexSet a : maximal_independent_sets(g))
    pool.push_back({assemble({}, a, all),
                    FacetWitness{FacetKind::Independent, {}, a, all, -1}});

  // leaf type: W = {a,b} a leaf edge with free vertex a, Z = V \ {a}
  for (int leaf : all) {
    if (g.degree(leaf) != 1) continue;
    const int b = g.neighbors(leaf).lowest();
    const VertexSet w = VertexSet{}.with(leaf).with(b);
    const Graph rest = deletion(g, closed_neighborhood(g, VertexSet::single(b)));
    for (VertexSet a : maximal_independent_sets(rest))
      pool.push_back({assemble(w, a, all.without(leaf)),
                      FacetWitness{FacetKind::Leaf, w, a, all.without(leaf), leaf}});
  }

  // star type: W = arms + center where the arms are an independent subset of
  // N(center), Z = V \ {center}. All independent arm sets are offered; the
  // maximality filter below keeps the maximal assemblies.
  for (int b : all) {
    if (g.degree(b) == 0) continue;
    for (VertexSet arms : independent_subsets(g, g.neighbors(b))) {
      const VertexSet w = arms.with(b);
      const Graph rest = deletion(g, closed_neighborhood(g, w));
      for (VertexSet a : maximal_independent_sets(rest))
        pool.push_back({assemble(w, a, all.without(b)),
                        FacetWitness{FacetKind::Star, w, a, all.without(b), b}});
    }
  }

  // triangle type: W a 3-clique, Z = V \ W
  for (int u : all)
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      for (int t : g.neighbors(u) & g.neighbors(v)) {
        if (t <= v) continue;
        const VertexSet w = VertexSet{}.with(u).with(v).with(t);
        const Graph rest = deletion(g, closed_neighborhood(g, w));
        for (VertexSet a : maximal_independent_sets(rest))
          pool.push_back({assemble(w, a, all - w),
                          FacetWitness{FacetKind::Triangle, w, a, all - w, -1}});
      }
    }

  // one global maximality pass over all families
  std::vector<VertexSet> masks;
  masks.reserve(pool.size());
  for (const Candidate& c : pool) masks.push_back(c.facet);
  std::sort(masks.begin(), masks.end(), [](VertexSet a, VertexSet b) {
    return a.count() != b.count() ? a.count() > b.count() : a.bits() < b.bits();
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<VertexSet> maximal;
  for (VertexSet m : masks) {
    bool dominated = false;
    for (VertexSet kept : maximal)
      if (m != kept && m.subset_of(kept)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(m);
  }

  std::map<std::uint64_t, CatalogFacet> by_mask;
  for (VertexSet m : maximal) by_mask[m.bits()] = CatalogFacet{m, {}};
  for (const Candidate& c : pool) {
    auto it = by_mask.find(c.facet.bits());
    if (it != by_mask.end()) it->second.witnesses.push_back(c.witness);
  }
  std::vector<CatalogFacet> out;
  out.reserve(by_mask.size());
  for (auto& [bits, cf] : by_mask) out.push_back(std::move(cf));
  std::sort(out.begin(), out.end(),
            [](const CatalogFacet& a, const CatalogFacet& b) {
              return card_seq_less(a.facet, b.facet);
            });
  return out;
}

SimplicialComplex catalog_to_complex(const Graph& g, NameStyle style) {
  std::vector<VertexSet> facets;
  for (const CatalogFacet& cf : catalog_facets(g)) facets.push_back(cf.facet);
  return SimplicialComplex::from_facets(polarized_vertex_names(g, style), std::move(facets));
}

SimplicialComplex square_complex_generic(const Graph& g, NameStyle style) {
  return stanley_reisner_complex(polarize_ideal(ideal_power(edge_ideal(g), 2), style));
}

std::string witness_phrase(const Graph& g, const FacetWitness& w) {
  auto joined = [&](VertexSet s) {
    bool all_single = true;
    for (int v : s)
      if (g.name(v).size() != 1) all_single = false;
    std::string out;
    bool first = true;
    for (int v : s) {
      if (!first && !all_single) out += ",";
      out += g.name(v);
      first = false;
    }
    return out;
  };
  switch (w.kind) {
    case FacetKind::Independent:
      return "independent set " + joined(w.a);
    case FacetKind::Leaf:
      return "leaf " + joined(w.w) + " with free vertex " + g.name(w.anchor);
    case FacetKind::Star:
      return "star " + joined(w.w) + " centered at " + g.name(w.anchor);
    case FacetKind::Triangle:
      return "triangle " + joined(w.w);
  }
  return "?";
}

}  // namespace sqcm

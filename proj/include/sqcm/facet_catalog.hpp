#pragma once

#include <string>
#include <vector>

#include "sqcm/graph.hpp"
#include "sqcm/monomial.hpp"
#include "sqcm/simplicial_complex.hpp"

namespace sqcm {

/// The four facet families of the square complex of a graph.
enum class FacetKind { Independent, Leaf, Star, Triangle };

std::string to_string(FacetKind kind);

/// One way a facet arises: the decomposition W(1) u A(1) u Z(2).
/// anchor is the star center, or the leaf's free vertex, or -1.
struct FacetWitness {
  FacetKind kind;
  VertexSet w;
  VertexSet a;
  VertexSet z;
  int anchor = -1;
};

/// A facet of the square complex together with every witness that produces it
/// (a facet can be reachable from more than one family).
struct CatalogFacet {
  VertexSet facet;  // over the polarized universe
  std::vector<FacetWitness> witnesses;
};

/// Polarized universe of a graph: copies (v,1), (v,2) of each active vertex,
/// laid out by (vertex rank, copy).
int polarized_id(const Graph& g, int v, int copy);
std::vector<std::string> polarized_vertex_names(const Graph& g, NameStyle style);

/// First-copy part of the polarized universe restricted to S, i.e. S_(1).
VertexSet copy1(const Graph& g, VertexSet s);
/// Second-copy part, S_(2).
VertexSet copy2(const Graph& g, VertexSet s);

/// Direct construction of the facets of the square complex from the graph:
/// pool candidates of the four families, keep the inclusion-maximal ones,
/// merge witness tags of duplicates. Sorted by (card, seq).
/// Rejects graphs with isolated vertices.
std::vector<CatalogFacet> catalog_facets(const Graph& g);

/// The square complex assembled from catalog_facets, on V(1) u V(2).
SimplicialComplex catalog_to_complex(const Graph& g, NameStyle style = NameStyle::Plain);

/// The generic route: Stanley-Reisner complex of the polarization of I(G)^2.
SimplicialComplex square_complex_generic(const Graph& g, NameStyle style = NameStyle::Plain);

/// Human-readable annotation in the spirit of "star ac centered at a".
std::string witness_phrase(const Graph& g, const FacetWitness& w);

}  // namespace sqcm

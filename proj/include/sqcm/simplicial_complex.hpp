#pragma once

#include <string>
#include <vector>

#include "sqcm/monomial.hpp"
#include "sqcm/vertex_set.hpp"

namespace sqcm {

/// An abstract simplicial complex on a named vertex universe, stored by its
/// facets (an antichain). The irrelevant complex { {} } is the single empty
/// facet. Immutable after construction.
class SimplicialComplex {
 public:
  /// Deduplicates, drops non-maximal sets, sorts facets by (card, seq).
  static SimplicialComplex from_facets(std::vector<std::string> names,
                                       std::vector<VertexSet> facets);

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  int facet_count() const { return static_cast<int>(facets_.size()); }
  /// Union of the facets.
  VertexSet vertex_set() const { return verts_; }

  /// max facet size - 1; the irrelevant complex has dimension -1.
  int dimension() const;
  bool is_pure() const;
  bool contains_face(VertexSet sigma) const;
  /// Every subset of every facet, each once, sorted by (cardinality, seq).
  std::vector<VertexSet> all_faces() const;

  /// Antichain + cover checks; throws internal_error on violation.
  void validate() const;

  std::string face_names(VertexSet sigma) const;  // "{x1,y1,z2}" in id order
  /// Golden-file format: one facet per line, names sorted within a line,
  /// lines sorted.
  std::string facet_lines() const;

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> facets_;
  VertexSet verts_;
};

/// Facets of the Stanley-Reisner complex of a squarefree monomial ideal:
/// subsets avoiding every generator support, complements of the minimal
/// transversals. Requires squarefree generators of degree >= 2.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

/// Engine (a): full subset scan; ambient up to 24 variables.
std::vector<VertexSet> sr_facets_bitmask(const MonomialIdeal& ideal);
/// Engine (b): Berge-style incremental minimal-transversal dualization.
std::vector<VertexSet> sr_facets_dualization(const MonomialIdeal& ideal);

/// lk(sigma) = maximal sets F \ sigma over facets F containing sigma, on the
/// same universe. sigma must be a face.
SimplicialComplex link(const SimplicialComplex& complex, VertexSet sigma);

/// Connectivity of the 1-skeleton. Vertexless complexes count as connected.
bool is_connected_complex(const SimplicialComplex& complex);

}  // namespace sqcm

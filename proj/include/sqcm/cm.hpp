#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqcm/facet_catalog.hpp"
#include "sqcm/graph.hpp"
#include "sqcm/homology.hpp"
#include "sqcm/simplicial_complex.hpp"

namespace sqcm {

/// Cheap reasons a complex is known not to be Cohen-Macaulay before any
/// homology is computed.
enum class FastFail { NotConnected, NotPure, NecessaryConditionScreen };
std::string to_string(FastFail f);

struct CmWitness {
  VertexSet face;   // the failing face sigma
  int degree;       // i with b~_i(lk sigma) != 0 and i != dim lk sigma
  long betti_value;
};

struct CmVerdict {
  bool is_cm = false;
  FieldSpec field{2};
  std::optional<CmWitness> witness;    // present iff !is_cm via the sweep
  std::optional<FastFail> fast_fail;   // present iff !is_cm via a shortcut
  std::string route;                   // how the complex was built, if known
};

/// Reisner's criterion: CM over GF(p) iff every face's link has vanishing
/// reduced homology below its dimension.
///
/// The failing witness is deterministic: the minimum over failing pairs
/// (sigma, i) ordered by degree i first, then by (|sigma|, seq). Degree 0
/// (a disconnected link) is detected without any matrix work.
///
/// With use_fast_fail, connectivity (for dim >= 1) and purity are checked
/// first and reported as tagged shortcuts.
CmVerdict is_cohen_macaulay(const SimplicialComplex& complex, FieldSpec field,
                            bool use_fast_fail);

/// Count of connected components of the 1-skeleton.
int component_count(const SimplicialComplex& complex);

enum class BuildRoute { Catalog, Generic, Both };
std::string to_string(BuildRoute r);

/// Whether the square of the edge ideal of g is Cohen-Macaulay over GF(p).
/// Requires a connected graph without isolated vertices. Route Both (and any
/// route in assert-enabled builds) cross-checks the catalog against the
/// generic Stanley-Reisner construction.
CmVerdict square_is_cm(const Graph& g, FieldSpec field, bool use_fast_fail = true,
                       BuildRoute route = BuildRoute::Catalog);

/// Purity of the square complex against the predicted criterion
/// (unmixed and triangle-free) and the dimension formula n + alpha - 1.
/// A mismatch is an internal error, not a value.
struct PurityReport {
  bool is_pure;
  bool expected;
  int dim;
  int formula_dim;
};
PurityReport purity_report(const Graph& g);

/// Necessary-condition screen: "not-pure" when the purity criterion already
/// fails, else a leaf path witness when one exists. A non-null result
/// predicts square_is_cm = false; the prediction is asserted in tests, never
/// assumed by square_is_cm.
struct ScreenRejection {
  enum class Reason { NotPure, LeafPath3 };
  Reason reason;
  std::optional<LeafPathWitness> witness;
};
std::optional<ScreenRejection> necessary_condition_screen(const Graph& g);

enum class CycleMode { Theorem, Verify };
/// Theorem mode answers t == 5 (and re-derives the unmixedness table as an
/// internal consistency check). Verify mode actually runs the checker on C_t,
/// capped at verify_cap vertices, and insists the answers agree.
bool cycle_square_classification(int t, FieldSpec field, CycleMode mode, int verify_cap = 7);

/// The double-star obstruction: pi = {x0,y0}_(1) u (V-{x0,y0})_(2) is a face
/// whose link is exactly two disjoint simplices, so b~_0(lk pi) = 1.
struct DoubleStarCheck {
  bool pi_is_face = false;
  bool link_matches = false;
  long b0 = 0;
  bool ok = false;
  std::vector<std::string> link_facet_names;
};
DoubleStarCheck double_star_obstruction_details(int s, int t);
bool double_star_obstruction_check(int s, int t);

/// One canonical representative per isomorphism class of connected graphs on
/// exactly n vertices (exhaustive, exact; n <= 7).
std::vector<Graph> connected_graph_census(int n);

struct CensusRow {
  std::string g6;
  int n = 0;
  int m = 0;
  StructuralPredicates preds;
  bool is_cycle = false;
  bool cm_bipartite = false;
  std::optional<ScreenRejection> screen;
  std::map<int, CmVerdict> verdicts;  // keyed by characteristic
  bool field_disagreement = false;
};

struct CensusReport {
  int n_max = 0;
  int primary_characteristic = 2;
  std::vector<CensusRow> rows;
};

/// Connected graphs on 2..n_max vertices up to isomorphism, screened and
/// classified. Verdicts are recorded at p = 2 and p = 3 (plus the primary
/// characteristic if different) and disagreements are flagged.
CensusReport census(int n_max, FieldSpec primary, int cap = 6);

}  // namespace sqcm

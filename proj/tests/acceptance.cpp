// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and pinned to the tolerances and
// budgets it must meet.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sqcm/cm.hpp"
#include "sqcm/errors.hpp"
#include "sqcm/facet_catalog.hpp"
#include "sqcm/graph_io.hpp"
#include "sqcm/homology.hpp"
#include "test_util.hpp"

using namespace sqcm;
using namespace sqcm::testutil;

namespace {

const std::string cli = SQCM_CLI_PATH;

struct Criterion {
  int id;
  std::string label;
  double budget_seconds;  // <= 0 means no stated budget
  std::function<void(std::string&)> body;
};

int failures = 0;

void run_criterion(const Criterion& c) {
  std::string detail;
  bool ok = true;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over budget of ") +
              std::to_string(c.budget_seconds) + " s";
  }
  if (!ok) ++failures;
  char line[512];
  std::snprintf(line, sizeof line, "criterion %2d [%s] %-52s (%.2f s)%s%s", c.id,
                ok ? "PASS" : "FAIL", c.label.c_str(), secs, detail.empty() ? "" : " -- ",
                detail.c_str());
  std::cout << line << "\n";
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

// ---------------------------------------------------------------------------

void criterion1(std::string& detail) {
  int code = -1;
  const std::string out = run_command(cli + " facets p3", code);
  require(code == 0, "CLI exited " + std::to_string(code));
  const auto lines = lines_of(out);
  require(lines.size() == 9, "expected 9 facets, got " + std::to_string(lines.size()));
  std::set<std::set<std::string>> got;
  for (const auto& line : lines) got.insert(name_set_of_line(line));
  require(got == p3_golden_facets(), "facet sets differ from the golden list");
  detail = "9/9 facets match";
}

void criterion2(std::string& detail) {
  int code = -1;
  const std::string out = run_command(cli + " facets triangle --witness", code);
  require(code == 0, "CLI exited " + std::to_string(code));
  const auto lines = lines_of(out);
  require(lines.size() == 10, "expected 10 facets, got " + std::to_string(lines.size()));
  std::set<std::set<std::string>> got;
  int triangles = 0, independents = 0, stars = 0, leaves = 0;
  for (const auto& line : lines) {
    const auto dash = line.find("--");
    require(dash != std::string::npos, "missing witness annotation");
    got.insert(name_set_of_line(line.substr(0, dash)));
    triangles += line.find("(triangle") != std::string::npos;
    independents += line.find("independent set") != std::string::npos;
    stars += line.find("star ") != std::string::npos;
    leaves += line.find("leaf ") != std::string::npos;
  }
  require(got == triangle_golden_facets(), "facet sets differ from the golden list");
  require(triangles == 1 && independents == 3 && stars == 6 && leaves == 0,
          "kind counts are not triangle x1, independent x3, star x6");
  detail = "10 facets; kinds 1/3/6";
}

void criterion3(std::string& detail) {
  const std::vector<int> expected_counts{0, 0, 1, 2, 6, 21, 112};
  int total = 0;
  for (int n = 2; n <= 6; ++n) {
    const auto reps = connected_graph_census(n);
    require(static_cast<int>(reps.size()) == expected_counts[static_cast<size_t>(n)],
            "census count off at n = " + std::to_string(n));
    for (const Graph& g : reps) {
      require(catalog_to_complex(g).facets() == square_complex_generic(g).facets(),
              "route mismatch on " + canonical_graph6(g));
      ++total;
    }
  }
  // disconnected coverage: every graph on <= 5 vertices with min degree >= 1
  int small = 0;
  for (int n = 1; n <= 5; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (has_isolated_vertex(g)) return;
      std::vector<VertexSet> facets;
      for (const CatalogFacet& cf : catalog_facets(g)) facets.push_back(cf.facet);
      require(facets == square_facets_oracle(g),
              "catalog differs from the subset-scan oracle");
      ++small;
    });
  detail = std::to_string(total) + " connected classes (112 at n=6) + " +
           std::to_string(small) + " labeled graphs <= 5";
}

void criterion4(std::string& detail) {
  int checked = 0;
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : connected_graph_census(n)) {
      const PurityReport report = purity_report(g);  // throws on inconsistency
      require(report.is_pure == (is_unmixed(g) && !has_triangle(g)),
              "purity mismatch on " + canonical_graph6(g));
      const SimplicialComplex c = catalog_to_complex(g);
      require(c.dimension() >= g.vertex_count(),
              "dimension below n on " + canonical_graph6(g));
      if (report.is_pure)
        require(report.dim == g.vertex_count() + independence_number(g) - 1,
                "dimension formula fails on " + canonical_graph6(g));
      ++checked;
    }
  detail = std::to_string(checked) + " graphs, zero violations";
}

void criterion5(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int t = 3; t <= 12; ++t)
    require(is_unmixed(cycle(t)) == (t == 3 || t == 4 || t == 5 || t == 7),
            "unmixedness table wrong at t = " + std::to_string(t));
  const double table_secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  require(table_secs < 1.0, "unmixedness table over its 1 s budget");
  for (int p : {2, 3})
    for (int t : {3, 4, 5, 6, 7}) {
      const bool cm = square_is_cm(cycle(t), FieldSpec(p)).is_cm;
      require(cm == (t == 5), "C" + std::to_string(t) + " verdict wrong at p = " +
                                  std::to_string(p));
    }
  std::ostringstream os;
  os << "table 3..12 in " << std::fixed;
  os.precision(3);
  os << table_secs << " s; C3..C7 at p=2,3";
  detail = os.str();
}

void criterion6(std::string& detail) {
  int code = -1;
  const std::string out = run_command(cli + " is-cm p3", code);
  require(code == 0, "CLI exited " + std::to_string(code));
  require(out == "NOT CM; witness face {x1,y1,z2,w2}, b~0(link)=1\n",
          "witness line is not the pinned one: " + out);
  detail = "witness face {x1,y1,z2,w2}, b~0 = 1";
}

void criterion7(std::string& detail) {
  const Graph k2 = single_edge();
  // module-level brute-force oracle for the facet set
  const auto oracle = square_facets_oracle(k2);
  require(oracle.size() == 4, "oracle facet count is not 4");
  const SimplicialComplex c = catalog_to_complex(k2);
  std::vector<VertexSet> catalog(c.facets());
  require(catalog == oracle, "catalog disagrees with the oracle");
  const HomologyProfile profile = reduced_betti_numbers(c, FieldSpec(2));
  require(profile.dim == 2, "dimension is not 2");
  require(profile.reduced_betti(0) == 0 && profile.reduced_betti(1) == 0 &&
              profile.reduced_betti(2) == 1,
          "profile is not (0,0,1)");
  require(is_cohen_macaulay(c, FieldSpec(2), false).is_cm, "sweep says not CM");
  detail = "4 facets, profile (0,0,1), CM";
}

void criterion8(std::string& detail) {
  for (int s = 1; s <= 3; ++s)
    for (int t = 1; t <= 3; ++t)
      require(double_star_obstruction_check(s, t),
              "obstruction check failed at (" + std::to_string(s) + "," +
                  std::to_string(t) + ")");
  const DoubleStarCheck one = double_star_obstruction_details(1, 1);
  const std::set<std::string> names(one.link_facet_names.begin(),
                                    one.link_facet_names.end());
  // with x0->x, y0->y, x1->z, y1->w this is {z1,y2}, {w1,x2}
  require(names == std::set<std::string>{"{y02,x11}", "{x02,y11}"},
          "link facets of the (1,1) case are not the renamed golden pair");
  require(one.b0 == 1, "b~0 of the link is not 1");
  detail = "all (s,t) in 1..3 x 1..3; (1,1) link matches";
}

void criterion9(std::string& detail) {
  int trees = 0, chordal = 0, whiskered = 0, cmbip = 0;
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : connected_graph_census(n)) {
      const int edges = g.edge_count();
      const bool cm = square_is_cm(g, FieldSpec(2)).is_cm;
      const StructuralPredicates preds = structural_predicates(g);
      if (preds.is_tree && edges >= 2) {
        ++trees;
        require(!cm, "tree with a CM square: " + canonical_graph6(g));
      }
      if (preds.is_whiskered && edges >= 2) {
        ++whiskered;
        require(!cm, "whiskered graph with a CM square: " + canonical_graph6(g));
      }
      if (preds.is_chordal && edges >= 2) {
        ++chordal;
        require(!cm, "chordal graph with a CM square: " + canonical_graph6(g));
      }
      const bool cm_bipartite =
          preds.is_bipartite &&
          is_cohen_macaulay(stanley_reisner_complex(edge_ideal(g)), FieldSpec(2), true)
              .is_cm;
      if (cm_bipartite && edges >= 2) {
        ++cmbip;
        require(!cm, "CM-bipartite graph with a CM square: " + canonical_graph6(g));
      }
    }
  require(!square_is_cm(complete_bipartite(2, 2), FieldSpec(2)).is_cm, "K_{2,2} square is CM");
  require(!square_is_cm(complete_bipartite(3, 3), FieldSpec(2)).is_cm, "K_{3,3} square is CM");
  require(square_is_cm(complete_bipartite(1, 1), FieldSpec(2)).is_cm,
          "K_{1,1} square is not CM");
  std::ostringstream os;
  os << trees << " trees, " << chordal << " chordal, " << whiskered << " whiskered, "
     << cmbip << " CM-bipartite all non-CM; K22/K33 no, K11 yes";
  detail = os.str();
}

void criterion10(std::string& detail) {
  // leaf extension lemma, exhaustively on <= 6 vertices
  for (int n = 1; n <= 6; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      for (int b : g.vertices()) {
        const Graph rest = deletion(g, closed_neighborhood(g, VertexSet::single(b)));
        for (const VertexSet& a : maximal_independent_sets(rest))
          require(is_maximal_independent_set(g, a.with(b)),
                  "leaf extension lemma fails");
      }
    });

  const std::vector<SimplicialComplex> zoo{
      catalog_to_complex(graph_from_spec("p3")), catalog_to_complex(triangle_graph()),
      catalog_to_complex(cycle(5)), catalog_to_complex(complete_bipartite(2, 2))};

  // boundary of boundary vanishes
  for (const auto& c : zoo)
    for (int p : {2, 3})
      for (int i = 0; i < c.dimension(); ++i)
        require(boundary_matrix(c, i, FieldSpec(p))
                    .product_is_zero(boundary_matrix(c, i + 1, FieldSpec(p))),
                "dd != 0");

  // euler characteristic two ways
  for (const auto& c : zoo)
    for (int p : {2, 3}) {
      const HomologyProfile profile = reduced_betti_numbers(c, FieldSpec(p));
      long chi = 0;
      for (int i = -1; i <= profile.dim; ++i)
        chi += (i % 2 == 0 ? 1 : -1) * profile.reduced_betti(i);
      require(chi == reduced_euler_characteristic(c), "euler characteristic mismatch");
    }

  // cone acyclicity over links
  int cones = 0;
  for (const auto& c : zoo)
    for (const VertexSet sigma : c.all_faces()) {
      const SimplicialComplex lk = link(c, sigma);
      if (lk.vertex_set().empty()) continue;
      bool cone = false;
      for (int v : lk.vertex_set()) {
        bool in_all = true;
        for (const VertexSet f : lk.facets()) in_all = in_all && f.contains(v);
        if (in_all) {
          cone = true;
          break;
        }
      }
      if (!cone) continue;
      ++cones;
      const HomologyProfile profile = reduced_betti_numbers(lk, FieldSpec(2));
      for (int i = -1; i <= profile.dim; ++i)
        require(profile.reduced_betti(i) == 0, "cone with nonzero homology");
    }
  require(cones > 0, "no cones exercised");

  // link composition law on the path complex
  const SimplicialComplex c = catalog_to_complex(graph_from_spec("p3"));
  const auto faces = c.all_faces();
  for (const VertexSet sigma : faces) {
    const SimplicialComplex lk = link(c, sigma);
    for (const VertexSet tau : faces) {
      if (tau.intersects(sigma) || !c.contains_face(sigma | tau)) continue;
      require(link(lk, tau).facets() == link(c, sigma | tau).facets(),
              "link composition law fails");
    }
  }
  detail = "leaf lemma, dd=0, euler, cones (" + std::to_string(cones) +
           "), link composition";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden path facets via the CLI", 1.0, criterion1},
      {2, "golden triangle facets with witness kinds", 1.0, criterion2},
      {3, "catalog = generic route on the small-graph census", 300.0, criterion3},
      {4, "purity criterion and dimension formula", 0.0, criterion4},
      {5, "cycle table: unmixedness and CM verdicts", 600.0, criterion5},
      {6, "pinned non-CM witness for the path", 0.0, criterion6},
      {7, "the edge square is a 2-sphere", 0.0, criterion7},
      {8, "double-star obstruction grid", 30.0, criterion8},
      {9, "trees, chordal, whiskered, CM-bipartite classes", 600.0, criterion9},
      {10, "property suites", 0.0, criterion10},
  };
  for (const Criterion& c : criteria) run_criterion(c);
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}

// Command-line front end: build square complexes of edge ideals two ways,
// check purity and Cohen-Macaulayness, classify cycles, run the small-graph
// census.
#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqcm/cm.hpp"
#include "sqcm/errors.hpp"
#include "sqcm/facet_catalog.hpp"
#include "sqcm/graph_io.hpp"
#include "sqcm/monomial.hpp"

using nlohmann::json;
using namespace sqcm;

namespace {

enum class Format { Text, JsonLines };

struct RunConfig {
  std::string graph_spec;
  int characteristic = 2;
  std::string route = "catalog";
  bool no_fast_fail = false;
  bool witness = false;
  bool underscores = false;
  Format format = Format::Text;
  int cap = 6;
  int cycle_t = 0;
  bool verify = false;
  int census_n = 0;
};

NameStyle style_of(const RunConfig& cfg) {
  return cfg.underscores ? NameStyle::Underscore : NameStyle::Plain;
}

BuildRoute route_of(const RunConfig& cfg) {
  if (cfg.route == "catalog") return BuildRoute::Catalog;
  if (cfg.route == "generic") return BuildRoute::Generic;
  if (cfg.route == "both") return BuildRoute::Both;
  throw input_error("--route must be catalog, generic or both");
}

std::vector<std::string> face_name_list(const SimplicialComplex& c, VertexSet f) {
  std::vector<std::string> out;
  for (int v : f) out.push_back(c.names()[static_cast<size_t>(v)]);
  return out;
}

json verdict_json(const SimplicialComplex& complex, const CmVerdict& v) {
  json j;
  j["is_cm"] = v.is_cm;
  j["char"] = v.field.p;
  if (!v.route.empty()) j["route"] = v.route;
  if (v.witness) {
    j["witness"] = {{"face", face_name_list(complex, v.witness->face)},
                    {"degree", v.witness->degree},
                    {"betti", v.witness->betti_value}};
  } else {
    j["witness"] = nullptr;
  }
  j["fast_fail"] = v.fast_fail ? json(to_string(*v.fast_fail)) : json(nullptr);
  return j;
}

std::string verdict_text(const SimplicialComplex& complex, const CmVerdict& v) {
  if (v.is_cm) return "CM (p=" + std::to_string(v.field.p) + ")";
  if (v.fast_fail) return "NOT CM; fast-fail: " + to_string(*v.fast_fail);
  const CmWitness& w = *v.witness;
  return "NOT CM; witness face " + complex.face_names(w.face) + ", b~" +
         std::to_string(w.degree) + "(link)=" + std::to_string(w.betti_value);
}

int run_show_ideal(const RunConfig& cfg) {
  const Graph g = graph_from_spec(cfg.graph_spec);
  const MonomialIdeal i1 = edge_ideal(g);
  const MonomialIdeal i2 = ideal_power(i1, 2);
  const MonomialIdeal p2 = polarize_ideal(i2, style_of(cfg));
  if (cfg.format == Format::JsonLines) {
    auto gens = [](const MonomialIdeal& ideal) {
      std::vector<std::string> out;
      for (const Monomial& m : ideal.generators()) out.push_back(m.render(ideal.vars()));
      return out;
    };
    std::cout << json{{"graph", cfg.graph_spec},
                      {"edge_ideal", gens(i1)},
                      {"square", gens(i2)},
                      {"polarized_square", gens(p2)}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "I(G) = " << i1.render() << "\n";
  std::cout << "I(G)^2 = " << i2.render() << "\n";
  std::cout << "P(I(G)^2) = " << p2.render() << "\n";
  return 0;
}

int run_facets(const RunConfig& cfg) {
  const Graph g = graph_from_spec(cfg.graph_spec);
  const BuildRoute route = route_of(cfg);
  const SimplicialComplex complex = route == BuildRoute::Generic
                                        ? square_complex_generic(g, style_of(cfg))
                                        : catalog_to_complex(g, style_of(cfg));
  if (route == BuildRoute::Both) {
    const SimplicialComplex other = square_complex_generic(g, style_of(cfg));
    if (other.facets() != complex.facets()) {
      std::cerr << "route mismatch: catalog facets differ from the generic "
                   "Stanley-Reisner construction\n";
      return 1;
    }
  }
  const auto catalog = catalog_facets(g);
  if (cfg.format == Format::JsonLines) {
    for (const CatalogFacet& cf : catalog) {
      json witnesses = json::array();
      for (const FacetWitness& w : cf.witnesses) {
        json jw;
        jw["kind"] = to_string(w.kind);
        jw["W"] = [&] {
          std::vector<std::string> ns;
          for (int v : w.w) ns.push_back(g.name(v));
          return ns;
        }();
        jw["A"] = [&] {
          std::vector<std::string> ns;
          for (int v : w.a) ns.push_back(g.name(v));
          return ns;
        }();
        jw["Z"] = [&] {
          std::vector<std::string> ns;
          for (int v : w.z) ns.push_back(g.name(v));
          return ns;
        }();
        if (w.anchor >= 0) jw["anchor"] = g.name(w.anchor);
        witnesses.push_back(jw);
      }
      json j{{"facet", face_name_list(complex, cf.facet)}};
      if (cfg.witness) j["witnesses"] = witnesses;
      std::cout << j.dump() << "\n";
    }
    return 0;
  }
  if (!cfg.witness) {
    std::cout << complex.facet_lines();
    return 0;
  }
  // annotated view, one facet per line in the facet-lines order
  std::vector<std::pair<std::string, std::string>> lines;
  for (const CatalogFacet& cf : catalog) {
    std::vector<std::string> ns = face_name_list(complex, cf.facet);
    std::sort(ns.begin(), ns.end());
    std::string line;
    for (size_t i = 0; i < ns.size(); ++i) line += (i ? " " : "") + ns[i];
    std::string note;
    for (size_t i = 0; i < cf.witnesses.size(); ++i)
      note += (i ? "; " : "") + witness_phrase(g, cf.witnesses[i]);
    lines.emplace_back(line, note);
  }
  std::sort(lines.begin(), lines.end());
  size_t width = 0;
  for (const auto& [line, note] : lines) width = std::max(width, line.size());
  for (const auto& [line, note] : lines)
    std::cout << line << std::string(width - line.size(), ' ') << "  -- (" << note << ")\n";
  return 0;
}

int run_is_pure(const RunConfig& cfg) {
  const Graph g = graph_from_spec(cfg.graph_spec);
  const PurityReport r = purity_report(g);
  if (cfg.format == Format::JsonLines) {
    std::cout << json{{"graph", cfg.graph_spec},
                      {"is_pure", r.is_pure},
                      {"expected", r.expected},
                      {"dim", r.dim},
                      {"formula_dim", r.formula_dim}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "pure: " << (r.is_pure ? "yes" : "no") << "\n";
  std::cout << "expected (unmixed and triangle-free): " << (r.expected ? "yes" : "no") << "\n";
  std::cout << "dim: " << r.dim << "\n";
  std::cout << "formula dim (n + alpha - 1): " << r.formula_dim << "\n";
  return 0;
}

int run_is_cm(const RunConfig& cfg) {
  const Graph g = graph_from_spec(cfg.graph_spec);
  const BuildRoute route = route_of(cfg);
  const SimplicialComplex complex = route == BuildRoute::Generic
                                        ? square_complex_generic(g, style_of(cfg))
                                        : catalog_to_complex(g, style_of(cfg));
  const CmVerdict v = square_is_cm(g, FieldSpec(cfg.characteristic), !cfg.no_fast_fail, route);
  if (cfg.format == Format::JsonLines) {
    json j = verdict_json(complex, v);
    j["graph"] = cfg.graph_spec;
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << verdict_text(complex, v) << "\n";
  return 0;
}

int run_classify_cycle(const RunConfig& cfg) {
  const FieldSpec field(cfg.characteristic);
  const bool theorem = cycle_square_classification(cfg.cycle_t, field, CycleMode::Theorem);
  if (!cfg.verify) {
    if (cfg.format == Format::JsonLines) {
      std::cout << json{{"t", cfg.cycle_t}, {"theorem_cm", theorem}}.dump() << "\n";
      return 0;
    }
    std::cout << (theorem ? "CM (theorem)" : "not CM (theorem)") << "\n";
    return 0;
  }
  const bool verified =
      cycle_square_classification(cfg.cycle_t, field, CycleMode::Verify, cfg.cap);
  if (cfg.format == Format::JsonLines) {
    std::cout << json{{"t", cfg.cycle_t},
                      {"theorem_cm", theorem},
                      {"verified_cm", verified},
                      {"char", field.p}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << (theorem ? "CM" : "not CM") << " (theorem) = " << (verified ? "CM" : "not CM")
            << " (verified, p=" << field.p << ")\n";
  return 0;
}

int run_screen(const RunConfig& cfg) {
  const Graph g = graph_from_spec(cfg.graph_spec);
  const auto r = necessary_condition_screen(g);
  if (cfg.format == Format::JsonLines) {
    json j{{"graph", cfg.graph_spec}};
    if (!r) {
      j["reject"] = nullptr;
    } else if (r->reason == ScreenRejection::Reason::NotPure) {
      j["reject"] = "not-pure";
    } else {
      j["reject"] = "leaf-path-3";
      j["witness"] = {g.name(r->witness->z), g.name(r->witness->x), g.name(r->witness->y),
                      g.name(r->witness->w)};
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  if (!r) {
    std::cout << "screen: pass\n";
  } else if (r->reason == ScreenRejection::Reason::NotPure) {
    std::cout << "screen: reject (not-pure)\n";
  } else {
    const auto& w = *r->witness;
    std::cout << "screen: reject (leaf-path-3: " << g.name(w.z) << "," << g.name(w.x) << ","
              << g.name(w.y) << "," << g.name(w.w) << ")\n";
  }
  return 0;
}

std::string flags_of(const CensusRow& row) {
  std::string out;
  auto add = [&](bool on, const char* tag) {
    if (on) out += std::string(out.empty() ? "" : ",") + tag;
  };
  add(row.preds.is_tree, "tree");
  add(row.preds.is_chordal, "chordal");
  add(row.preds.is_bipartite, "bipartite");
  add(row.cm_bipartite, "cm-bipartite");
  add(row.preds.is_whiskered, "whiskered");
  add(row.is_cycle, "cycle");
  add(row.preds.has_triangle, "triangle");
  return out.empty() ? "-" : out;
}

int run_census(const RunConfig& cfg) {
  const CensusReport rep = census(cfg.census_n, FieldSpec(cfg.characteristic), cfg.cap);
  auto verdict_tag = [](const CmVerdict& v) {
    if (v.is_cm) return std::string("CM");
    if (v.fast_fail) return "no(" + to_string(*v.fast_fail) + ")";
    return std::string("no(witness)");
  };
  if (cfg.format == Format::JsonLines) {
    for (const CensusRow& row : rep.rows) {
      json j{{"g6", row.g6},
             {"n", row.n},
             {"m", row.m},
             {"flags", flags_of(row)},
             {"field_disagreement", row.field_disagreement}};
      if (row.screen)
        j["screen"] = row.screen->reason == ScreenRejection::Reason::NotPure ? "not-pure"
                                                                             : "leaf-path-3";
      else
        j["screen"] = nullptr;
      for (const auto& [p, v] : row.verdicts) j["cm_p" + std::to_string(p)] = v.is_cm;
      std::cout << j.dump() << "\n";
    }
    return 0;
  }
  std::cout << "# census of connected graphs on 2.." << rep.n_max
            << " vertices (K1 is excluded: isolated vertex)\n";
  std::cout << "# columns: graph6  n  m  flags  screen  verdict@2  verdict@3\n";
  std::vector<std::string> cm_names;
  for (const CensusRow& row : rep.rows) {
    std::string screen = !row.screen ? "pass"
                         : row.screen->reason == ScreenRejection::Reason::NotPure
                             ? "not-pure"
                             : "leaf-path-3";
    std::cout << row.g6 << "  " << row.n << "  " << row.m << "  " << flags_of(row) << "  "
              << screen << "  " << verdict_tag(row.verdicts.at(2)) << "  "
              << verdict_tag(row.verdicts.at(3))
              << (row.field_disagreement ? "  FIELD-DISAGREEMENT" : "") << "\n";
    if (row.verdicts.at(rep.primary_characteristic == 3 ? 3 : 2).is_cm)
      cm_names.push_back(row.g6);
  }
  std::cout << "# CM squares: ";
  for (size_t i = 0; i < cm_names.size(); ++i) std::cout << (i ? ", " : "") << cm_names[i];
  std::cout << "\n";
  auto class_summary = [&](const char* label, auto pred) {
    std::vector<std::string> members;
    int total = 0;
    for (const CensusRow& row : rep.rows)
      if (pred(row)) {
        ++total;
        if (row.verdicts.at(2).is_cm) members.push_back(row.g6);
      }
    std::cout << "# " << label << ": " << total << " graphs, CM squares:";
    if (members.empty()) std::cout << " none";
    for (const std::string& m : members) std::cout << " " << m;
    std::cout << "\n";
  };
  class_summary("trees", [](const CensusRow& r) { return r.preds.is_tree; });
  class_summary("connected chordal", [](const CensusRow& r) { return r.preds.is_chordal; });
  class_summary("whiskered", [](const CensusRow& r) { return r.preds.is_whiskered; });
  class_summary("cycles", [](const CensusRow& r) { return r.is_cycle; });
  class_summary("CM bipartite", [](const CensusRow& r) { return r.cm_bipartite; });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stanley-Reisner complexes of squares of edge ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;

  std::string format = "text";
  app.add_option("--format", format, "output format: text or json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}));
  app.add_flag("--underscores", cfg.underscores, "render polarized names as x_1 instead of x1");

  auto add_graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", cfg.graph_spec, "builtin spec (c5, p3, k2,2, triangle, "
                                             "doublestar:2,3, whisker:<spec>, g6:...) or an "
                                             "edge-list file path")
        ->required();
  };

  CLI::App* show_ideal = app.add_subcommand("show-ideal", "print I(G), I(G)^2, P(I(G)^2)");
  add_graph_arg(show_ideal);

  CLI::App* facets = app.add_subcommand("facets", "facets of the square complex");
  add_graph_arg(facets);
  facets->add_flag("--witness", cfg.witness, "annotate facets with family witnesses");
  facets->add_option("--route", cfg.route, "catalog, generic, or both (assert agreement)")
      ->check(CLI::IsMember({"catalog", "generic", "both"}));

  CLI::App* is_pure = app.add_subcommand("is-pure", "purity report for the square complex");
  add_graph_arg(is_pure);

  CLI::App* is_cm = app.add_subcommand("is-cm", "Cohen-Macaulayness of the square");
  add_graph_arg(is_cm);
  is_cm->add_option("--char", cfg.characteristic, "field characteristic (prime)");
  is_cm->add_flag("--no-fast-fail", cfg.no_fast_fail, "force the full Reisner sweep");
  is_cm->add_option("--route", cfg.route, "catalog, generic, or both")
      ->check(CLI::IsMember({"catalog", "generic", "both"}));

  CLI::App* classify = app.add_subcommand("classify-cycle", "is the square of a cycle CM?");
  classify->add_option("t", cfg.cycle_t, "cycle length, t >= 3")->required();
  classify->add_flag("--verify", cfg.verify, "run the checker, not just the rule");
  classify->add_option("--char", cfg.characteristic, "field characteristic (prime)");
  classify->add_option("--cap", cfg.cap, "largest t the verifier will sweep")
      ->default_val(7);

  CLI::App* screen = app.add_subcommand("screen", "necessary-condition screen");
  add_graph_arg(screen);

  CLI::App* census_cmd = app.add_subcommand("census", "classify all small connected graphs");
  census_cmd->add_option("n", cfg.census_n, "maximum vertex count")->required();
  census_cmd->add_option("--char", cfg.characteristic, "primary field characteristic");
  census_cmd->add_option("--cap", cfg.cap, "refuse n above this cap")->default_val(6);

  CLI11_PARSE(app, argc, argv);
  cfg.format = format == "text" ? Format::Text : Format::JsonLines;

  try {
    if (show_ideal->parsed()) return run_show_ideal(cfg);
    if (facets->parsed()) return run_facets(cfg);
    if (is_pure->parsed()) return run_is_pure(cfg);
    if (is_cm->parsed()) return run_is_cm(cfg);
    if (classify->parsed()) return run_classify_cycle(cfg);
    if (screen->parsed()) return run_screen(cfg);
    if (census_cmd->parsed()) return run_census(cfg);
  } catch (const internal_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const resource_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

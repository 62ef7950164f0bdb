#include "sqcm/simplicial_complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "sqcm/errors.hpp"

namespace sqcm {

namespace {

// Keep only the inclusion-maximal sets.
std::vector<VertexSet> prune_to_maximal(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(),
            [](VertexSet a, VertexSet b) { return a.count() > b.count(); });
  std::vector<VertexSet> out;
  for (VertexSet s : sets) {
    bool dominated = false;
    for (VertexSet kept : out)
      if (s.subset_of(kept)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> names,
                                                 std::vector<VertexSet> facets) {
  SimplicialComplex c;
  c.names_ = std::move(names);
  c.facets_ = prune_to_maximal(std::move(facets));
  std::sort(c.facets_.begin(), c.facets_.end(), card_seq_less);
  for (VertexSet f : c.facets_) c.verts_ = c.verts_ | f;
  if (!c.verts_.subset_of(VertexSet::full(static_cast<int>(c.names_.size()))))
    throw input_error("SimplicialComplex: facet vertex outside the universe");
  return c;
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) throw internal_error("dimension of the void complex");
  int d = -1;
  for (VertexSet f : facets_) d = std::max(d, f.count() - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  for (VertexSet f : facets_)
    if (f.count() != facets_.front().count()) return false;
  return true;
}

bool SimplicialComplex::contains_face(VertexSet sigma) const {
  for (VertexSet f : facets_)
    if (sigma.subset_of(f)) return true;
  return false;
}

std::vector<VertexSet> SimplicialComplex::all_faces() const {
  std::unordered_set<std::uint64_t> seen;
  for (VertexSet f : facets_) {
    std::uint64_t bits = f.bits();
    std::uint64_t sub = bits;
    while (true) {
      seen.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & bits;
    }
  }
  std::vector<VertexSet> out;
  out.reserve(seen.size());
  for (std::uint64_t b : seen) out.push_back(VertexSet::from_bits(b));
  std::sort(out.begin(), out.end(), card_seq_less);
  return out;
}

void SimplicialComplex::validate() const {
  if (facets_.empty()) throw internal_error("validate: void complex");
  for (size_t i = 0; i < facets_.size(); ++i)
    for (size_t j = 0; j < facets_.size(); ++j)
      if (i != j && facets_[i].subset_of(facets_[j]))
        throw internal_error("validate: facets are not an antichain");
  VertexSet covered;
  for (VertexSet f : facets_) covered = covered | f;
  if (covered != verts_) throw internal_error("validate: vertex set out of sync");
}

std::string SimplicialComplex::face_names(VertexSet sigma) const {
  std::string out = "{";
  bool first = true;
  for (int v : sigma) {
    if (!first) out += ",";
    out += names_[static_cast<size_t>(v)];
    first = false;
  }
  return out + "}";
}

std::string SimplicialComplex::facet_lines() const {
  std::vector<std::string> lines;
  for (VertexSet f : facets_) {
    std::vector<std::string> ns;
    for (int v : f) ns.push_back(names_[static_cast<size_t>(v)]);
    std::sort(ns.begin(), ns.end());
    std::string line;
    for (size_t i = 0; i < ns.size(); ++i) {
      if (i) line += " ";
      line += ns[i];
    }
    lines.push_back(line);
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& l : lines) out += l + "\n";
  return out;
}

namespace {

void check_sr_input(const MonomialIdeal& ideal) {
  for (const Monomial& m : ideal.generators()) {
    if (!m.is_squarefree())
      throw input_error("stanley_reisner_complex: generator is not squarefree");
    if (m.degree() < 2)
      throw input_error("stanley_reisner_complex: generator of degree < 2");
  }
}

}  // namespace

std::vector<VertexSet> sr_facets_bitmask(const MonomialIdeal& ideal) {
  check_sr_input(ideal);
  const int n = ideal.nvars();
  if (n > 24) throw resource_error("sr_facets_bitmask: ambient larger than 24 variables");
  std::vector<std::uint64_t> gens;
  for (const Monomial& m : ideal.generators()) gens.push_back(m.support().bits());
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> is_face(total, true);
  for (std::uint64_t s = 0; s < total; ++s)
    for (std::uint64_t g : gens)
      if ((s & g) == g) {
        is_face[s] = false;
        break;
      }
  std::vector<VertexSet> facets;
  for (std::uint64_t s = 0; s < total; ++s) {
    if (!is_face[s]) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!((s >> v) & 1) && is_face[s | (std::uint64_t{1} << v)]) maximal = false;
    if (maximal) facets.push_back(VertexSet::from_bits(s));
  }
  return facets;
}

std::vector<VertexSet> sr_facets_dualization(const MonomialIdeal& ideal) {
  check_sr_input(ideal);
  const VertexSet universe = VertexSet::full(ideal.nvars());
  // incremental minimal transversals of the generator supports
  std::vector<VertexSet> transversals{VertexSet{}};
  for (const Monomial& m : ideal.generators()) {
    const VertexSet support = m.support();
    std::vector<VertexSet> next;
    for (VertexSet t : transversals) {
      if (t.intersects(support)) {
        next.push_back(t);
      } else {
        for (int v : support) next.push_back(t.with(v));
      }
    }
    // minimalize: drop supersets
    std::sort(next.begin(), next.end(),
              [](VertexSet a, VertexSet b) { return a.count() < b.count(); });
    std::vector<VertexSet> pruned;
    for (VertexSet t : next) {
      bool dominated = false;
      for (VertexSet kept : pruned)
        if (kept.subset_of(t)) {
          dominated = true;
          break;
        }
      if (!dominated) pruned.push_back(t);
    }
    transversals = std::move(pruned);
  }
  std::vector<VertexSet> facets;
  facets.reserve(transversals.size());
  for (VertexSet t : transversals) facets.push_back(universe - t);
  return facets;
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  std::vector<VertexSet> facets = ideal.nvars() <= 24 ? sr_facets_bitmask(ideal)
                                                      : sr_facets_dualization(ideal);
  return SimplicialComplex::from_facets(ideal.vars(), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& complex, VertexSet sigma) {
  if (!complex.contains_face(sigma))
    throw input_error("link: " + complex.face_names(sigma) + " is not a face");
  std::vector<VertexSet> rest;
  for (VertexSet f : complex.facets())
    if (sigma.subset_of(f)) rest.push_back(f - sigma);
  return SimplicialComplex::from_facets(complex.names(), std::move(rest));
}

bool is_connected_complex(const SimplicialComplex& complex) {
  const VertexSet verts = complex.vertex_set();
  if (verts.count() <= 1) return true;
  VertexSet seen = VertexSet::single(verts.lowest());
  bool grew = true;
  while (grew) {
    grew = false;
    for (VertexSet f : complex.facets())
      if (f.intersects(seen) && !(f - seen).empty()) {
        seen = seen | f;
        grew = true;
      }
  }
  return seen == verts;
}

}  // namespace sqcm

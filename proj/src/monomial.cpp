#include "sqcm/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "sqcm/errors.hpp"

namespace sqcm {

std::string polarized_name(const std::string& base, int copy, NameStyle style) {
  return style == NameStyle::Plain ? base + std::to_string(copy)
                                   : base + "_" + std::to_string(copy);
}

void Monomial::set_exponent(int var, int e) {
  if (var < 0 || var >= nvars()) throw input_error("set_exponent: variable out of range");
  if (e < 0) throw input_error("set_exponent: negative exponent");
  exps_[static_cast<size_t>(var)] = e;
}

int Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

VertexSet Monomial::support() const {
  VertexSet s;
  for (int v = 0; v < nvars(); ++v)
    if (exps_[static_cast<size_t>(v)] > 0) s = s.with(v);
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  assert(nvars() == other.nvars());
  for (int v = 0; v < nvars(); ++v)
    if (exps_[static_cast<size_t>(v)] > other.exps_[static_cast<size_t>(v)]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  assert(nvars() == other.nvars());
  Monomial out(nvars());
  for (int v = 0; v < nvars(); ++v)
    out.exps_[static_cast<size_t>(v)] =
        exps_[static_cast<size_t>(v)] + other.exps_[static_cast<size_t>(v)];
  return out;
}

bool Monomial::graded_lex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.exps_ > b.exps_;
}

std::string Monomial::render(const std::vector<std::string>& vars) const {
  if (is_one()) return "1";
  std::string out;
  for (int v = 0; v < nvars(); ++v) {
    int e = exps_[static_cast<size_t>(v)];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[static_cast<size_t>(v)];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> vars, std::vector<Monomial> gens)
    : vars_(std::move(vars)) {
  for (const Monomial& m : gens)
    if (m.nvars() != nvars())
      throw input_error("MonomialIdeal: generator over wrong ambient");
  // drop duplicates, then generators divisible by an earlier (lower-degree) one
  std::sort(gens.begin(), gens.end(), Monomial::graded_lex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& kept : gens_)
      if (kept.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(m);
  }
}

std::string MonomialIdeal::render() const {
  if (is_zero()) return "(0)";
  std::string out = "(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].render(vars_);
  }
  return out + ")";
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<std::string> vars;
  for (int v : g.vertices()) vars.push_back(g.name(v));
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges()) {
    Monomial m(static_cast<int>(vars.size()));
    m.set_exponent(g.active_rank(u), 1);
    m.set_exponent(g.active_rank(v), 1);
    gens.push_back(m);
  }
  return MonomialIdeal(std::move(vars), std::move(gens));
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw input_error("ideal_power: need k >= 1");
  if (k == 1 || ideal.is_zero()) return ideal;
  const auto& gens = ideal.generators();
  std::vector<Monomial> products;
  // multisets of k generator indices
  std::vector<int> idx(static_cast<size_t>(k), 0);
  while (true) {
    Monomial m = gens[static_cast<size_t>(idx[0])];
    for (int j = 1; j < k; ++j) m = m * gens[static_cast<size_t>(idx[static_cast<size_t>(j)])];
    products.push_back(m);
    int j = k - 1;
    while (j >= 0 && idx[static_cast<size_t>(j)] == static_cast<int>(gens.size()) - 1) --j;
    if (j < 0) break;
    int next = idx[static_cast<size_t>(j)] + 1;
    for (int l = j; l < k; ++l) idx[static_cast<size_t>(l)] = next;
  }
  std::sort(products.begin(), products.end(), Monomial::graded_lex_less);
  products.erase(std::unique(products.begin(), products.end()), products.end());
  return MonomialIdeal(ideal.vars(), std::move(products));
}

std::vector<PolarizedVar> polarized_ambient(const std::vector<int>& max_exp) {
  std::vector<PolarizedVar> amb;
  for (int v = 0; v < static_cast<int>(max_exp.size()); ++v)
    for (int c = 1; c <= max_exp[static_cast<size_t>(v)]; ++c)
      amb.push_back(PolarizedVar{v, c});
  return amb;
}

Monomial polarize_monomial(const Monomial& m, const std::vector<int>& max_exp) {
  if (static_cast<int>(max_exp.size()) != m.nvars())
    throw input_error("polarize_monomial: max_exp size mismatch");
  const auto amb = polarized_ambient(max_exp);
  Monomial out(static_cast<int>(amb.size()));
  for (int i = 0; i < static_cast<int>(amb.size()); ++i) {
    const PolarizedVar pv = amb[static_cast<size_t>(i)];
    if (m.exponent(pv.base) >= pv.copy) out.set_exponent(i, 1);
  }
  if (out.degree() != m.degree())
    throw input_error("polarize_monomial: exponent exceeds ambient");
  return out;
}

Monomial polarize_monomial(const Monomial& m) {
  std::vector<int> max_exp(static_cast<size_t>(m.nvars()));
  for (int v = 0; v < m.nvars(); ++v) max_exp[static_cast<size_t>(v)] = m.exponent(v);
  return polarize_monomial(m, max_exp);
}

MonomialIdeal polarize_ideal(const MonomialIdeal& ideal, NameStyle style) {
  std::vector<int> max_exp(static_cast<size_t>(ideal.nvars()), 0);
  for (const Monomial& m : ideal.generators())
    for (int v = 0; v < ideal.nvars(); ++v)
      max_exp[static_cast<size_t>(v)] = std::max(max_exp[static_cast<size_t>(v)], m.exponent(v));
  const auto amb = polarized_ambient(max_exp);
  std::vector<std::string> names;
  names.reserve(amb.size());
  for (const PolarizedVar& pv : amb)
    names.push_back(polarized_name(ideal.vars()[static_cast<size_t>(pv.base)], pv.copy, style));
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& m : ideal.generators()) gens.push_back(polarize_monomial(m, max_exp));
  MonomialIdeal out(std::move(names), std::move(gens));
  // polarization of a minimal generating set stays minimal
  if (out.generators().size() != ideal.generators().size())
    throw internal_error("polarize_ideal: generator count changed");
  return out;
}

Monomial depolarize(const Monomial& pm, const std::vector<PolarizedVar>& ambient, int nbase) {
  if (pm.nvars() != static_cast<int>(ambient.size()))
    throw input_error("depolarize: ambient size mismatch");
  Monomial out(nbase);
  for (int i = 0; i < pm.nvars(); ++i)
    if (pm.exponent(i) > 0) {
      int b = ambient[static_cast<size_t>(i)].base;
      out.set_exponent(b, out.exponent(b) + pm.exponent(i));
    }
  return out;
}

}  // namespace sqcm

#pragma once

#include <string>
#include <vector>

#include "sqcm/graph.hpp"
#include "sqcm/vertex_set.hpp"

namespace sqcm {

/// How polarized variables are rendered: x1 or x_1.
enum class NameStyle { Plain, Underscore };

std::string polarized_name(const std::string& base, int copy, NameStyle style);

/// A monomial over a fixed ambient variable list, stored as a dense exponent
/// vector (index = variable id, entry 0 = variable absent).
class Monomial {
 public:
  explicit Monomial(int nvars) : exps_(static_cast<size_t>(nvars), 0) {}
  static Monomial one(int nvars) { return Monomial(nvars); }

  int nvars() const { return static_cast<int>(exps_.size()); }
  int exponent(int var) const { return exps_[static_cast<size_t>(var)]; }
  void set_exponent(int var, int e);
  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool is_squarefree() const;
  /// Variables with positive exponent (needs nvars <= 64).
  VertexSet support() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  /// Degree first, then descending lexicographic on exponent vectors, so
  /// x^2 < x*y < y^2 reads as x^2, x*y, y^2 when sorted.
  static bool graded_lex_less(const Monomial& a, const Monomial& b);

  std::string render(const std::vector<std::string>& vars) const;

 private:
  std::vector<int> exps_;
};

/// A monomial ideal given by its minimal generators over a named ambient
/// variable list. Construction prunes non-minimal generators and sorts.
class MonomialIdeal {
 public:
  MonomialIdeal(std::vector<std::string> vars, std::vector<Monomial> gens);

  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// "(x*y, x*z, y*w)"; the zero ideal renders as "(0)".
  std::string render() const;

 private:
  std::vector<std::string> vars_;
  std::vector<Monomial> gens_;
};

/// The edge ideal I(G): one squarefree degree-2 generator per edge, over the
/// active vertices of G (isolated vertices contribute variables only).
MonomialIdeal edge_ideal(const Graph& g);

/// I^k: all k-fold products of generators, deduplicated and pruned to a
/// minimal generating set.
MonomialIdeal ideal_power(const MonomialIdeal& ideal, int k);

/// A polarized variable: copy `copy` (1-based) of base variable `base`.
struct PolarizedVar {
  int base;
  int copy;
  friend bool operator==(PolarizedVar a, PolarizedVar b) {
    return a.base == b.base && a.copy == b.copy;
  }
};

/// Ambient of a polarization: copies (v,1)..(v,max_exp[v]) for each base
/// variable, ordered by (base, copy).
std::vector<PolarizedVar> polarized_ambient(const std::vector<int>& max_exp);

/// P(m) over the ambient described by max_exp: each x^a expands to copies
/// 1..a. Requires exponent(v) <= max_exp[v].
Monomial polarize_monomial(const Monomial& m, const std::vector<int>& max_exp);
/// P(m) over the smallest ambient containing it (max_exp = m's own exponents).
Monomial polarize_monomial(const Monomial& m);

/// Generator-wise polarization of a minimally generated ideal. The ambient is
/// the polarized ambient of the per-variable maximum exponents.
MonomialIdeal polarize_ideal(const MonomialIdeal& ideal, NameStyle style = NameStyle::Plain);

/// Forget copy indices and re-accumulate exponents; left inverse of
/// polarize_monomial.
Monomial depolarize(const Monomial& pm, const std::vector<PolarizedVar>& ambient, int nbase);

}  // namespace sqcm

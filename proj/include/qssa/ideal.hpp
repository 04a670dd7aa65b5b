#pragma once

// Ideal operations built on the Groebner engine: elimination, finiteness,
// ideal quotient, saturation and boundary strata.

#include "qssa/groebner.hpp"
#include "qssa/ratelaw.hpp"

namespace qssa {

template <class K>
struct Ideal {
  SpacePtr space;
  std::vector<Poly<K>> gens;

  std::size_t nvars() const { return space ? space->vars.size() : 0; }
};

inline Ideal<RatFunc> as_ideal(const QssaIdeal& I) { return {I.space, I.generators}; }

template <class K>
Poly<K> rebase(const Poly<K>& p, SpacePtr space) {
  Poly<K> r(p);
  r.set_space(std::move(space));
  return r;
}

template <class K>
struct Elimination {
  GroebnerBasis<K> basis;
  std::optional<UniPoly<K>> poly;  // the element of G in k[x_keep], if any
};

template <class K>
Elimination<K> eliminate(const Ideal<K>& I, std::size_t keep, Budget& budget = Budget::unlimited()) {
  if (keep >= I.nvars()) throw DomainError("elimination variable out of range");
  auto ord = MonomialOrder::eliminating(I.nvars(), keep);
  Elimination<K> out{buchberger(I.gens, ord, budget), std::nullopt};
  const std::string name = I.space->vars[keep];
  for (auto& g : out.basis.elements)
    if (g.is_univariate_in(keep)) {
      out.poly = to_univariate(g, keep, name);
      break;
    }
  return out;
}

template <class K>
struct ZeroDimensionality {
  bool zero_dimensional = false;
  std::vector<std::optional<UniPoly<K>>> witnesses;  // per variable
};

template <class K>
ZeroDimensionality<K> is_zero_dimensional(const Ideal<K>& I, Budget& budget = Budget::unlimited()) {
  ZeroDimensionality<K> out;
  out.zero_dimensional = true;
  for (std::size_t v = 0; v < I.nvars(); ++v) {
    auto e = eliminate(I, v, budget);
    if (!e.poly) out.zero_dimensional = false;
    out.witnesses.push_back(std::move(e.poly));
  }
  return out;
}

/// Every variable has a pure-power leading monomial in G (or G = {1}).
template <class K>
bool basis_is_zero_dimensional(const GroebnerBasis<K>& G, const std::vector<bool>& ignore = {}) {
  if (G.is_unit()) return true;
  std::size_t n = G.order.perm.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (v < ignore.size() && ignore[v]) continue;
    bool found = false;
    for (auto& g : G.elements) {
      auto lm = leading_exponents(g, G.order);
      bool pure = exponent_at(lm, v) > 0;
      for (std::size_t u = 0; u < lm.size() && pure; ++u)
        if (u != v && lm[u]) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace detail {

template <class K>
SpacePtr with_aux_variable(const SpacePtr& s) {
  auto t = std::make_shared<VarSpace>(*s);
  t->vars.push_back("t_aux");
  return t;
}

/// Order with t (index n) largest, then the declared variables.
inline MonomialOrder aux_order(std::size_t n) {
  MonomialOrder o;
  o.perm.push_back(n);
  for (std::size_t i = 0; i < n; ++i) o.perm.push_back(i);
  return o;
}

template <class K>
std::vector<Poly<K>> drop_aux(const GroebnerBasis<K>& G, std::size_t t, const SpacePtr& space) {
  std::vector<Poly<K>> out;
  for (auto& g : G.elements)
    if (!g.mentions(t)) out.push_back(rebase(g, space));
  return out;
}

}  // namespace detail

/// h / f for an exact multivariate divisor f.
template <class K>
Poly<K> divide_exact(const Poly<K>& h, const Poly<K>& f) {
  if (f.is_zero()) throw DomainError("division by zero polynomial");
  auto ord = MonomialOrder::identity(std::max(h.var_bound(), f.var_bound()));
  const auto lf = leading_exponents(f, ord);
  const K lc = f.coefficient(lf);
  Poly<K> q(h.space()), r(h);
  while (!r.is_zero()) {
    auto lr = leading_exponents(r, ord);
    if (!divides_exponents(lf, lr)) throw DomainError("inexact polynomial division");
    auto t = Poly<K>::monomial(sub_exponents(lr, lf), r.coefficient(lr) / lc, h.space());
    q += t;
    r -= t * f;
  }
  return q;
}

/// (I : f) via I ∩ <f> = elim_t(t*I + (1-t)*f), divided by f.
template <class K>
Ideal<K> ideal_quotient(const Ideal<K>& I, const Poly<K>& f, Budget& budget = Budget::unlimited()) {
  if (f.is_zero()) throw DomainError("ideal quotient by the zero polynomial");
  const std::size_t n = I.nvars();
  auto sp = detail::with_aux_variable<K>(I.space);
  auto t = Poly<K>::variable(n, sp);
  auto one = Poly<K>::constant(K(1), sp);
  std::vector<Poly<K>> gens;
  for (auto& g : I.gens) gens.push_back(t * rebase(g, sp));
  gens.push_back((one - t) * rebase(f, sp));
  auto G = buchberger(gens, detail::aux_order(n), budget);
  Ideal<K> out{I.space, {}};
  for (auto& h : detail::drop_aux(G, n, I.space)) out.gens.push_back(divide_exact(h, rebase(f, I.space)).monic());
  return out;
}

/// (I : f^inf) via the Rabinowitsch construction.
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Poly<K>& f, Budget& budget = Budget::unlimited()) {
  if (f.is_zero()) throw DomainError("saturation by the zero polynomial");
  const std::size_t n = I.nvars();
  auto sp = detail::with_aux_variable<K>(I.space);
  auto t = Poly<K>::variable(n, sp);
  std::vector<Poly<K>> gens;
  for (auto& g : I.gens) gens.push_back(rebase(g, sp));
  gens.push_back(t * rebase(f, sp) - Poly<K>::constant(K(1), sp));
  auto G = buchberger(gens, detail::aux_order(n), budget);
  return {I.space, detail::drop_aux(G, n, I.space)};
}

/// (I : (x_1 ... x_n)^inf) as successive saturations by single variables,
/// which keeps each auxiliary basis small.
template <class K>
Ideal<K> saturate_by_variables(const Ideal<K>& I, Budget& budget = Budget::unlimited()) {
  Ideal<K> cur = I;
  for (std::size_t v = 0; v < I.nvars(); ++v) cur = saturate(cur, Poly<K>::variable(v, I.space), budget);
  return cur;
}

/// Iterated quotients until the chain stabilizes (cross-check for saturate).
template <class K>
Ideal<K> saturate_iterated(const Ideal<K>& I, const Poly<K>& f, int max_rounds = 16,
                           Budget& budget = Budget::unlimited()) {
  Ideal<K> cur = I;
  for (int k = 0; k < max_rounds; ++k) {
    Ideal<K> next = ideal_quotient(cur, f, budget);
    if (ideals_equal(cur.gens, next.gens, I.nvars(), budget)) return next;
    cur = std::move(next);
  }
  throw ResourceLimit("iterated quotient did not stabilize");
}

template <class K>
Poly<K> product_of_variables(const Ideal<K>& I) {
  Exponents e(I.nvars(), 1);
  return Poly<K>::monomial(e, K(1), I.space);
}

enum class StratumKind { Inconsistent, ZeroDimensional, PositiveDimensional };

inline const char* to_string(StratumKind k) {
  switch (k) {
    case StratumKind::Inconsistent: return "inconsistent";
    case StratumKind::ZeroDimensional: return "zero-dimensional";
    case StratumKind::PositiveDimensional: return "positive-dimensional";
  }
  return "?";
}

template <class K>
struct Stratum {
  std::vector<std::size_t> zeroed;
  StratumKind kind;
  std::vector<Poly<K>> basis;
};

/// All 2^n - 1 coordinate strata for n <= 6 (or with `all`), otherwise
/// singletons only.
template <class K>
std::vector<Stratum<K>> boundary_strata(const Ideal<K>& I, bool all = false, Budget& budget = Budget::unlimited()) {
  const std::size_t n = I.nvars();
  std::vector<std::vector<std::size_t>> subsets;
  if (n <= 6 || all) {
    if (n >= 31) throw DomainError("too many variables for full strata enumeration");
    std::vector<unsigned> masks;
    for (unsigned m = 1; m < (1u << n); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    for (auto m : masks) {
      std::vector<std::size_t> s;
      for (std::size_t v = 0; v < n; ++v)
        if (m >> v & 1u) s.push_back(v);
      subsets.push_back(s);
    }
  } else {
    for (std::size_t v = 0; v < n; ++v) subsets.push_back({v});
  }
  std::vector<Stratum<K>> out;
  auto ord = MonomialOrder::identity(n);
  for (auto& s : subsets) {
    std::vector<bool> zero(n, false);
    for (auto v : s) zero[v] = true;
    std::vector<Poly<K>> gens;
    for (auto& g : I.gens) gens.push_back(g.set_zero(zero));
    auto G = buchberger(gens, ord, budget);
    StratumKind kind = G.is_unit()                           ? StratumKind::Inconsistent
                       : basis_is_zero_dimensional(G, zero) ? StratumKind::ZeroDimensional
                                                             : StratumKind::PositiveDimensional;
    out.push_back({s, kind, G.elements});
  }
  return out;
}

}  // namespace qssa

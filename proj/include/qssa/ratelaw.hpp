#pragma once

// Mass-action rate laws, linear conservation laws among intermediates,
// and the QSSA ideal with its ground-field inventory.

#include "qssa/crn.hpp"
#include "qssa/unipoly.hpp"

#include <set>

namespace qssa {

struct GroundFieldInventory {
  std::vector<std::string> rate_constants;
  std::vector<std::string> slow_concentrations;
  std::vector<std::string> lcl_constants;
};

struct Lcl {
  std::vector<Rational> coeffs;  // one entry per intermediate
  std::string constant;          // T1, T2, ...
};

struct QssaIdeal {
  SpacePtr space;
  IntermediateSet q;
  std::vector<IntermediatePoly> generators;  // rate laws of q, then LCL equations
  std::size_t rate_law_count = 0;
  GroundFieldInventory inventory;
  std::vector<Lcl> lcls;
  bool restricted_bimolecular = true;

  std::size_t nvars() const { return space ? space->vars.size() : 0; }
  std::span<const IntermediatePoly> rate_laws() const { return {generators.data(), rate_law_count}; }
};

inline std::string variable_name(const Crn& crn, std::size_t s) { return "x_" + crn.species[s]; }
inline std::string concentration_name(const Crn& crn, std::size_t s) { return "c_" + crn.species[s]; }

/// Parameter order: rate constants in reaction order, then the
/// concentrations of every non-intermediate species in species order,
/// then `lcl_count` conservation constants.
inline std::shared_ptr<VarSpace> make_space(const Crn& crn, const IntermediateSet& q, std::size_t lcl_count,
                                            GroundFieldInventory* inv = nullptr) {
  auto s = std::make_shared<VarSpace>();
  for (auto i : q) s->vars.push_back(variable_name(crn, i));
  GroundFieldInventory local;
  for (auto& r : crn.reactions) local.rate_constants.push_back(r.rate);
  std::set<std::size_t> qs(q.begin(), q.end());
  for (std::size_t i = 0; i < crn.species.size(); ++i)
    if (!qs.count(i)) local.slow_concentrations.push_back(concentration_name(crn, i));
  for (std::size_t i = 0; i < lcl_count; ++i) local.lcl_constants.push_back("T" + std::to_string(i + 1));
  for (auto* list : {&local.rate_constants, &local.slow_concentrations, &local.lcl_constants})
    s->params.insert(s->params.end(), list->begin(), list->end());
  if (inv) *inv = std::move(local);
  return s;
}

namespace detail {

/// Index of the parameter c_s in a space built by make_space, or npos.
inline std::size_t concentration_param(const Crn& crn, const IntermediateSet& q, std::size_t s) {
  std::set<std::size_t> qs(q.begin(), q.end());
  if (qs.count(s)) return std::string::npos;
  std::size_t idx = crn.reactions.size();
  for (std::size_t i = 0; i < s; ++i)
    if (!qs.count(i)) ++idx;
  return idx;
}

}  // namespace detail

/// Phi_s: sum over reactions of (net change of s) * k * x^reactants, with
/// non-intermediate concentrations folded into the coefficients.
inline IntermediatePoly rate_law(const Crn& crn, std::size_t s, const IntermediateSet& q, SpacePtr space = nullptr) {
  if (s >= crn.species.size()) throw DomainError("species index out of range");
  if (!space) space = make_space(crn, q, 0);
  std::vector<Term<RatFunc>> terms;
  for (std::size_t r = 0; r < crn.reactions.size(); ++r) {
    const auto& rx = crn.reactions[r];
    long before = rx.reactants.count(s) ? static_cast<long>(rx.reactants.at(s)) : 0;
    long after = rx.products.count(s) ? static_cast<long>(rx.products.at(s)) : 0;
    if (before == after) continue;
    Exponents vexp, pexp = unit_exponents(r);
    for (auto& [sp, n] : rx.reactants) {
      if (n > 0xFFFFu) throw DomainError("stoichiometric coefficient too large for a monomial exponent");
      auto it = std::find(q.begin(), q.end(), sp);
      if (it != q.end()) {
        auto v = static_cast<std::size_t>(it - q.begin());
        if (vexp.size() <= v) vexp.resize(v + 1, 0);
        vexp[v] = static_cast<std::uint16_t>(n);
      } else {
        auto p = detail::concentration_param(crn, q, sp);
        if (pexp.size() <= p) pexp.resize(p + 1, 0);
        pexp[p] = static_cast<std::uint16_t>(n);
      }
    }
    terms.push_back({vexp, RatFunc(ParamPoly::monomial(pexp, Integer(after - before)))});
  }
  return IntermediatePoly::from_terms(std::move(terms), space);
}

namespace detail {

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

/// Linear constraints: one row per (variable monomial, parameter monomial).
inline std::vector<std::vector<Rational>> lcl_constraints(const std::vector<IntermediatePoly>& laws) {
  std::map<std::pair<std::vector<std::uint16_t>, std::vector<std::uint16_t>>, std::vector<Rational>> rows;
  for (std::size_t j = 0; j < laws.size(); ++j)
    for (auto& t : laws[j].terms()) {
      if (!t.coef.is_polynomial()) throw DomainError("rate law coefficient is not a polynomial");
      for (auto& pt : t.coef.num().terms()) {
        auto key = std::make_pair(std::vector<std::uint16_t>(t.exp.begin(), t.exp.end()),
                                  std::vector<std::uint16_t>(pt.exp.begin(), pt.exp.end()));
        auto& row = rows[key];
        if (row.empty()) row.assign(laws.size(), Rational(0));
        row[j] += Rational(pt.coef);
      }
    }
  std::vector<std::vector<Rational>> m;
  for (auto& [k, row] : rows) m.push_back(row);
  return m;
}

}  // namespace detail

/// Basis of { a : sum_s a_s Phi_s = 0 } over the given species. Each vector
/// has first nonzero entry 1; constants are named T1, T2, ... in order.
inline std::vector<Lcl> find_lcls(const Crn& crn, const IntermediateSet& q) {
  if (q.empty()) return {};
  std::vector<IntermediatePoly> laws;
  auto space = make_space(crn, q, 0);
  for (auto s : q) laws.push_back(rate_law(crn, s, q, space));
  auto m = detail::lcl_constraints(laws);
  const std::size_t n = q.size();
  auto pivots = detail::rref(m, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Lcl> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> a(n, Rational(0));
    a[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) a[pivots[r]] = -m[r][f];
    Rational lead;
    for (auto& x : a)
      if (x != 0) {
        lead = x;
        break;
      }
    for (auto& x : a) {
      x /= lead;
      x.canonicalize();
    }
    out.push_back({std::move(a), "T" + std::to_string(out.size() + 1)});
  }
  return out;
}

/// Conservation laws over all species (diagnostic flag).
inline std::vector<Lcl> find_lcls_all_species(const Crn& crn) {
  IntermediateSet all(crn.species.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return find_lcls(crn, all);
}

struct Proportionality {
  bool applicable = false;
  std::string reason;
  std::optional<Rational> alpha;
};

/// f = alpha * g with alpha rational, when it exists.
inline Proportionality proportionality_diagnostic(const IntermediatePoly& f, const IntermediatePoly& g) {
  Proportionality out;
  if (f.size() < 2 || g.size() < 2) {
    out.reason = "each polynomial needs at least two terms";
    return out;
  }
  if (f.total_degree() != g.total_degree()) {
    out.reason = "total degrees differ";
    return out;
  }
  out.applicable = true;
  if (f.size() != g.size()) return out;
  RatFunc ratio = f.terms()[0].coef / g.terms()[0].coef;
  if (!ratio.is_constant()) return out;
  if (!(g.scaled(ratio) == f)) return out;
  Rational a(ratio.num().constant_term(), ratio.den().constant_term());
  a.canonicalize();
  out.alpha = a;
  return out;
}

inline QssaIdeal build_qssa_ideal(const Crn& crn, const IntermediateSet& q) {
  QssaIdeal I;
  I.q = q;
  I.lcls = find_lcls(crn, q);
  auto space = make_space(crn, q, I.lcls.size(), &I.inventory);
  I.space = space;
  I.restricted_bimolecular = is_at_most_bimolecular(crn, q, true);
  for (auto s : q) I.generators.push_back(rate_law(crn, s, q, space));
  I.rate_law_count = q.size();
  const std::size_t tbase = crn.reactions.size() + I.inventory.slow_concentrations.size();
  for (std::size_t l = 0; l < I.lcls.size(); ++l) {
    std::vector<Term<RatFunc>> terms;
    for (std::size_t v = 0; v < q.size(); ++v)
      if (I.lcls[l].coeffs[v] != 0) terms.push_back({unit_exponents(v), RatFunc(I.lcls[l].coeffs[v])});
    terms.push_back({Exponents{}, -RatFunc::param(tbase + l)});
    I.generators.push_back(IntermediatePoly::from_terms(std::move(terms), space));
  }
  return I;
}

/// Syntactic check of the two-intermediate finiteness hypotheses, plus the
/// nonzero-constant-term strengthening.
struct FinitenessHypotheses {
  bool bimolecular = false;
  bool nonconstant = false;
  bool not_both_univariate_same_variable = false;
  bool constant_term = false;
  std::string constant_term_in;
  std::vector<std::string> failures;

  bool theorem_holds() const { return bimolecular && nonconstant && not_both_univariate_same_variable; }
  bool strengthened_holds() const { return theorem_holds() && constant_term; }
};

inline FinitenessHypotheses hypotheses_finitethm(const QssaIdeal& I) {
  if (I.q.size() != 2) throw DomainError("finiteness hypotheses need exactly two intermediates");
  FinitenessHypotheses h;
  h.bimolecular = I.restricted_bimolecular;
  if (!h.bimolecular) h.failures.push_back("restriction to the intermediates is not at-most-bimolecular");
  const auto& f = I.generators[0];
  const auto& g = I.generators[1];
  h.nonconstant = !f.is_constant() && !g.is_constant();
  if (!h.nonconstant) h.failures.push_back("a rate law polynomial is constant");
  bool same = false;
  for (std::size_t v = 0; v < 2; ++v)
    if (f.is_univariate_in(v) && g.is_univariate_in(v)) same = true;
  h.not_both_univariate_same_variable = !same;
  if (same) h.failures.push_back("both rate law polynomials are univariate in the same variable");
  for (std::size_t i = 0; i < 2; ++i)
    if (!I.generators[i].constant_term().is_zero()) {
      h.constant_term = true;
      h.constant_term_in = I.space->vars[i];
      break;
    }
  if (!h.constant_term) h.failures.push_back("no rate law polynomial has a nonzero constant term");
  return h;
}

}  // namespace qssa

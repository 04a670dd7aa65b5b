#pragma once

// Buchberger's algorithm for lex orders over Q(params) (or Q).
//
// Internally every polynomial is scaled to have coefficients in Z[params]
// (resp. Z) and kept primitive; reductions are fraction-free. This is the
// same ideal over the field, and avoids rational-function arithmetic in
// the inner loop. Results are converted back to monic field polynomials.

#include "qssa/unipoly.hpp"

namespace qssa {

/// Lex order given by a permutation of the variables, largest first.
struct MonomialOrder {
  std::vector<std::size_t> perm;

  static MonomialOrder identity(std::size_t n) {
    MonomialOrder o;
    for (std::size_t i = 0; i < n; ++i) o.perm.push_back(i);
    return o;
  }
  /// Other variables in declared order, then `keep` last.
  static MonomialOrder eliminating(std::size_t n, std::size_t keep) {
    MonomialOrder o;
    for (std::size_t i = 0; i < n; ++i)
      if (i != keep) o.perm.push_back(i);
    o.perm.push_back(keep);
    return o;
  }

  Exponents permute(const Exponents& e) const {
    Exponents r(perm.size(), 0);
    for (std::size_t k = 0; k < perm.size(); ++k) r[k] = exponent_at(e, perm[k]);
    trim(r);
    return r;
  }
  Exponents unpermute(const Exponents& e) const {
    Exponents r;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      if (r.size() <= perm[k]) r.resize(perm[k] + 1, 0);
      r[perm[k]] = e[k];
    }
    return r;
  }
  int compare(const Exponents& a, const Exponents& b) const {
    for (auto v : perm) {
      auto x = exponent_at(a, v), y = exponent_at(b, v);
      if (x != y) return x < y ? -1 : 1;
    }
    return 0;
  }
};

namespace gb {

template <class R>
struct Ring;

template <>
struct Ring<Integer> {
  static bool is_zero(const Integer& c) { return c == 0; }
  static bool is_one(const Integer& c) { return c == 1; }
  static bool is_unit(const Integer& c) { return c == 1 || c == -1; }
  static bool negative(const Integer& c) { return c < 0; }
  static Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static Integer div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static std::size_t weight(const Integer& c) { return mpz_size(c.get_mpz_t()); }
};

template <>
struct Ring<ParamPoly> {
  static bool is_zero(const ParamPoly& c) { return c.is_zero(); }
  static bool is_one(const ParamPoly& c) { return c.is_one(); }
  static bool is_unit(const ParamPoly& c) { return c.is_constant() && abs(c.leading_coefficient()) == 1; }
  static bool negative(const ParamPoly& c) { return c.leading_coefficient() < 0; }
  static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) { return qssa::gcd(a, b); }
  static ParamPoly div(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_constant()) return a.divided_by(b.leading_coefficient());
    return a / b;
  }
  static std::size_t weight(const ParamPoly& c) { return c.size(); }
};

template <class K>
struct RingOf;
template <>
struct RingOf<RatFunc> {
  using type = ParamPoly;
};
template <>
struct RingOf<Rational> {
  using type = Integer;
};

template <class R>
struct GTerm {
  Exponents e;  // permuted: index 0 is the largest variable
  R c;
};
template <class R>
using GPoly = std::vector<GTerm<R>>;

/// a*mf*f - b*mg*g, all in descending lex order.
template <class R>
GPoly<R> combine(const GPoly<R>& f, const R& a, const Exponents& mf, const GPoly<R>& g, const R& b,
                 const Exponents& mg) {
  using T = Ring<R>;
  GPoly<R> out;
  out.reserve(f.size() + g.size());
  const bool a1 = T::is_one(a), b1 = T::is_one(b);
  std::size_t i = 0, j = 0;
  Exponents ei, ej;
  auto load_i = [&] {
    if (i < f.size()) ei = mf.empty() ? f[i].e : add_exponents(f[i].e, mf);
  };
  auto load_j = [&] {
    if (j < g.size()) ej = mg.empty() ? g[j].e : add_exponents(g[j].e, mg);
  };
  load_i();
  load_j();
  while (i < f.size() || j < g.size()) {
    int c = i == f.size() ? -1 : j == g.size() ? 1 : compare_lex(ei, ej);
    if (c > 0) {
      out.push_back({ei, a1 ? R(f[i].c) : R(f[i].c * a)});
      ++i;
      load_i();
    } else if (c < 0) {
      out.push_back({ej, b1 ? R(-g[j].c) : R(-(g[j].c * b))});
      ++j;
      load_j();
    } else {
      R s = (a1 ? R(f[i].c) : R(f[i].c * a)) - (b1 ? R(g[j].c) : R(g[j].c * b));
      if (!T::is_zero(s)) out.push_back({ei, std::move(s)});
      ++i;
      ++j;
      load_i();
      load_j();
    }
  }
  return out;
}

template <class R>
R content(const GPoly<R>& f) {
  using T = Ring<R>;
  if (f.empty()) return R(0);
  std::vector<const R*> cs;
  for (auto& t : f) cs.push_back(&t.c);
  std::sort(cs.begin(), cs.end(), [](const R* x, const R* y) { return T::weight(*x) < T::weight(*y); });
  R g = *cs[0];
  if (T::negative(g)) g = -g;
  for (std::size_t k = 1; k < cs.size() && !T::is_unit(g); ++k) g = T::gcd(g, *cs[k]);
  return g;
}

/// Divide out the content and make the leading coefficient positive.
/// Returns the divisor used (signed).
template <class R>
R make_primitive(GPoly<R>& f) {
  using T = Ring<R>;
  if (f.empty()) return R(1);
  R g = content(f);
  if (T::negative(f[0].c)) g = -g;
  if (!T::is_one(g))
    for (auto& t : f) t.c = T::div(t.c, g);
  return g;
}

template <class R>
struct Reducer {
  const std::vector<GPoly<R>>* polys;
  const std::vector<std::size_t>* active;

  /// Index (into polys) of a reducer for monomial m, or npos.
  std::size_t find(const Exponents& m) const {
    std::size_t best = std::string::npos;
    for (auto k : *active) {
      const auto& g = (*polys)[k];
      if (!divides_exponents(g[0].e, m)) continue;
      if (best == std::string::npos || g.size() < (*polys)[best].size()) best = k;
    }
    return best;
  }
};

/// Scale bookkeeping so that normal_form can return the true remainder.
template <class R>
struct Scale {
  bool track = false;
  R num = R(1), den = R(1);
};

/// Reduce f modulo the active polynomials. With `full`, every term is
/// reduced; otherwise only the leading term.
template <class R>
void reduce(GPoly<R>& f, const Reducer<R>& red, bool full, Budget& budget, Scale<R>* scale = nullptr) {
  using T = Ring<R>;
  std::size_t pos = 0, steps = 0;
  while (pos < f.size()) {
    std::size_t k = red.find(f[pos].e);
    if (k == std::string::npos) {
      if (!full) break;
      ++pos;
      continue;
    }
    const auto& g = (*red.polys)[k];
    R h = T::gcd(f[pos].c, g[0].c);
    R a = T::div(g[0].c, h), b = T::div(f[pos].c, h);
    Exponents m = sub_exponents(f[pos].e, g[0].e);
    // Terms before pos are only rescaled by a; the term at pos cancels.
    f = combine(f, a, Exponents{}, g, b, m);
    if (scale && scale->track) scale->num = scale->num * a;
    budget.step();
    if (++steps % 8 == 0) {
      R d = make_primitive(f);
      if (scale && scale->track) scale->den = scale->den * d;
    }
  }
  R d = make_primitive(f);
  if (scale && scale->track) scale->den = scale->den * d;
}

template <class R>
struct Pair {
  std::size_t i, j;
  Exponents lcm;
};

template <class R>
bool is_constant_poly(const GPoly<R>& f) {
  return f.size() == 1 && f[0].e.empty();
}

/// Core Buchberger with Gebauer-Moeller pair management and the normal
/// selection strategy. Input polynomials must be in permuted form.
template <class R>
std::vector<GPoly<R>> buchberger(std::vector<GPoly<R>> input, Budget& budget) {
  std::vector<GPoly<R>> polys;
  std::vector<std::size_t> G;
  std::vector<Pair<R>> B;
  Reducer<R> red{&polys, &G};
  const std::vector<GPoly<R>> unit{GPoly<R>{GTerm<R>{Exponents{}, R(1)}}};

  auto update = [&](std::size_t h) {
    const Exponents& lh = polys[h][0].e;
    // C: candidate pairs (g, h).
    std::vector<std::pair<std::size_t, Exponents>> C, D;
    for (auto g : G) C.emplace_back(g, lcm_exponents(polys[g][0].e, lh));
    for (std::size_t a = 0; a < C.size(); ++a) {
      const auto& [g1, l1] = C[a];
      bool keep = coprime_exponents(polys[g1][0].e, lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (divides_exponents(C[b].second, l1)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (divides_exponents(D[b].second, l1)) keep = false;
      }
      if (keep) D.push_back(C[a]);
    }
    std::vector<Pair<R>> nb;
    for (auto& p : B) {
      bool drop = divides_exponents(lh, p.lcm) && lcm_exponents(polys[p.i][0].e, lh) != p.lcm &&
                  lcm_exponents(polys[p.j][0].e, lh) != p.lcm;
      if (!drop) nb.push_back(std::move(p));
    }
    for (auto& [g, l] : D)
      if (!coprime_exponents(polys[g][0].e, lh)) nb.push_back({g, h, l});
    B = std::move(nb);
    std::vector<std::size_t> ng;
    for (auto g : G)
      if (!divides_exponents(lh, polys[g][0].e)) ng.push_back(g);
    ng.push_back(h);
    G = std::move(ng);
  };

  for (auto& f : input) {
    if (f.empty()) continue;
    reduce(f, red, false, budget);
    if (f.empty()) continue;
    if (is_constant_poly(f)) return unit;
    polys.push_back(std::move(f));
    update(polys.size() - 1);
  }

  while (!B.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < B.size(); ++k) {
      int c = compare_lex(B[k].lcm, B[best].lcm);
      if (c < 0 || (c == 0 && std::tie(B[k].j, B[k].i) < std::tie(B[best].j, B[best].i))) best = k;
    }
    Pair<R> p = std::move(B[best]);
    B.erase(B.begin() + static_cast<long>(best));
    budget.step();
    const auto& fi = polys[p.i];
    const auto& fj = polys[p.j];
    R h = Ring<R>::gcd(fi[0].c, fj[0].c);
    GPoly<R> s = combine(fi, Ring<R>::div(fj[0].c, h), sub_exponents(p.lcm, fi[0].e), fj, Ring<R>::div(fi[0].c, h),
                         sub_exponents(p.lcm, fj[0].e));
    reduce(s, red, true, budget);
    if (s.empty()) continue;
    if (is_constant_poly(s)) return unit;
    polys.push_back(std::move(s));
    update(polys.size() - 1);
  }

  // Interreduce: ascending leading monomials, tails reduced by the others.
  std::vector<std::size_t> order = G;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return compare_lex(polys[a][0].e, polys[b][0].e) < 0; });
  std::vector<GPoly<R>> out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::vector<std::size_t> others;
    for (std::size_t m = 0; m < order.size(); ++m)
      if (m != k) others.push_back(order[m]);
    Reducer<R> r2{&polys, &others};
    GPoly<R> f = polys[order[k]];
    reduce(f, r2, true, budget);
    polys[order[k]] = f;
    out.push_back(std::move(f));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// ---- conversion between field polynomials and the internal form ----

inline GPoly<ParamPoly> to_internal(const Poly<RatFunc>& p, const MonomialOrder& ord) {
  // Common denominator via pairwise lcm.
  ParamPoly L(1);
  for (auto& t : p.terms()) {
    const auto& d = t.coef.den();
    if (d.is_one()) continue;
    ParamPoly g = qssa::gcd(L, d);
    L = L * (d / g);
  }
  GPoly<ParamPoly> out;
  for (auto& t : p.terms()) out.push_back({ord.permute(t.exp), t.coef.num() * (L / t.coef.den())});
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return compare_lex(a.e, b.e) > 0; });
  make_primitive(out);
  return out;
}

inline GPoly<Integer> to_internal(const Poly<Rational>& p, const MonomialOrder& ord) {
  Integer L(1);
  for (auto& t : p.terms()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), t.coef.get_den_mpz_t());
  GPoly<Integer> out;
  for (auto& t : p.terms()) {
    Integer c = t.coef.get_num() * (L / t.coef.get_den());
    out.push_back({ord.permute(t.exp), c});
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return compare_lex(a.e, b.e) > 0; });
  make_primitive(out);
  return out;
}

inline RatFunc field_ratio(const ParamPoly& a, const ParamPoly& b) { return RatFunc(a, b); }
inline Rational field_ratio(const Integer& a, const Integer& b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

/// Monic field polynomial from an internal one.
template <class K, class R>
Poly<K> to_field(const GPoly<R>& f, const MonomialOrder& ord, SpacePtr space) {
  std::vector<Term<K>> terms;
  if (f.empty()) return Poly<K>(space);
  for (auto& t : f) terms.push_back({ord.unpermute(t.e), field_ratio(t.c, f[0].c)});
  return Poly<K>::from_terms(std::move(terms), std::move(space));
}

/// Field polynomial equal to f / (num/den).
template <class K, class R>
Poly<K> to_field_scaled(const GPoly<R>& f, const MonomialOrder& ord, SpacePtr space, const R& num, const R& den) {
  std::vector<Term<K>> terms;
  for (auto& t : f) terms.push_back({ord.unpermute(t.e), field_ratio(t.c * den, num)});
  return Poly<K>::from_terms(std::move(terms), std::move(space));
}

}  // namespace gb

template <class K>
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Poly<K>> elements;  // monic, sorted by leading monomial descending

  bool is_unit() const { return elements.size() == 1 && elements[0].is_constant(); }
};

/// Leading exponent of p under a lex order.
template <class K>
Exponents leading_exponents(const Poly<K>& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw DomainError("leading term of zero polynomial");
  const Exponents* best = &p.terms()[0].exp;
  for (auto& t : p.terms())
    if (ord.compare(t.exp, *best) > 0) best = &t.exp;
  return *best;
}

template <class K>
GroebnerBasis<K> buchberger(const std::vector<Poly<K>>& generators, const MonomialOrder& ord,
                            Budget& budget = Budget::unlimited()) {
  using R = typename gb::RingOf<K>::type;
  SpacePtr space;
  std::vector<gb::GPoly<R>> in;
  for (auto& g : generators) {
    if (!space) space = g.space();
    if (!g.is_zero()) in.push_back(gb::to_internal(g, ord));
  }
  auto out = gb::buchberger<R>(std::move(in), budget);
  GroebnerBasis<K> result{ord, {}};
  for (auto& f : out) result.elements.push_back(gb::to_field<K>(f, ord, space));
  return result;
}

/// Remainder of f on division by `basis` (any generating set).
template <class K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& basis, const MonomialOrder& ord,
                    Budget& budget = Budget::unlimited()) {
  using R = typename gb::RingOf<K>::type;
  if (f.is_zero()) return f;
  std::vector<gb::GPoly<R>> polys;
  std::vector<std::size_t> active;
  for (auto& b : basis) {
    if (b.is_zero()) continue;
    polys.push_back(gb::to_internal(b, ord));
    active.push_back(polys.size() - 1);
  }
  // f = c * internal(f): recover c from any coefficient.
  auto fi = gb::to_internal(f, ord);
  K c = f.coefficient(ord.unpermute(fi[0].e)) / K(gb::field_ratio(fi[0].c, R(1)));
  gb::Scale<R> scale;
  scale.track = true;
  gb::reduce(fi, gb::Reducer<R>{&polys, &active}, true, budget, &scale);
  // fi = (num/den) * internal(f) - combination, so remainder = c*den/num * fi.
  auto r = gb::to_field_scaled<K>(fi, ord, f.space(), scale.num, scale.den);
  return r.scaled(c);
}

/// f reduces to zero modulo `basis` (fraction-free, no remainder recovery).
template <class K>
bool reduces_to_zero(const Poly<K>& f, const std::vector<Poly<K>>& basis, const MonomialOrder& ord,
                     Budget& budget = Budget::unlimited()) {
  using R = typename gb::RingOf<K>::type;
  if (f.is_zero()) return true;
  std::vector<gb::GPoly<R>> polys;
  std::vector<std::size_t> active;
  for (auto& b : basis) {
    if (b.is_zero()) continue;
    polys.push_back(gb::to_internal(b, ord));
    active.push_back(polys.size() - 1);
  }
  auto fi = gb::to_internal(f, ord);
  gb::reduce(fi, gb::Reducer<R>{&polys, &active}, true, budget);
  return fi.empty();
}

/// Every S-polynomial of the basis reduces to zero.
template <class K>
bool satisfies_buchberger_criterion(const GroebnerBasis<K>& G) {
  using R = typename gb::RingOf<K>::type;
  std::vector<gb::GPoly<R>> polys;
  std::vector<std::size_t> active;
  for (auto& g : G.elements) {
    polys.push_back(gb::to_internal(g, G.order));
    active.push_back(polys.size() - 1);
  }
  gb::Reducer<R> red{&polys, &active};
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      const auto& fi = polys[i];
      const auto& fj = polys[j];
      Exponents l = lcm_exponents(fi[0].e, fj[0].e);
      R h = gb::Ring<R>::gcd(fi[0].c, fj[0].c);
      auto s = gb::combine(fi, gb::Ring<R>::div(fj[0].c, h), sub_exponents(l, fi[0].e), fj,
                           gb::Ring<R>::div(fi[0].c, h), sub_exponents(l, fj[0].e));
      gb::reduce(s, red, true, Budget::unlimited());
      if (!s.empty()) return false;
    }
  return true;
}

/// Both generating sets describe the same ideal.
template <class K>
bool ideals_equal(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b, std::size_t nvars,
                  Budget& budget = Budget::unlimited()) {
  auto ord = MonomialOrder::identity(nvars);
  auto ga = buchberger(a, ord, budget), gb_ = buchberger(b, ord, budget);
  for (auto& f : b)
    if (!reduces_to_zero(f, ga.elements, ord, budget)) return false;
  for (auto& f : a)
    if (!reduces_to_zero(f, gb_.elements, ord, budget)) return false;
  return true;
}

}  // namespace qssa

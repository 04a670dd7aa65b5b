// Randomized property suites with fixed seeds. Each returns the number of
// cases run and a description of every failing case.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "qssa/qssa.hpp"

namespace qssa::testing {

struct PropertyResult {
  int cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

namespace prop {

inline SpacePtr space(std::size_t n) {
  static const char* names[] = {"x", "y", "z"};
  auto s = std::make_shared<VarSpace>();
  for (std::size_t i = 0; i < n; ++i) s->vars.push_back(names[i]);
  return s;
}

/// Random polynomial over Q in n variables, total degree <= d, up to
/// `terms` terms with coefficients in [-c, c] \ {0}.
inline QPoly random_poly(std::mt19937_64& rng, const SpacePtr& sp, int d, int terms, int c) {
  const std::size_t n = sp->vars.size();
  std::uniform_int_distribution<int> coef(-c, c), deg(0, d), var(0, static_cast<int>(n) - 1);
  std::vector<Term<Rational>> ts;
  for (int k = 0; k < terms; ++k) {
    int a = coef(rng);
    if (a == 0) continue;
    Exponents e(n, 0);
    int total = deg(rng);
    for (int i = 0; i < total; ++i) ++e[static_cast<std::size_t>(var(rng))];
    trim(e);
    ts.push_back({e, Rational(a)});
  }
  if (ts.empty()) ts.push_back({Exponents{}, Rational(1)});
  return QPoly::from_terms(std::move(ts), sp);
}

inline QUniPoly random_uni(std::mt19937_64& rng, int d, int c) {
  std::uniform_int_distribution<int> coef(-c, c);
  std::vector<Rational> cs;
  for (int i = 0; i < d; ++i) cs.push_back(Rational(coef(rng)));
  int lead = 0;
  while (lead == 0) lead = coef(rng);
  cs.push_back(Rational(lead));
  return QUniPoly(cs, "x");
}

}  // namespace prop

/// Every S-polynomial of the computed basis reduces to zero, and every input
/// generator lies in the ideal of the basis.
inline PropertyResult buchberger_property(int cases = 100, std::uint64_t seed = 2024) {
  PropertyResult r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nv(1, 3), ng(1, 3);
  for (int k = 0; k < cases; ++k, ++r.cases) {
    auto sp = prop::space(static_cast<std::size_t>(nv(rng)));
    std::vector<QPoly> gens;
    for (int g = ng(rng); g > 0; --g) gens.push_back(prop::random_poly(rng, sp, 2, 4, 5));
    auto ord = MonomialOrder::identity(sp->vars.size());
    auto G = buchberger(gens, ord);
    bool members = std::all_of(gens.begin(), gens.end(), [&](auto& f) { return reduces_to_zero(f, G.elements, ord); });
    if (!satisfies_buchberger_criterion(G) || !members) r.failures.push_back("ideal " + std::to_string(k));
  }
  return r;
}

/// I ⊆ (I : f) ⊆ (I : f^2) ⊆ ... stabilizes at (I : f^inf), computed
/// independently through an auxiliary variable.
inline PropertyResult saturation_chain_property(int cases = 40, std::uint64_t seed = 77) {
  PropertyResult r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nv(2, 3);
  for (int k = 0; k < cases; ++k, ++r.cases) {
    auto sp = prop::space(static_cast<std::size_t>(nv(rng)));
    const std::size_t n = sp->vars.size();
    // Generators carrying a factor of x often, so the chain is not trivial.
    std::vector<QPoly> gens;
    for (int g = 0; g < 2; ++g) {
      auto f = prop::random_poly(rng, sp, 2, 3, 4);
      if (rng() % 2) f = f * QPoly::variable(0, sp);
      gens.push_back(f);
    }
    Ideal<Rational> I{sp, gens};
    auto x = QPoly::variable(0, sp);
    auto ord = MonomialOrder::identity(n);
    bool ok = true;
    try {
      Budget b(60, 0);
      Ideal<Rational> cur = I;
      auto sat = saturate(I, x, b);
      for (int step = 0; step < 12 && ok; ++step) {
        auto next = ideal_quotient(cur, x, b);
        auto Gn = buchberger(next.gens, ord, b);
        auto Gs = buchberger(sat.gens, ord, b);
        for (auto& f : cur.gens) ok &= reduces_to_zero(f, Gn.elements, ord, b);
        for (auto& f : next.gens) ok &= reduces_to_zero(f, Gs.elements, ord, b);
        if (ideals_equal(cur.gens, next.gens, n, b)) {
          ok &= ideals_equal(next.gens, sat.gens, n, b);
          break;
        }
        cur = next;
      }
    } catch (const ResourceLimit&) {
      ok = false;
    }
    if (!ok) r.failures.push_back("ideal " + std::to_string(k));
  }
  return r;
}

/// Two quadratics in two variables: the eliminated polynomial has degree at
/// most 4 whenever it exists.
inline PropertyResult bezout_property(int cases = 100, std::uint64_t seed = 4) {
  PropertyResult r;
  std::mt19937_64 rng(seed);
  auto sp = prop::space(2);
  for (int k = 0; k < cases; ++k, ++r.cases) {
    Ideal<Rational> I{sp, {prop::random_poly(rng, sp, 2, 5, 6), prop::random_poly(rng, sp, 2, 5, 6)}};
    for (std::size_t v = 0; v < 2; ++v) {
      auto e = eliminate(I, v);
      if (e.poly && e.poly->degree() > 4)
        r.failures.push_back("system " + std::to_string(k) + ": degree " + std::to_string(e.poly->degree()));
    }
  }
  return r;
}

/// factor_rational followed by re-expansion returns the input; factors have
/// the requested degrees or split further.
inline PropertyResult factor_roundtrip_property(int cases = 100, std::uint64_t seed = 31337) {
  PropertyResult r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nf(1, 4), df(1, 3);
  for (int k = 0; k < cases; ++k, ++r.cases) {
    QUniPoly f({Rational(1)}, "x");
    int total = 0;
    for (int i = nf(rng); i > 0 && total < 12; --i) {
      int d = std::min(df(rng), 12 - total);
      f = f * prop::random_uni(rng, d, 9);
      total += d;
    }
    auto F = factor_rational(f);
    QUniPoly back({F.unit}, "x");
    int degrees = 0;
    for (auto& g : F.factors) {
      for (int m = 0; m < g.multiplicity; ++m) back = back * g.factor;
      degrees += g.multiplicity * g.factor.degree();
      // Irreducible factors stay irreducible when factored again.
      if (factor_rational(g.factor).factors.size() != 1) r.failures.push_back("case " + std::to_string(k) + ": reducible factor");
    }
    if (!(back == f) || degrees != f.degree()) r.failures.push_back("case " + std::to_string(k) + ": round trip");
  }
  return r;
}

/// Sturm counts against direct evaluation: roots are placed on a half-integer
/// grid, optionally times a positive-definite quadratic, so every real root
/// is a grid point and the grid count is exact.
inline PropertyResult sturm_property(int cases = 100, std::uint64_t seed = 9) {
  PropertyResult r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> root(-16, 16), shape(0, 2), pick(0, 1);
  for (int k = 0; k < cases; ++k, ++r.cases) {
    const int deg = 3 + pick(rng);
    QUniPoly f({Rational(1 + pick(rng))}, "x");
    int linear = deg;
    if (shape(rng) == 0) {
      // Quadratic with no real roots: x^2 + b x + c with b^2 < 4c.
      int b = root(rng) % 5, c = b * b / 4 + 1 + pick(rng);
      f = f * QUniPoly({Rational(c), Rational(b), Rational(1)}, "x");
      linear -= 2;
    }
    for (int i = 0; i < linear; ++i) f = f * QUniPoly({Rational(-root(rng), 2), Rational(1)}, "x");
    int grid = 0;
    for (int t = -40; t <= 40; ++t)
      if (f.evaluate(Rational(t, 4)) == 0) ++grid;
    int lo_hi = 0;
    for (int t = 1; t <= 40; ++t)
      if (f.evaluate(Rational(t, 4)) == 0) ++lo_hi;
    int total = sturm_count(f), positive = sturm_count(f, {Rational(0), Rational(10)});
    if (total != grid || positive != lo_hi)
      r.failures.push_back("case " + std::to_string(k) + ": sturm " + std::to_string(total) + "/" +
                           std::to_string(positive) + " vs grid " + std::to_string(grid) + "/" + std::to_string(lo_hi));
  }
  return r;
}

}  // namespace qssa::testing

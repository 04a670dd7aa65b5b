#pragma once

// Solvability certification for eliminated polynomials: rational
// specialization, factorization over Q, exact classification up to degree
// 4, Dedekind cycle-type sampling and S_n / A_n insolvability witnesses.

#include "qssa/factor.hpp"
#include "qssa/groups.hpp"
#include "qssa/ideal.hpp"

#include <numeric>
#include <random>

namespace qssa {

struct Specialization {
  std::vector<std::string> symbols;
  std::vector<Rational> values;  // parallel to symbols, all positive
  std::uint64_t seed = 0;
  long range = 10000;
};

/// Uniform draws p/q with p, q in {1..range}, deterministic per seed.
inline Specialization sample_specialization(const std::vector<std::string>& symbols, std::uint64_t seed,
                                            long range = 10000) {
  if (range < 1) throw DomainError("specialization range must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(1, range);
  Specialization s{symbols, {}, seed, range};
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    long p = d(rng), q = d(rng);
    Rational v(p, q);
    v.canonicalize();
    s.values.push_back(v);
  }
  return s;
}

inline std::string to_string(const Specialization& s) {
  std::string out;
  for (std::size_t i = 0; i < s.symbols.size(); ++i)
    out += (i ? ", " : "") + s.symbols[i] + "=" + s.values[i].get_str();
  return out;
}

/// Raised when a denominator vanishes; carries the symbols it involves.
struct SpecializationError : DomainError {
  std::vector<std::string> symbols;
  SpecializationError(const std::string& msg, std::vector<std::string> syms)
      : DomainError(msg), symbols(std::move(syms)) {}
};

namespace detail {

inline Rational specialize_coef(const RatFunc& c, const Specialization& s) {
  Rational d = c.den().evaluate(s.values);
  if (d == 0) {
    std::vector<std::string> syms;
    for (auto i : c.den().support()) syms.push_back(i < s.symbols.size() ? s.symbols[i] : "?");
    std::string msg = "denominator vanishes under specialization (symbols:";
    for (auto& x : syms) msg += " " + x;
    throw SpecializationError(msg + ")", syms);
  }
  Rational r = c.num().evaluate(s.values) / d;
  r.canonicalize();
  return r;
}

}  // namespace detail

inline QUniPoly specialize(const UniPoly<RatFunc>& f, const Specialization& s) {
  std::vector<Rational> c;
  for (auto& x : f.coeffs()) c.push_back(detail::specialize_coef(x, s));
  return QUniPoly(std::move(c), f.var());
}

inline QPoly specialize(const IntermediatePoly& f, const Specialization& s) {
  return f.map_coefficients<Rational>([&](const RatFunc& c) { return detail::specialize_coef(c, s); });
}

struct SpecializedIdeal {
  Ideal<Rational> ideal;
  GroebnerBasis<Rational> basis;
  bool staircase_preserved = false;
};

/// Substitute into the generators, recompute the GB under `ord`, and compare
/// leading monomials with the generic GB.
inline SpecializedIdeal specialize(const Ideal<RatFunc>& I, const GroebnerBasis<RatFunc>& generic,
                                   const Specialization& s, Budget& budget = Budget::unlimited()) {
  SpecializedIdeal out;
  out.ideal.space = I.space;
  for (auto& g : I.gens) out.ideal.gens.push_back(specialize(g, s));
  out.basis = buchberger(out.ideal.gens, generic.order, budget);
  std::vector<Exponents> a, b;
  for (auto& g : generic.elements) a.push_back(leading_exponents(g, generic.order));
  for (auto& g : out.basis.elements) b.push_back(leading_exponents(g, out.basis.order));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  out.staircase_preserved = a == b;
  return out;
}

inline SpecializedIdeal specialize(const Ideal<RatFunc>& I, const Specialization& s, const MonomialOrder& ord,
                                   Budget& budget = Budget::unlimited()) {
  return specialize(I, buchberger(I.gens, ord, budget), s, budget);
}

/// Specialize, resampling on vanishing denominators or degree drop.
inline std::pair<QUniPoly, Specialization> specialize_generic(const UniPoly<RatFunc>& f,
                                                              const std::vector<std::string>& symbols,
                                                              std::uint64_t seed, long range, int attempts = 32) {
  for (int a = 0; a < attempts; ++a) {
    auto s = sample_specialization(symbols, seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(a), range);
    try {
      auto g = specialize(f, s);
      if (g.degree() == f.degree()) return {g, s};
    } catch (const SpecializationError&) {
    }
  }
  throw DomainError("no admissible specialization found");
}

// ---------------------------------------------------------------------------
// Dedekind sampling

struct PrimeWitness {
  modp::u64 prime = 0;
  CycleType cycle_type;
};

/// Cycle types of f modulo the first m primes >= 5 not dividing lc(f) or
/// disc(f).
inline std::vector<PrimeWitness> dedekind_sample(const QUniPoly& f, int m = 200, std::uint64_t seed = 0,
                                                 modp::u64 prime_bound = 1000000) {
  if (f.degree() < 1) throw DomainError("Dedekind sampling needs a nonconstant polynomial");
  ZPoly z = zp::from_rational(f);
  auto sq = squarefree_decomposition(f);
  if (sq.size() != 1 || sq[0].second != 1 || factor_squarefree_z(z).size() != 1)
    throw DomainError("Dedekind sampling needs an irreducible squarefree polynomial");
  std::vector<PrimeWitness> out;
  for (modp::u64 p = 5; static_cast<int>(out.size()) < m; p = modp::next_prime(p + 1)) {
    if (p > prime_bound) throw DomainError("fewer usable primes than requested below the prime bound");
    if (!zp::good_prime(z, p)) continue;
    auto fs = modp::factor_squarefree(zp::reduce(z, p), p, seed ^ p);
    CycleType t;
    for (auto& g : fs) t.push_back(modp::degree(g));
    std::sort(t.rbegin(), t.rend());
    out.push_back({p, t});
  }
  return out;
}

inline std::map<CycleType, int> tally(const std::vector<PrimeWitness>& w) {
  std::map<CycleType, int> m;
  for (auto& x : w) ++m[x.cycle_type];
  return m;
}

// ---------------------------------------------------------------------------
// Degree <= 4

namespace detail {

inline bool is_rational_square(const Rational& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

/// Discriminant of the monic associate: (-1)^(n(n-1)/2) Res(f, f'), with the
/// resultant from the Euclidean recurrence.
inline Rational discriminant(const QUniPoly& f) {
  QUniPoly g = f.monic();
  const int n = g.degree();
  auto res = [](QUniPoly a, QUniPoly b) {
    Rational r(1);
    while (b.degree() > 0) {
      auto rem = a.divmod(b).second;
      if (rem.is_zero()) return Rational(0);
      if ((a.degree() * b.degree()) % 2) r = -r;
      Rational l = b.lc();
      for (int i = 0; i < a.degree() - rem.degree(); ++i) r *= l;
      a = b;
      b = rem;
    }
    if (b.is_zero()) return Rational(0);
    Rational l = b.lc();
    for (int i = 0; i < a.degree(); ++i) r *= l;
    return r;
  };
  Rational d = res(g, g.derivative());
  if ((n * (n - 1) / 2) % 2) d = -d;
  d.canonicalize();
  return d;
}

inline std::vector<Rational> rational_roots(const QUniPoly& f) {
  std::vector<Rational> roots;
  for (auto& rf : factor_rational(f).factors)
    if (rf.factor.degree() == 1) {
      Rational r = -rf.factor.coeff(0) / rf.factor.coeff(1);
      r.canonicalize();
      roots.push_back(r);
    }
  return roots;
}

}  // namespace detail

inline Rational discriminant(const QUniPoly& f) { return detail::discriminant(f); }

struct SmallDegreeClass {
  std::string label;
  std::string alt_label;
  std::optional<QUniPoly> resolvent;
  Rational discriminant;
  bool discriminant_square = false;
};

inline SmallDegreeClass classify_deg_le_4(const QUniPoly& f) {
  const int n = f.degree();
  if (n < 1 || n > 4) throw DomainError("classification needs degree 1 to 4");
  auto F = factor_rational(f);
  if (F.factors.size() != 1 || F.factors[0].multiplicity != 1)
    throw DomainError("classification needs an irreducible polynomial");
  SmallDegreeClass out;
  auto set = [&](const std::string& l) {
    out.label = l;
    out.alt_label = find_group(n, l)->alt_name;
  };
  if (n == 1) {
    set("e");
    return out;
  }
  out.discriminant = detail::discriminant(f);
  out.discriminant_square = detail::is_rational_square(out.discriminant);
  if (n == 2) {
    set("C2");
    return out;
  }
  if (n == 3) {
    set(out.discriminant_square ? "C3" : "S3");
    return out;
  }
  QUniPoly g = f.monic();
  const Rational a = g.coeff(3), b = g.coeff(2), c = g.coeff(1), d = g.coeff(0);
  QUniPoly R({-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, Rational(1)}, "y");
  out.resolvent = R;
  auto roots = detail::rational_roots(R);
  if (roots.empty()) {
    set(out.discriminant_square ? "A4" : "S4");
  } else if (roots.size() >= 2) {
    set("V4");
  } else {
    // Kappe-Warren: C4 iff both quadratics split over Q(sqrt(disc)).
    const Rational r = roots[0];
    auto splits_over = [&](const Rational& D) {
      return D == 0 || detail::is_rational_square(D) || detail::is_rational_square(D * out.discriminant);
    };
    Rational D1 = r * r - 4 * d, D2 = a * a - 4 * (b - r);
    set(splits_over(D1) && splits_over(D2) ? "C4" : "D4-order8");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Insolvability

struct InsolvabilityCertificate {
  QUniPoly factor;
  int degree = 0;
  std::string group;  // "S_n" or "A_n or S_n"
  std::string route;  // "transposition" or "jordan"
  std::optional<PrimeWitness> n_cycle;     // irreducibility corroboration
  PrimeWitness primitivity;                // prime q-cycle with q > n/2 (absent for prime n)
  PrimeWitness generator;                  // transposition or small prime cycle
  std::vector<PrimeWitness> witnesses;     // distinct primes used
  bool verified = false;
};

namespace detail {

/// Prime q such that some power of an element of this type is a q-cycle, with
/// the predicate choosing admissible q.
inline std::optional<int> pure_prime_cycle(const CycleType& t, auto&& admissible) {
  for (int q : t) {
    if (q < 2 || !modp::is_prime(static_cast<modp::u64>(q)) || !admissible(q)) continue;
    if (std::count(t.begin(), t.end(), q) != 1) continue;
    bool ok = true;
    for (int o : t)
      if (o != q && o % q == 0) ok = false;
    if (ok) return q;
  }
  return std::nullopt;
}

inline bool gives_transposition(const CycleType& t) {
  if (std::count(t.begin(), t.end(), 2) != 1) return false;
  for (int o : t)
    if (o != 2 && o % 2 == 0) return false;
  return true;
}

/// Recompute the factorization mod p and check the product equals f mod p.
inline bool verify_witness(const ZPoly& f, const PrimeWitness& w) {
  auto fp = zp::reduce(f, w.prime);
  auto fs = modp::factor_squarefree(fp, w.prime, 0xc0ffee ^ w.prime);
  modp::Poly prod{modp::reduce(f.back(), w.prime)};
  CycleType t;
  for (auto& g : fs) {
    prod = modp::mul(prod, g, w.prime);
    t.push_back(modp::degree(g));
  }
  std::sort(t.rbegin(), t.rend());
  return prod == fp && t == w.cycle_type;
}

}  // namespace detail

/// Witness for Gal(g) containing A_n, for an irreducible g of degree >= 5.
inline std::optional<InsolvabilityCertificate> certify_factor_insolvable(const QUniPoly& g, int primes = 200,
                                                                          std::uint64_t seed = 0) {
  const int n = g.degree();
  if (n < 5) return std::nullopt;
  auto sample = dedekind_sample(g, primes, seed);
  InsolvabilityCertificate c;
  c.factor = g;
  c.degree = n;
  const bool n_prime = modp::is_prime(static_cast<modp::u64>(n));
  std::optional<PrimeWitness> prim, prim_strict, trans, jordan;
  for (auto& w : sample) {
    if (!c.n_cycle && w.cycle_type.size() == 1) c.n_cycle = w;
    if (!prim_strict && detail::pure_prime_cycle(w.cycle_type, [n](int q) { return 2 * q > n && q < n - 2; }))
      prim_strict = w;
    if (!prim && detail::pure_prime_cycle(w.cycle_type, [n](int q) { return 2 * q > n; })) prim = w;
    if (!trans && detail::gives_transposition(w.cycle_type)) trans = w;
    if (!jordan && detail::pure_prime_cycle(w.cycle_type, [n](int q) { return q <= n - 3; })) jordan = w;
  }
  if (prim_strict) prim = prim_strict;
  if (!n_prime && !prim) return std::nullopt;
  if (trans) {
    c.group = "S" + std::to_string(n);
    c.route = "transposition";
    c.generator = *trans;
  } else if (jordan) {
    c.group = "A" + std::to_string(n) + " or S" + std::to_string(n);
    c.route = "jordan";
    c.generator = *jordan;
  } else {
    return std::nullopt;
  }
  if (prim) c.primitivity = *prim;
  std::vector<PrimeWitness> ws;
  for (auto* w : {c.n_cycle ? &*c.n_cycle : nullptr, prim ? &c.primitivity : nullptr, &c.generator})
    if (w && std::none_of(ws.begin(), ws.end(), [&](auto& x) { return x.prime == w->prime; })) ws.push_back(*w);
  // Guarantee two distinct witness primes.
  for (auto& w : sample) {
    if (ws.size() >= 2) break;
    if (std::none_of(ws.begin(), ws.end(), [&](auto& x) { return x.prime == w.prime; })) ws.push_back(w);
  }
  c.witnesses = ws;
  ZPoly z = zp::from_rational(g);
  c.verified = std::all_of(ws.begin(), ws.end(), [&](auto& w) { return detail::verify_witness(z, w); });
  if (!c.verified) return std::nullopt;
  return c;
}

/// First insolvable irreducible factor of f, if any.
inline std::optional<InsolvabilityCertificate> certify_insolvable(const QUniPoly& f, int primes = 200,
                                                                   std::uint64_t seed = 0) {
  for (auto& rf : factor_rational(f).factors)
    if (auto c = certify_factor_insolvable(rf.factor, primes, seed)) return c;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verdicts over the function field

enum class SolvabilityStatus { SolvableCertified, InsolvableCertified, Evidence };

inline const char* to_string(SolvabilityStatus s) {
  switch (s) {
    case SolvabilityStatus::SolvableCertified: return "SolvableCertified";
    case SolvabilityStatus::InsolvableCertified: return "InsolvableCertified";
    case SolvabilityStatus::Evidence: return "Evidence";
  }
  return "?";
}

struct FactorReport {
  int degree = 0;
  int multiplicity = 1;
  std::string label;        // empty when no identification
  std::string alt_label;
  std::string label_source;  // "exact-specialized", "cycle-type-evidence"
  std::vector<std::string> consistent_groups;
  std::vector<PrimeWitness> witnesses;
  std::map<CycleType, int> cycle_types;
};

struct SolvabilityVerdict {
  SolvabilityStatus status = SolvabilityStatus::Evidence;
  std::string degree_argument;  // set for SolvableCertified
  std::optional<InsolvabilityCertificate> certificate;
  int certified_specializations = 0;  // specializations with an insolvability witness
  std::optional<std::string> group_label;
  std::vector<FactorReport> factors;
  std::vector<std::uint64_t> seeds;
  std::vector<std::vector<int>> patterns;  // factor degrees per seed
  int primes_used = 0;
  std::string specialization;  // the specialization behind `factors`
};

struct GaloisOptions {
  std::uint64_t seed = 1;
  int seeds = 3;
  int primes = 200;
  long range = 10000;
};

namespace detail {

inline std::vector<FactorReport> describe_factors(const Factorization& F, const GaloisOptions& o) {
  std::vector<FactorReport> out;
  for (auto& rf : F.factors) {
    FactorReport r;
    r.degree = rf.factor.degree();
    r.multiplicity = rf.multiplicity;
    if (r.degree <= 4) {
      auto c = classify_deg_le_4(rf.factor);
      r.label = c.label;
      r.alt_label = c.alt_label;
      r.label_source = "exact-specialized";
      if (r.degree >= 2) {
        auto ws = dedekind_sample(rf.factor, std::min(o.primes, 50), o.seed);
        r.cycle_types = tally(ws);
      }
    } else {
      auto ws = dedekind_sample(rf.factor, o.primes, o.seed);
      r.cycle_types = tally(ws);
      auto m = best_match(r.degree, r.cycle_types);
      if (m.group) {
        r.label = m.group->name;
        r.alt_label = m.group->alt_name;
        r.label_source = "cycle-type-evidence";
        r.consistent_groups = m.consistent;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

/// Specialize under several seeds; certify solvable by degree, insolvable
/// by Dedekind witnesses, or report cycle-type evidence.
inline SolvabilityVerdict solvability_verdict(const UniPoly<RatFunc>& f, const std::vector<std::string>& symbols,
                                              const GaloisOptions& o = {}) {
  if (f.is_zero()) throw DomainError("solvability of the zero polynomial");
  SolvabilityVerdict v;
  std::vector<std::pair<QUniPoly, Specialization>> specs;
  std::vector<Factorization> facs;
  const int nseeds = std::max(3, o.seeds);
  for (int i = 0; i < nseeds; ++i) {
    auto sp = specialize_generic(f, symbols, o.seed + static_cast<std::uint64_t>(i), o.range);
    v.seeds.push_back(sp.second.seed);
    facs.push_back(factor_rational(sp.first));
    v.patterns.push_back(factor_degrees(facs.back()));
    specs.push_back(std::move(sp));
  }
  // Coarsest specialization describes the factors.
  std::size_t best = 0;
  for (std::size_t i = 1; i < facs.size(); ++i)
    if (facs[i].factors.size() < facs[best].factors.size()) best = i;
  v.specialization = to_string(specs[best].second);
  v.factors = detail::describe_factors(facs[best], o);
  v.primes_used = o.primes;

  const bool stable = std::all_of(v.patterns.begin(), v.patterns.end(), [&](auto& p) { return p == v.patterns[0]; });
  const bool small = std::all_of(v.patterns.begin(), v.patterns.end(),
                                 [](auto& p) { return p.empty() || p.front() <= 4; });
  if (stable && small) {
    v.status = SolvabilityStatus::SolvableCertified;
    v.degree_argument = "every irreducible factor has degree at most 4 at " + std::to_string(nseeds) +
                        " specializations with a stable pattern";
  } else {
    int hits = 0;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      auto c = certify_insolvable(specs[i].first, o.primes, o.seed);
      if (c) {
        ++hits;
        if (!v.certificate) v.certificate = c;
      }
      if (hits >= 2) break;
    }
    v.certified_specializations = hits;
    if (v.certificate) v.status = SolvabilityStatus::InsolvableCertified;
  }
  if (v.certificate) {
    v.group_label = v.certificate->group;
  } else if (v.factors.size() == 1 && !v.factors[0].label.empty()) {
    v.group_label = v.factors[0].label;
  }
  return v;
}

struct FactorShape {
  std::vector<int> pattern;                   // coarsest observed
  std::map<std::vector<int>, int> tally;      // pattern -> count
};

/// Factor-degree multisets over `samples` specializations; the coarsest
/// (fewest factors, then most frequent) is returned.
inline FactorShape generic_factor_shape(const UniPoly<RatFunc>& f, const std::vector<std::string>& symbols,
                                        int samples = 5, std::uint64_t seed = 1, long range = 10000) {
  if (f.is_zero()) throw DomainError("factor shape of the zero polynomial");
  FactorShape out;
  for (int i = 0; i < samples; ++i) {
    auto sp = specialize_generic(f, symbols, seed + static_cast<std::uint64_t>(i), range);
    ++out.tally[factor_degrees(factor_rational(sp.first))];
  }
  const std::vector<int>* best = nullptr;
  int best_count = 0;
  for (auto& [p, k] : out.tally)
    if (!best || p.size() < best->size() || (p.size() == best->size() && k > best_count)) {
      best = &p;
      best_count = k;
    }
  out.pattern = *best;
  return out;
}

}  // namespace qssa

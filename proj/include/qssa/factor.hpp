#pragma once

// Factorization of univariate polynomials over Q: squarefree split,
// factorization modulo a good prime, Hensel lifting to a modulus above
// the Mignotte bound, and Zassenhaus subset recombination.

#include "qssa/modp.hpp"
#include "qssa/unipoly.hpp"

#include <cmath>

namespace qssa {

/// Dense integer polynomial, coeffs[i] multiplies x^i.
using ZPoly = std::vector<Integer>;

namespace zp {

inline void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}
inline ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}
inline ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}
inline ZPoly scale(const ZPoly& a, const Integer& c) {
  ZPoly r(a);
  for (auto& x : r) x *= c;
  trim(r);
  return r;
}

/// Reduce coefficients into [0, m).
inline ZPoly mod(ZPoly a, const Integer& m) {
  for (auto& x : a) {
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  }
  trim(a);
  return a;
}

/// Symmetric representatives in (-m/2, m/2].
inline ZPoly symmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& x : a) {
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (x > half) x -= m;
  }
  trim(a);
  return a;
}

/// Division by a monic polynomial modulo m.
inline std::pair<ZPoly, ZPoly> divmod_monic(ZPoly a, const ZPoly& b, const Integer& m) {
  a = mod(std::move(a), m);
  if (a.size() < b.size()) return {ZPoly{}, a};
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  const long db = static_cast<long>(b.size()) - 1;
  for (long k = static_cast<long>(a.size()) - 1; k >= db; --k) {
    Integer c = a[k];
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    q[k - db] = c;
    if (c != 0)
      for (long j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  return {mod(q, m), mod(a, m)};
}

/// Exact division over Z; nullopt when b does not divide a.
inline std::optional<ZPoly> divide_exact(ZPoly a, const ZPoly& b) {
  trim(a);
  if (b.empty()) throw DomainError("division by zero polynomial");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  const long db = static_cast<long>(b.size()) - 1;
  for (long k = static_cast<long>(a.size()) - 1; k >= db; --k) {
    if (a[k] == 0) continue;
    if (!mpz_divisible_p(a[k].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), a[k].get_mpz_t(), b.back().get_mpz_t());
    q[k - db] = c;
    for (long j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) return std::nullopt;
  trim(q);
  return q;
}

inline Integer content(const ZPoly& f) {
  Integer g(0);
  for (auto& x : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

/// Primitive with positive leading coefficient.
inline ZPoly primitive(ZPoly f) {
  trim(f);
  if (f.empty()) return f;
  Integer c = content(f);
  if (f.back() < 0) c = -c;
  for (auto& x : f) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return f;
}

inline modp::Poly reduce(const ZPoly& f, modp::u64 p) {
  modp::Poly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = modp::reduce(f[i], p);
  modp::trim(r);
  return r;
}

inline ZPoly lift(const modp::Poly& f) {
  ZPoly r;
  for (auto c : f) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

inline ZPoly from_rational(const QUniPoly& f) {
  Integer L(1);
  for (auto& c : f.coeffs()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  ZPoly r;
  for (auto& c : f.coeffs()) r.push_back(c.get_num() * (L / c.get_den()));
  return primitive(std::move(r));
}

inline QUniPoly to_rational(const ZPoly& f, const std::string& var = "x") {
  std::vector<Rational> c;
  for (auto& x : f) c.emplace_back(x);
  return QUniPoly(std::move(c), var);
}

inline Integer max_norm(const ZPoly& f) {
  Integer m(0);
  for (auto& x : f)
    if (abs(x) > m) m = abs(x);
  return m;
}

/// Discriminant-free test: f mod p keeps its degree and is squarefree.
inline bool good_prime(const ZPoly& f, modp::u64 p) {
  if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) return false;
  return modp::is_squarefree(reduce(f, p), p);
}

}  // namespace zp

namespace detail {

/// One quadratic Hensel step (f = g*h mod m, s*g + t*h = 1 mod m, h monic)
/// to modulus m^2.
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m) {
  using namespace zp;
  Integer m2 = m * m;
  ZPoly e = mod(sub(f, mul(g, h)), m2);
  auto [q, r] = divmod_monic(mul(s, e), h, m2);
  ZPoly g2 = mod(add(add(g, mul(t, e)), mul(q, g)), m2);
  ZPoly h2 = mod(add(h, r), m2);
  ZPoly b = mod(sub(add(mul(s, g2), mul(t, h2)), ZPoly{Integer(1)}), m2);
  auto [c, d] = divmod_monic(mul(s, b), h2, m2);
  s = mod(sub(s, d), m2);
  t = mod(sub(sub(t, mul(t, b)), mul(c, g2)), m2);
  g = std::move(g2);
  h = std::move(h2);
}

/// Lift f = lc(f) * prod(factors) mod p to modulus p^(2^k) >= target.
/// Factors are monic mod p; returns monic lifts mod M.
inline std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<modp::Poly>& factors, modp::u64 p,
                                      const Integer& M, int rounds) {
  using namespace zp;
  if (factors.size() == 1) {
    // f / lc(f) mod M.
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), M.get_mpz_t());
    return {mod(scale(f, inv), M)};
  }
  const std::size_t half = factors.size() / 2;
  std::vector<modp::Poly> A(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<modp::Poly> B(factors.begin() + static_cast<long>(half), factors.end());
  modp::Poly pa{modp::reduce(f.back(), p)}, pb{1};
  for (auto& a : A) pa = modp::mul(pa, a, p);
  for (auto& b : B) pb = modp::mul(pb, b, p);
  auto [gg, sp, tp] = modp::xgcd(pa, pb, p);
  if (gg.size() != 1) throw DomainError("Hensel lifting needs coprime factors");
  ZPoly g = lift(pa), h = lift(pb), s = lift(sp), t = lift(tp);
  Integer m(static_cast<unsigned long>(p));
  for (int k = 0; k < rounds; ++k) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  auto left = hensel_lift(g, A, p, M, rounds);
  auto right = hensel_lift(h, B, p, M, rounds);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

inline std::vector<modp::u64> candidate_primes(const ZPoly& f, int how_many) {
  std::vector<modp::u64> out;
  for (modp::u64 p = 3; out.size() < static_cast<std::size_t>(how_many) && p < 100000; p = modp::next_prime(p + 1))
    if (zp::good_prime(f, p)) out.push_back(p);
  return out;
}

}  // namespace detail

/// Irreducible factors over Z of a primitive squarefree polynomial.
inline std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
  using namespace zp;
  const int n = degree(f);
  if (n <= 1) return {primitive(f)};
  if (f[0] == 0) {
    // x divides f.
    std::size_t k = 0;
    while (f[k] == 0) ++k;
    ZPoly rest(f.begin() + static_cast<long>(k), f.end());
    auto out = factor_squarefree_z(rest);
    out.push_back(ZPoly{Integer(0), Integer(1)});
    return out;
  }
  auto primes = detail::candidate_primes(f, 5);
  if (primes.empty()) throw DomainError("no good prime for factorization");
  modp::u64 p = 0;
  std::vector<modp::Poly> modular;
  for (auto q : primes) {
    auto fs = modp::factor_squarefree(reduce(f, q), q);
    if (p == 0 || fs.size() < modular.size()) {
      p = q;
      modular = std::move(fs);
    }
    if (modular.size() == 1) break;
  }
  if (modular.size() == 1) return {primitive(f)};

  // Mignotte-style bound on b * (coefficients of any factor).
  const Integer b = abs(f.back());
  Integer norm2sq(0);
  for (auto& x : f) norm2sq += x * x;
  Integer norm2;
  mpz_sqrt(norm2.get_mpz_t(), norm2sq.get_mpz_t());
  norm2 += 1;
  Integer bound = b * norm2;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  Integer M(static_cast<unsigned long>(p));
  int rounds = 0;
  while (M <= 2 * bound) {
    M *= M;
    ++rounds;
  }
  auto lifted = detail::hensel_lift(f, modular, p, M, rounds);

  // Zassenhaus recombination.
  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<ZPoly> T = lifted;
  std::size_t s = 1;
  while (2 * s <= T.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      const Integer lc = rest.back();
      ZPoly g{lc};
      for (auto i : idx) g = mod(mul(g, T[i]), M);
      g = primitive(symmetric(g, M));
      if (auto q = divide_exact(rest, g)) {
        result.push_back(g);
        rest = primitive(*q);
        std::vector<ZPoly> nt;
        for (std::size_t i = 0, k = 0; i < T.size(); ++i) {
          if (k < s && idx[k] == i) {
            ++k;
            continue;
          }
          nt.push_back(T[i]);
        }
        T = std::move(nt);
        found = true;
        break;
      }
      // Next subset of size s in lexicographic order.
      long i = static_cast<long>(s) - 1;
      while (i >= 0 && idx[i] == T.size() - s + static_cast<std::size_t>(i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (degree(rest) > 0) result.push_back(primitive(rest));
  return result;
}

struct RationalFactor {
  QUniPoly factor;  // primitive integer coefficients, positive leading coefficient
  int multiplicity;
};

struct Factorization {
  Rational unit;  // f = unit * prod factor^multiplicity
  std::vector<RationalFactor> factors;
};

/// Squarefree decomposition (Yun): pairs (monic part, multiplicity).
inline std::vector<std::pair<QUniPoly, int>> squarefree_decomposition(const QUniPoly& f) {
  std::vector<std::pair<QUniPoly, int>> out;
  if (f.degree() <= 0) return out;
  QUniPoly fp = f.derivative();
  QUniPoly a = gcd(f, fp);
  QUniPoly b = f.divmod(a).first;
  QUniPoly c = fp.divmod(a).first;
  QUniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    b = b.divmod(a).first;
    c = d.divmod(a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

/// Complete factorization over Q. Factors sorted by (degree, coefficients).
inline Factorization factor_rational(const QUniPoly& f, int max_degree = 12) {
  if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
  if (f.degree() > max_degree) throw DomainError("degree above the supported factorization range");
  Factorization out;
  QUniPoly prod({Rational(1)}, f.var());
  for (auto& [part, mult] : squarefree_decomposition(f)) {
    for (auto& g : factor_squarefree_z(zp::from_rational(part))) {
      auto q = zp::to_rational(g, f.var());
      out.factors.push_back({q, mult});
      for (int k = 0; k < mult; ++k) prod = prod * q;
    }
  }
  out.unit = f.lc() / (prod.is_zero() ? Rational(1) : prod.lc());
  std::sort(out.factors.begin(), out.factors.end(), [](const RationalFactor& a, const RationalFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    for (int i = a.factor.degree(); i >= 0; --i) {
      auto x = a.factor.coeff(static_cast<std::size_t>(i)), y = b.factor.coeff(static_cast<std::size_t>(i));
      if (x != y) return x < y;
    }
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

/// Degrees of the irreducible factors, descending, with multiplicity.
inline std::vector<int> factor_degrees(const Factorization& F) {
  std::vector<int> d;
  for (auto& f : F.factors)
    for (int k = 0; k < f.multiplicity; ++k) d.push_back(f.factor.degree());
  std::sort(d.rbegin(), d.rend());
  return d;
}

}  // namespace qssa

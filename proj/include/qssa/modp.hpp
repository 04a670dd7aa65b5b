#pragma once

// Dense univariate polynomials over a prime field Z/pZ with p < 2^63.
// Coefficient vectors are little-endian (index = degree) and trimmed.

#include "qssa/core.hpp"

#include <random>
#include <tuple>
#include <utility>

namespace qssa::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Poly = std::vector<u64>;

inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

inline u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 inv(u64 a, u64 p) {
  if (a % p == 0) throw DomainError("modular inverse of zero");
  return pow(a, p - 2, p);
}

inline u64 reduce(const Integer& z, u64 p) {
  Integer r = z % Integer(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return static_cast<u64>(r.get_ui());
}

/// Image of a rational number; throws when the denominator vanishes mod p.
inline u64 reduce(const Rational& q, u64 p) {
  u64 n = reduce(q.get_num(), p), d = reduce(q.get_den(), p);
  return mul(n, inv(d, p), p);
}

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  trim(r);
  return r;
}

inline Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

inline Poly scale(const Poly& a, u64 c, u64 p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], c, p);
  trim(r);
  return r;
}

inline Poly monic(const Poly& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), p), p);
}

/// Returns (quotient, remainder).
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, u64 p) {
  if (b.empty()) throw DomainError("polynomial division by zero mod p");
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  const u64 lead_inv = inv(b.back(), p);
  const long db = static_cast<long>(b.size()) - 1;
  for (long k = static_cast<long>(a.size()) - 1; k >= db; --k) {
    u64 c = mul(a[k], lead_inv, p);
    q[k - db] = c;
    if (c)
      for (long j = 0; j <= db; ++j) a[k - db + j] = sub(a[k - db + j], mul(c, b[j], p), p);
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline Poly rem(const Poly& a, const Poly& b, u64 p) { return divmod(a, b, p).second; }

/// Monic gcd.
inline Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
inline std::tuple<Poly, Poly, Poly> xgcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  Poly s0{1}, s1{}, t0{}, t1{1};
  while (!b.empty()) {
    auto [q, r] = divmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) return {a, s0, t0};
  u64 li = inv(a.back(), p);
  return {scale(a, li, p), scale(s0, li, p), scale(t0, li, p)};
}

inline Poly derivative(const Poly& f, u64 p) {
  if (f.size() <= 1) return {};
  Poly r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = mul(f[i], i % p, p);
  trim(r);
  return r;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) { return rem(mul(a, b, p), m, p); }

/// base^e mod m.
inline Poly powmod(Poly base, Integer e, const Poly& m, u64 p) {
  Poly r{1};
  r = rem(r, m, p);
  base = rem(base, m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mulmod(r, base, m, p);
    base = mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

inline bool is_squarefree(const Poly& f, u64 p) {
  Poly g = gcd(f, derivative(f, p), p);
  return g.size() <= 1;
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (d, product of all irreducible factors of degree d).
inline std::vector<std::pair<int, Poly>> distinct_degree(Poly f, u64 p) {
  std::vector<std::pair<int, Poly>> out;
  f = monic(f, p);
  Poly x{0, 1};
  Poly h = x;
  int d = 0;
  while (degree(f) >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) {
      out.emplace_back(d, g);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.emplace_back(degree(f), f);
  return out;
}

/// Equal-degree splitting (Cantor–Zassenhaus), p odd. `f` is monic,
/// squarefree, and a product of irreducibles of degree d.
inline void equal_degree(const Poly& f, int d, u64 p, std::mt19937_64& rng, std::vector<Poly>& out) {
  const int n = degree(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer q_d;
  mpz_ui_pow_ui(q_d.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  Integer e = (q_d - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  for (;;) {
    Poly a(n);
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly g = gcd(a, f, p);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
    Poly b = powmod(a, e, f, p);
    b = sub(b, Poly{1}, p);
    g = gcd(b, f, p);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

/// Complete factorization of a squarefree polynomial into monic
/// irreducibles (p odd). Factors sorted by (degree, coefficients).
inline std::vector<Poly> factor_squarefree(const Poly& f, u64 p, std::uint64_t seed = 0x5eed) {
  std::mt19937_64 rng(seed ^ p);
  std::vector<Poly> out;
  for (auto& [d, g] : distinct_degree(f, p)) equal_degree(g, d, p, rng, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

/// Degrees of irreducible factors of a squarefree polynomial, descending.
inline std::vector<int> factor_degrees(const Poly& f, u64 p) {
  std::vector<int> parts;
  for (auto& [d, g] : distinct_degree(f, p))
    for (int k = 0; k < degree(g) / d; ++k) parts.push_back(d);
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline u64 next_prime(u64 n) {
  while (!is_prime(n)) ++n;
  return n;
}

}  // namespace qssa::modp

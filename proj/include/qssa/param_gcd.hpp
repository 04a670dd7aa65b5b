#pragma once

// GCD in Z[params].
//
// Strategy: strip integer and monomial content, peel off variables that
// occur in only one operand, then pick a main variable v and compare
// univariate images mod a 61-bit prime. If the image gcd is constant (and
// the leading coefficients survive the evaluation) the true gcd has
// degree 0 in v, so it is the gcd of the v-coefficients. Otherwise try
// trial division, and fall back to the recursive primitive PRS.

#include "qssa/param_poly.hpp"

#include <random>

namespace qssa {

namespace detail {

inline constexpr modp::u64 kGcdPrime = (1ull << 61) - 1;

inline std::mt19937_64& gcd_rng() {
  thread_local std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  return rng;
}

inline ParamPoly normalize_sign(ParamPoly p) {
  if (!p.is_zero() && p.leading_coefficient() < 0) return -p;
  return p;
}

/// Image of `a` as a univariate polynomial in v, other variables at pt.
inline modp::Poly univariate_image(const ParamPoly& a, std::size_t v, const std::vector<modp::u64>& pt) {
  const auto p = kGcdPrime;
  modp::Poly out(a.degree_in(v) + 1, 0);
  for (auto& t : a.terms()) {
    modp::u64 c = modp::reduce(t.coef, p);
    for (std::size_t i = 0; i < t.exp.size() && c; ++i)
      if (i != v && t.exp[i]) c = modp::mul(c, modp::pow(pt[i], t.exp[i], p), p);
    auto e = exponent_at(t.exp, v);
    out[e] = modp::add(out[e], c, p);
  }
  return out;  // not trimmed on purpose: caller checks the leading entry
}

}  // namespace detail

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

/// gcd of a list, stopping early once it becomes 1.
inline ParamPoly gcd_list(std::vector<ParamPoly> xs) {
  std::sort(xs.begin(), xs.end(), [](const ParamPoly& x, const ParamPoly& y) { return x.size() < y.size(); });
  ParamPoly g;
  for (auto& x : xs) {
    if (x.is_zero()) continue;
    g = g.is_zero() ? detail::normalize_sign(x) : gcd(g, x);
    if (g.is_one()) break;
  }
  return g;
}

namespace detail {

using Rec = std::vector<ParamPoly>;  // coefficients in the main variable

inline void trim_rec(Rec& r) {
  while (!r.empty() && r.back().is_zero()) r.pop_back();
}

inline ParamPoly rec_content(const Rec& r) { return gcd_list(r); }

inline Rec rec_primitive(Rec r) {
  ParamPoly c = normalize_sign(rec_content(r));
  if (r.back().leading_coefficient() < 0) c = -c;
  if (!c.is_one())
    for (auto& x : r) x = x / c;
  return r;
}

inline Rec rec_prem(Rec a, const Rec& b) {
  const ParamPoly& lb = b.back();
  while (a.size() >= b.size()) {
    ParamPoly la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = c * lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= la * b[j];
    trim_rec(a);
    if (a.empty()) break;
  }
  return a;
}

/// Primitive PRS gcd of two polynomials with the same support, in variable v.
inline ParamPoly prs_gcd(const ParamPoly& a, const ParamPoly& b, std::size_t v) {
  Rec A = a.coefficients_in(v), B = b.coefficients_in(v);
  if (A.size() < B.size()) std::swap(A, B);
  ParamPoly ca = rec_content(A), cb = rec_content(B);
  ParamPoly c = gcd(ca, cb);
  for (auto& x : A) x = x / ca;
  for (auto& x : B) x = x / cb;
  while (B.size() > 1) {
    Rec R = rec_prem(A, B);
    A = std::move(B);
    if (R.empty()) {
      B.clear();
      break;
    }
    B = rec_primitive(std::move(R));
  }
  if (!B.empty()) return c;  // B is a nonzero constant in v: coprime parts
  A = rec_primitive(std::move(A));
  return normalize_sign(ParamPoly::from_coefficients_in(v, A) * c);
}

/// Both inputs primitive, free of monomial content, nonconstant.
inline ParamPoly gcd_core(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_constant() || b.is_constant()) return ParamPoly(1);
  if (a == b || a == -b) return normalize_sign(a);

  auto sa = a.support(), sb = b.support();
  const std::size_t n = std::max(sa.size(), sb.size());
  sa.resize(n, false);
  sb.resize(n, false);
  for (std::size_t u = 0; u < n; ++u) {
    if (sa[u] == sb[u]) continue;
    const ParamPoly& with = sa[u] ? a : b;
    const ParamPoly& without = sa[u] ? b : a;
    auto xs = with.coefficients_in(u);
    xs.push_back(without);
    return gcd_list(std::move(xs));
  }

  std::size_t v = n;
  int best = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (!sa[u]) continue;
    int d = std::max(a.degree_in(u), b.degree_in(u));
    if (v == n || d < best) {
      v = u;
      best = d;
    }
  }

  // Modular degree bound for the gcd in v.
  int bound = std::min(a.degree_in(v), b.degree_in(v));
  auto& rng = gcd_rng();
  std::uniform_int_distribution<modp::u64> dist(1, kGcdPrime - 1);
  std::vector<modp::u64> pt(n);
  for (int attempt = 0, good = 0; attempt < 6 && good < 2 && bound > 0; ++attempt) {
    for (auto& x : pt) x = dist(rng);
    auto ia = univariate_image(a, v, pt), ib = univariate_image(b, v, pt);
    if (ia.back() == 0 || ib.back() == 0) continue;
    ++good;
    bound = std::min(bound, modp::degree(modp::gcd(ia, ib, kGcdPrime)));
  }
  if (bound == 0) {
    auto xs = a.coefficients_in(v);
    auto ys = b.coefficients_in(v);
    xs.insert(xs.end(), ys.begin(), ys.end());
    return gcd_list(std::move(xs));
  }
  if (bound == b.degree_in(v) && a.size() >= b.size()) {
    if (a.divide_exact(b)) return normalize_sign(b);
  }
  if (bound == a.degree_in(v) && b.size() >= a.size()) {
    if (b.divide_exact(a)) return normalize_sign(a);
  }
  return prs_gcd(a, b, v);
}

}  // namespace detail

/// Greatest common divisor in Z[params], including the integer content,
/// normalized to a positive leading coefficient. gcd(0, 0) = 0.
inline ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return detail::normalize_sign(b);
  if (b.is_zero()) return detail::normalize_sign(a);
  Integer ia = a.content(), ib = b.content(), ig;
  mpz_gcd(ig.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return ParamPoly(ig);
  Exponents ma = a.monomial_content(), mb = b.monomial_content();
  Exponents mg = gcd_exponents(ma, mb);
  ParamPoly A = a.divided_by(ia).divided_by_monomial(ma);
  ParamPoly B = b.divided_by(ib).divided_by_monomial(mb);
  ParamPoly g = detail::gcd_core(A, B);
  return detail::normalize_sign(g.scaled(ig).times_monomial(mg));
}

/// The spec-level operation: primitive gcd with positive leading coefficient.
inline ParamPoly param_gcd(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly g = gcd(a, b);
  if (g.is_zero()) return g;
  return g.divided_by(g.content());
}

}  // namespace qssa

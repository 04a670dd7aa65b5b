#pragma once

// Dense univariate polynomials over a field (RatFunc or Rational).
// coeffs[i] multiplies x^i; the vector is trimmed.

#include "qssa/poly.hpp"

#include <optional>

namespace qssa {

template <class K>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<K> coeffs, std::string var = "x") : c_(std::move(coeffs)), var_(std::move(var)) { trim_(); }

  const std::vector<K>& coeffs() const { return c_; }
  const std::string& var() const { return var_; }
  void set_var(std::string v) { var_ = std::move(v); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const K& lc() const { return c_.back(); }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(r), a.var_);
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return UniPoly(std::move(r), a.var_);
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var_);
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return UniPoly(std::move(r), a.var_);
  }

  UniPoly scaled(const K& s) const {
    std::vector<K> r(c_);
    for (auto& x : r) x = x * s;
    return UniPoly(std::move(r), var_);
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return scaled(K(1) / lc());
  }

  UniPoly derivative() const {
    std::vector<K> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * K(static_cast<long>(i)));
    return UniPoly(std::move(r), var_);
  }

  /// (quotient, remainder)
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& b) const {
    if (b.is_zero()) throw DomainError("univariate division by zero");
    std::vector<K> r(c_);
    if (r.size() < b.c_.size()) return {UniPoly({}, var_), *this};
    std::vector<K> q(r.size() - b.c_.size() + 1, K(0));
    const K inv = K(1) / b.lc();
    for (long k = static_cast<long>(r.size()) - 1; k >= static_cast<long>(b.c_.size()) - 1; --k) {
      if (is_zero_coef(r[k])) continue;
      K f = r[k] * inv;
      const std::size_t shift = k - (b.c_.size() - 1);
      q[shift] = f;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[shift + j] = r[shift + j] - f * b.c_[j];
    }
    return {UniPoly(std::move(q), var_), UniPoly(std::move(r), var_)};
  }

  K evaluate(const K& x) const {
    K acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  std::string to_string(const VarSpace* s = nullptr) const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (is_zero_coef(c_[i])) continue;
      if (!first) out += " + ";
      out += coef_to_string(c_[i], s);
      if (i) out += "*" + var_;
      if (i > 1) out += "^" + std::to_string(i);
      first = false;
    }
    return out;
  }

 private:
  std::vector<K> c_;
  std::string var_ = "x";

  void trim_() {
    while (!c_.empty() && is_zero_coef(c_.back())) c_.pop_back();
  }
};

using QUniPoly = UniPoly<Rational>;

/// Monic gcd.
template <class K>
UniPoly<K> gcd(UniPoly<K> a, UniPoly<K> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Product of the distinct irreducible factors, monic.
template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& f) {
  if (f.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  if (f.degree() == 0) return UniPoly<K>({K(1)}, f.var());
  auto g = gcd(f, f.derivative());
  return f.divmod(g).first.monic();
}

/// Univariate polynomial from a multivariate one that only involves v.
template <class K>
UniPoly<K> to_univariate(const Poly<K>& p, std::size_t v, std::string name = "x") {
  if (!p.is_univariate_in(v)) throw DomainError("polynomial is not univariate");
  std::vector<K> c(std::max(0, p.degree_in(v)) + 1, K(0));
  for (auto& t : p.terms()) c[exponent_at(t.exp, v)] = t.coef;
  return UniPoly<K>(std::move(c), std::move(name));
}

template <class K>
Poly<K> from_univariate(const UniPoly<K>& u, std::size_t v, SpacePtr space = nullptr) {
  std::vector<Term<K>> out;
  for (std::size_t i = 0; i < u.coeffs().size(); ++i)
    if (!is_zero_coef(u.coeffs()[i])) out.push_back({unit_exponents(v, static_cast<std::uint16_t>(i)), u.coeffs()[i]});
  return Poly<K>::from_terms(std::move(out), std::move(space));
}

/// Real-root interval for sturm_count: (lo, hi], either end may be open-ended.
struct RootInterval {
  std::optional<Rational> lo, hi;
};

namespace detail {

inline int sign_at(const QUniPoly& f, const std::optional<Rational>& x, bool at_plus_inf) {
  if (!x) {
    // Sign at +inf or -inf.
    int s = sgn(f.lc());
    if (!at_plus_inf && f.degree() % 2 == 1) s = -s;
    return s;
  }
  return sgn(f.evaluate(*x));
}

inline int variations(const std::vector<QUniPoly>& seq, const std::optional<Rational>& x, bool plus_inf) {
  int count = 0, prev = 0;
  for (auto& p : seq) {
    int s = sign_at(p, x, plus_inf);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace detail

/// Number of distinct real roots of f in (lo, hi].
inline int sturm_count(const QUniPoly& f, const RootInterval& iv = {}) {
  if (f.is_zero()) throw DomainError("sturm_count of the zero polynomial");
  QUniPoly g = squarefree_part(f);
  if (g.degree() <= 0) return 0;
  std::vector<QUniPoly> seq{g, g.derivative()};
  while (seq.back().degree() > 0) {
    auto r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(r.scaled(Rational(-1)));
  }
  int vlo = detail::variations(seq, iv.lo, false);
  int vhi = detail::variations(seq, iv.hi, true);
  return vlo - vhi;
}

}  // namespace qssa

#pragma once

// Sparse polynomials in the intermediate variables over a coefficient
// field K (RatFunc for the generic ground field, Rational after
// specialization). Terms are stored in descending lex order with
// variable 0 the most significant, which is also the print order.

#include "qssa/ratfunc.hpp"

#include <memory>

namespace qssa {

/// Names of the polynomial variables and of the parameter symbols.
struct VarSpace {
  std::vector<std::string> vars;
  std::vector<std::string> params;

  friend bool operator==(const VarSpace&, const VarSpace&) = default;
};

using SpacePtr = std::shared_ptr<const VarSpace>;

inline bool is_zero_coef(const RatFunc& c) { return c.is_zero(); }
inline bool is_zero_coef(const Rational& c) { return c == 0; }
inline bool is_one_coef(const RatFunc& c) { return c.is_one(); }
inline bool is_one_coef(const Rational& c) { return c == 1; }

inline std::string coef_to_string(const RatFunc& c, const VarSpace* s) {
  static const std::vector<std::string> none;
  return c.to_string(s ? s->params : none);
}
inline std::string coef_to_string(const Rational& c, const VarSpace*) { return "(" + c.get_str() + ")"; }

template <class K>
struct Term {
  Exponents exp;
  K coef;
};

template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(SpacePtr space) : space_(std::move(space)) {}

  static Poly constant(const K& c, SpacePtr space = nullptr) {
    Poly p(std::move(space));
    if (!is_zero_coef(c)) p.terms_.push_back({Exponents{}, c});
    return p;
  }
  static Poly variable(std::size_t i, SpacePtr space = nullptr) { return monomial(unit_exponents(i), K(1), std::move(space)); }
  static Poly monomial(Exponents e, K c, SpacePtr space = nullptr) {
    Poly p(std::move(space));
    trim(e);
    if (!is_zero_coef(c)) p.terms_.push_back({std::move(e), std::move(c)});
    return p;
  }
  static Poly from_terms(std::vector<Term<K>> terms, SpacePtr space = nullptr) {
    Poly p(std::move(space));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<Term<K>>& terms() const { return terms_; }
  const SpacePtr& space() const { return space_; }
  void set_space(SpacePtr s) { space_ = std::move(s); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.empty()); }
  std::size_t size() const { return terms_.size(); }

  int total_degree() const {
    int d = terms_.empty() ? -1 : 0;
    for (auto& t : terms_) d = std::max<int>(d, static_cast<int>(qssa::total_degree(t.exp)));
    return d;
  }
  int degree_in(std::size_t v) const {
    int d = terms_.empty() ? -1 : 0;
    for (auto& t : terms_) d = std::max<int>(d, exponent_at(t.exp, v));
    return d;
  }
  std::size_t var_bound() const {
    std::size_t n = 0;
    for (auto& t : terms_) n = std::max(n, t.exp.size());
    return n;
  }
  bool mentions(std::size_t v) const {
    for (auto& t : terms_)
      if (exponent_at(t.exp, v)) return true;
    return false;
  }
  /// True when every term involves only variable v.
  bool is_univariate_in(std::size_t v) const {
    for (auto& t : terms_)
      for (std::size_t i = 0; i < t.exp.size(); ++i)
        if (i != v && t.exp[i]) return false;
    return true;
  }

  K coefficient(const Exponents& e) const {
    for (auto& t : terms_)
      if (t.exp == e) return t.coef;
    return K(0);
  }
  K constant_term() const {
    if (!terms_.empty() && terms_.back().exp.empty()) return terms_.back().coef;
    return K(0);
  }

  Poly operator-() const {
    Poly r(*this);
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    SpacePtr s = join_space(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(s);
    std::vector<Term<K>> out;
    out.reserve(a.size() * b.size());
    for (auto& x : a.terms_)
      for (auto& y : b.terms_) out.push_back({add_exponents(x.exp, y.exp), x.coef * y.coef});
    return from_terms(std::move(out), s);
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly scaled(const K& c) const {
    if (is_zero_coef(c)) return Poly(space_);
    Poly r(*this);
    for (auto& t : r.terms_) t.coef = t.coef * c;
    return r;
  }

  Poly pow(unsigned e) const {
    Poly r = constant(K(1), space_), b(*this);
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].exp == b.terms_[i].exp) || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
    return true;
  }

  /// Substitute x_v := value (a polynomial).
  Poly substitute(std::size_t v, const Poly& value) const {
    Poly out(space_);
    std::vector<Poly> powers{constant(K(1), space_)};
    for (auto& t : terms_) {
      auto e = exponent_at(t.exp, v);
      while (powers.size() <= e) powers.push_back(powers.back() * value);
      Exponents rest = t.exp;
      if (v < rest.size()) rest[v] = 0;
      out += monomial(rest, t.coef, space_) * powers[e];
    }
    return out;
  }

  /// Set the variables flagged in `zero` to 0.
  Poly set_zero(const std::vector<bool>& zero) const {
    std::vector<Term<K>> out;
    for (auto& t : terms_) {
      bool keep = true;
      for (std::size_t i = 0; i < t.exp.size() && i < zero.size(); ++i)
        if (zero[i] && t.exp[i]) keep = false;
      if (keep) out.push_back(t);
    }
    Poly r(space_);
    r.terms_ = std::move(out);  // order preserved
    return r;
  }

  /// Apply a coefficient map (e.g. specialization); result renormalized.
  template <class L, class F>
  Poly<L> map_coefficients(F&& f, SpacePtr space = nullptr) const {
    std::vector<Term<L>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) out.push_back({t.exp, f(t.coef)});
    return Poly<L>::from_terms(std::move(out), space ? space : space_);
  }

  /// Divide by the leading coefficient (in the stored lex order).
  Poly monic() const {
    if (is_zero()) return *this;
    if (is_one_coef(terms_[0].coef)) return *this;
    K inv = K(1) / terms_[0].coef;
    return scaled(inv);
  }

  std::string to_string() const { return to_string(space_.get()); }
  std::string to_string(const VarSpace* s) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      if (k) out += " + ";
      const auto& t = terms_[k];
      out += coef_to_string(t.coef, s);
      for (std::size_t i = 0; i < t.exp.size(); ++i) {
        if (!t.exp[i]) continue;
        out += "*";
        out += (s && i < s->vars.size()) ? s->vars[i] : "x" + std::to_string(i);
        if (t.exp[i] > 1) out += "^" + std::to_string(t.exp[i]);
      }
    }
    return out;
  }

 private:
  std::vector<Term<K>> terms_;
  SpacePtr space_;

  static SpacePtr join_space(const Poly& a, const Poly& b) {
    if (a.space_ && b.space_ && a.space_ != b.space_ && !(*a.space_ == *b.space_))
      throw DomainError("polynomials from different variable universes");
    return a.space_ ? a.space_ : b.space_;
  }

  void normalize() {
    for (auto& t : terms_) trim(t.exp);
    std::sort(terms_.begin(), terms_.end(),
              [](const Term<K>& x, const Term<K>& y) { return compare_lex(x.exp, y.exp) > 0; });
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exp == t.exp) {
        out.back().coef = out.back().coef + t.coef;
      } else {
        if (!out.empty() && is_zero_coef(out.back().coef)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && is_zero_coef(out.back().coef)) out.pop_back();
    terms_ = std::move(out);
  }

  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    Poly r(join_space(a, b));
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c = i == a.size() ? -1 : j == b.size() ? 1 : compare_lex(a.terms_[i].exp, b.terms_[j].exp);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(b.terms_[j++]);
        if (subtract) r.terms_.back().coef = -r.terms_.back().coef;
      } else {
        K s = a.terms_[i].coef;
        if (subtract) s -= b.terms_[j].coef;
        else s += b.terms_[j].coef;
        if (!is_zero_coef(s)) r.terms_.push_back({a.terms_[i].exp, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }
};

using IntermediatePoly = Poly<RatFunc>;
using QPoly = Poly<Rational>;

}  // namespace qssa

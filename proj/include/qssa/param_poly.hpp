#pragma once

// Sparse multivariate polynomials with integer coefficients in the
// parameter symbols (rate constants, slow concentrations, conservation
// constants). Terms are kept in descending graded-lex order.

#include "qssa/core.hpp"
#include "qssa/modp.hpp"

#include <optional>
#include <span>
#include <sstream>

namespace qssa {

struct ParamTerm {
  Exponents exp;
  Integer coef;
};

class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(long c) {  // NOLINT(google-explicit-constructor): integer literals are polynomials
    if (c != 0) terms_.push_back({Exponents{}, Integer(c)});
  }
  explicit ParamPoly(const Integer& c) {
    if (c != 0) terms_.push_back({Exponents{}, c});
  }

  static ParamPoly variable(std::size_t index) { return monomial(unit_exponents(index), Integer(1)); }

  static ParamPoly monomial(Exponents e, Integer c) {
    ParamPoly p;
    trim(e);
    if (c != 0) p.terms_.push_back({std::move(e), std::move(c)});
    return p;
  }

  static ParamPoly from_terms(std::vector<ParamTerm> terms) {
    ParamPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<ParamTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.empty()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].exp.empty() && terms_[0].coef == 1; }
  bool is_monomial() const { return terms_.size() == 1; }

  const Integer& leading_coefficient() const { return terms_.front().coef; }
  const Exponents& leading_exponents() const { return terms_.front().exp; }

  Integer constant_term() const {
    if (!terms_.empty() && terms_.back().exp.empty()) return terms_.back().coef;
    return Integer(0);
  }

  /// One past the largest variable index that occurs.
  std::size_t var_bound() const {
    std::size_t n = 0;
    for (auto& t : terms_) n = std::max(n, t.exp.size());
    return n;
  }

  int degree_in(std::size_t var) const {
    int d = terms_.empty() ? -1 : 0;
    for (auto& t : terms_) d = std::max<int>(d, exponent_at(t.exp, var));
    return d;
  }

  int total_degree() const {
    int d = terms_.empty() ? -1 : 0;
    for (auto& t : terms_) d = std::max<int>(d, static_cast<int>(qssa::total_degree(t.exp)));
    return d;
  }

  std::vector<bool> support() const {
    std::vector<bool> s(var_bound(), false);
    for (auto& t : terms_)
      for (std::size_t i = 0; i < t.exp.size(); ++i)
        if (t.exp[i]) s[i] = true;
    return s;
  }

  ParamPoly operator-() const {
    ParamPoly r(*this);
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) { return merge(a, b, false); }
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return merge(a, b, true); }

  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0]);
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0]);
    std::vector<ParamTerm> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (auto& s : a.terms_)
      for (auto& t : b.terms_) out.push_back({add_exponents(s.exp, t.exp), s.coef * t.coef});
    return from_terms(std::move(out));
  }

  ParamPoly& operator+=(const ParamPoly& b) { return *this = *this + b; }
  ParamPoly& operator-=(const ParamPoly& b) { return *this = *this - b; }
  ParamPoly& operator*=(const ParamPoly& b) { return *this = *this * b; }

  ParamPoly scaled(const Integer& c) const {
    if (c == 0) return {};
    ParamPoly r(*this);
    for (auto& t : r.terms_) t.coef *= c;
    return r;
  }

  ParamPoly pow(unsigned e) const {
    ParamPoly r(1), b(*this);
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].coef != b.terms_[i].coef || a.terms_[i].exp != b.terms_[i].exp) return false;
    return true;
  }

  /// Positive gcd of the integer coefficients (0 for the zero polynomial).
  Integer content() const {
    Integer g(0);
    for (auto& t : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// Exact division of every coefficient by an integer.
  ParamPoly divided_by(const Integer& c) const {
    ParamPoly r(*this);
    for (auto& t : r.terms_) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
    return r;
  }

  /// Largest monomial dividing every term.
  Exponents monomial_content() const {
    if (terms_.empty()) return {};
    Exponents g = terms_[0].exp;
    for (auto& t : terms_) {
      g = gcd_exponents(g, t.exp);
      if (g.empty()) break;
    }
    return g;
  }

  ParamPoly divided_by_monomial(const Exponents& m) const {
    if (m.empty()) return *this;
    ParamPoly r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({sub_exponents(t.exp, m), t.coef});
    return r;
  }

  ParamPoly times_monomial(const Exponents& m) const {
    if (m.empty()) return *this;
    ParamPoly r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({add_exponents(t.exp, m), t.coef});
    return r;
  }

  /// Exact quotient a / d when d divides a in Z[params], else nullopt.
  std::optional<ParamPoly> divide_exact(const ParamPoly& d) const {
    if (d.is_zero()) throw DomainError("division by zero parameter polynomial");
    if (is_zero()) return ParamPoly{};
    if (d.terms_.size() == 1) {
      const auto& dt = d.terms_[0];
      ParamPoly q;
      q.terms_.reserve(terms_.size());
      for (auto& t : terms_) {
        if (!divides_exponents(dt.exp, t.exp) || !mpz_divisible_p(t.coef.get_mpz_t(), dt.coef.get_mpz_t()))
          return std::nullopt;
        Integer c;
        mpz_divexact(c.get_mpz_t(), t.coef.get_mpz_t(), dt.coef.get_mpz_t());
        q.terms_.push_back({sub_exponents(t.exp, dt.exp), std::move(c)});
      }
      return q;
    }
    // Cheap necessary conditions before the full division.
    if (total_degree() < d.total_degree()) return std::nullopt;
    if (!divides_exponents(d.terms_.back().exp, terms_.back().exp)) return std::nullopt;
    std::vector<ParamTerm> quotient;
    ParamPoly r(*this);
    const auto& lt = d.terms_.front();
    while (!r.is_zero()) {
      const auto& rt = r.terms_.front();
      if (!divides_exponents(lt.exp, rt.exp) || !mpz_divisible_p(rt.coef.get_mpz_t(), lt.coef.get_mpz_t()))
        return std::nullopt;
      ParamTerm q{sub_exponents(rt.exp, lt.exp), Integer()};
      mpz_divexact(q.coef.get_mpz_t(), rt.coef.get_mpz_t(), lt.coef.get_mpz_t());
      r = r - d.times_term(q);
      quotient.push_back(std::move(q));
    }
    ParamPoly out;
    out.terms_ = std::move(quotient);  // generated in descending order
    return out;
  }

  ParamPoly operator/(const ParamPoly& d) const {
    auto q = divide_exact(d);
    if (!q) throw DomainError("inexact parameter polynomial division");
    return std::move(*q);
  }

  /// Coefficients with respect to one variable: result[i] multiplies var^i.
  std::vector<ParamPoly> coefficients_in(std::size_t var) const {
    int d = degree_in(var);
    std::vector<std::vector<ParamTerm>> buckets(d < 0 ? 0 : d + 1);
    for (auto& t : terms_) {
      auto e = exponent_at(t.exp, var);
      Exponents rest = t.exp;
      if (var < rest.size()) {
        rest[var] = 0;
        trim(rest);
      }
      buckets[e].push_back({std::move(rest), t.coef});
    }
    std::vector<ParamPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) {
      ParamPoly p;
      p.terms_ = std::move(b);  // removing one variable keeps grlex-relative order only up to ties
      p.sort_terms();
      out.push_back(std::move(p));
    }
    return out;
  }

  static ParamPoly from_coefficients_in(std::size_t var, const std::vector<ParamPoly>& coeffs) {
    std::vector<ParamTerm> out;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      for (auto& t : coeffs[i].terms_) {
        Exponents e = t.exp;
        if (i) {
          if (e.size() <= var) e.resize(var + 1, 0);
          e[var] = static_cast<std::uint16_t>(e[var] + i);
        }
        out.push_back({std::move(e), t.coef});
      }
    return from_terms(std::move(out));
  }

  /// Substitute rational values for every parameter.
  Rational evaluate(std::span<const Rational> values) const {
    Rational sum(0);
    for (auto& t : terms_) {
      Rational term(t.coef);
      for (std::size_t i = 0; i < t.exp.size(); ++i) {
        if (!t.exp[i]) continue;
        if (i >= values.size()) throw DomainError("missing parameter value");
        Rational v;
        mpz_pow_ui(v.get_num_mpz_t(), values[i].get_num_mpz_t(), t.exp[i]);
        mpz_pow_ui(v.get_den_mpz_t(), values[i].get_den_mpz_t(), t.exp[i]);
        term *= v;
      }
      sum += term;
    }
    return sum;
  }

  /// Evaluate modulo p at the given residues.
  modp::u64 evaluate_mod(std::span<const modp::u64> values, modp::u64 p) const {
    modp::u64 sum = 0;
    for (auto& t : terms_) {
      modp::u64 term = modp::reduce(t.coef, p);
      for (std::size_t i = 0; i < t.exp.size() && term; ++i)
        if (t.exp[i]) term = modp::mul(term, modp::pow(values[i], t.exp[i], p), p);
      sum = modp::add(sum, term, p);
    }
    return sum;
  }

  /// Partially substitute: parameters with a value in `values` are
  /// replaced; others kept. Used to restrict a ground field.
  ParamPoly substitute(std::span<const std::optional<Integer>> values) const {
    std::vector<ParamTerm> out;
    for (auto& t : terms_) {
      ParamTerm n{t.exp, t.coef};
      for (std::size_t i = 0; i < t.exp.size(); ++i)
        if (i < values.size() && values[i] && t.exp[i]) {
          Integer v;
          mpz_pow_ui(v.get_mpz_t(), values[i]->get_mpz_t(), t.exp[i]);
          n.coef *= v;
          n.exp[i] = 0;
        }
      trim(n.exp);
      out.push_back(std::move(n));
    }
    return from_terms(std::move(out));
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
      Integer c = t.coef;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      c = abs(c);
      bool wrote = false;
      if (c != 1 || t.exp.empty()) {
        os << c.get_str();
        wrote = true;
      }
      for (std::size_t i = 0; i < t.exp.size(); ++i) {
        if (!t.exp[i]) continue;
        if (wrote) os << "*";
        os << (i < names.size() ? names[i] : "p" + std::to_string(i));
        if (t.exp[i] > 1) os << "^" << t.exp[i];
        wrote = true;
      }
      first = false;
    }
    return os.str();
  }

 private:
  std::vector<ParamTerm> terms_;

  ParamPoly times_term(const ParamTerm& s) const {
    ParamPoly r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({add_exponents(t.exp, s.exp), t.coef * s.coef});
    return r;
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(),
              [](const ParamTerm& a, const ParamTerm& b) { return compare_grlex(a.exp, b.exp) > 0; });
  }

  void normalize() {
    for (auto& t : terms_) trim(t.exp);
    sort_terms();
    std::vector<ParamTerm> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exp == t.exp) {
        out.back().coef += t.coef;
      } else {
        if (!out.empty() && out.back().coef == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coef == 0) out.pop_back();
    terms_ = std::move(out);
  }

  static ParamPoly merge(const ParamPoly& a, const ParamPoly& b, bool subtract) {
    ParamPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size())
        c = -1;
      else if (j == b.terms_.size())
        c = 1;
      else
        c = compare_grlex(a.terms_[i].exp, b.terms_[j].exp);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(b.terms_[j]);
        if (subtract) r.terms_.back().coef = -r.terms_.back().coef;
        ++j;
      } else {
        Integer s = subtract ? Integer(a.terms_[i].coef - b.terms_[j].coef) : Integer(a.terms_[i].coef + b.terms_[j].coef);
        if (s != 0) r.terms_.push_back({a.terms_[i].exp, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }
};

}  // namespace qssa

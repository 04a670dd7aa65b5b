#pragma once

// Elements of Q(params) as num/den over Z[params]. Canonical form:
// gcd(num, den) = 1 and den has positive leading coefficient, so equal
// fractions are equal representations.

#include "qssa/param_gcd.hpp"

namespace qssa {

class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RatFunc(const Integer& c) : num_(c), den_(1) {}
  explicit RatFunc(const Rational& q) : num_(q.get_num()), den_(q.get_den()) {}
  explicit RatFunc(ParamPoly num) : num_(std::move(num)), den_(1) {}
  RatFunc(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

  static RatFunc param(std::size_t index) { return RatFunc(ParamPoly::variable(index)); }

  /// Build from parts already known to be canonical.
  static RatFunc from_canonical(ParamPoly num, ParamPoly den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc operator-() const { return from_canonical(-num_, den_); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    ParamPoly g = gcd(a.den_, b.den_);
    if (g.is_one()) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    ParamPoly da = a.den_ / g, db = b.den_ / g;
    return RatFunc(a.num_ * db + b.num_ * da, a.den_ * db);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return from_canonical(a.num_ * b.num_, ParamPoly(1));
    // Cross-cancel so the product is canonical without a big gcd.
    ParamPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    ParamPoly n = (a.num_ / g1) * (b.num_ / g2);
    ParamPoly d = (a.den_ / g2) * (b.den_ / g1);
    return fix_sign(std::move(n), std::move(d));
  }

  RatFunc inverse() const {
    if (is_zero()) throw DomainError("inverse of zero rational function");
    return fix_sign(den_, num_);
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

  RatFunc pow(unsigned e) const { return from_canonical(num_.pow(e), den_.pow(e)); }

  /// Value at a rational point; throws DomainError if the denominator vanishes.
  Rational evaluate(std::span<const Rational> values) const {
    Rational d = den_.evaluate(values);
    if (d == 0) throw DomainError("denominator vanishes under specialization");
    Rational r = num_.evaluate(values) / d;
    r.canonicalize();
    return r;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (den_.is_one()) return "(" + num_.to_string(names) + ")";
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
  }

 private:
  ParamPoly num_, den_;

  static RatFunc fix_sign(ParamPoly n, ParamPoly d) {
    if (d.leading_coefficient() < 0) {
      n = -n;
      d = -d;
    }
    return from_canonical(std::move(n), std::move(d));
  }

  void canonicalize() {
    if (den_.is_zero()) throw DomainError("zero denominator");
    if (num_.is_zero()) {
      den_ = ParamPoly(1);
      return;
    }
    ParamPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    if (den_.leading_coefficient() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
};

}  // namespace qssa

// Shared helpers for the test suites: corpus loading and a small
// polynomial expression reader so expected values can be written inline.
#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include "qssa/qssa.hpp"

namespace qssa::testing {

inline std::string network_path(const std::string& name) { return std::string(QSSA_NETWORKS_DIR) + "/" + name + ".crn"; }

inline ParsedCrn load_network(const std::string& name) {
  std::ifstream in(network_path(name));
  if (!in) throw Error("missing network " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_crn(ss.str());
}

inline QssaIdeal network_ideal(const std::string& name) {
  auto p = load_network(name);
  return build_qssa_ideal(p.crn, p.intermediates);
}

/// Reads +, -, *, ^, / (by a constant), parentheses, integers, and names
/// from `space` (variables first, then parameters).
template <class K>
class ExprReader {
 public:
  ExprReader(std::string text, SpacePtr space) : s_(std::move(text)), sp_(std::move(space)) {}

  Poly<K> read() {
    auto p = sum();
    skip();
    if (i_ != s_.size()) throw Error("trailing input in '" + s_ + "'");
    return p;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  Poly<K> sum() {
    Poly<K> acc = accept('-') ? -product() : product();
    for (;;) {
      if (accept('+'))
        acc = acc + product();
      else if (accept('-'))
        acc = acc - product();
      else
        return acc;
    }
  }
  Poly<K> product() {
    Poly<K> acc = power();
    for (;;) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        auto d = power();
        if (!d.is_constant() || d.is_zero()) throw Error("division by a non-constant");
        K inv = K(1) / d.constant_term();
        acc = acc.scaled(inv);
      } else {
        return acc;
      }
    }
  }
  Poly<K> power() {
    auto b = atom();
    if (accept('^')) {
      skip();
      std::size_t j = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return b.pow(static_cast<unsigned>(std::stoul(s_.substr(j, i_ - j))));
    }
    return b;
  }
  Poly<K> atom() {
    if (accept('(')) {
      auto p = sum();
      if (!accept(')')) throw Error("expected ')' in '" + s_ + "'");
      return p;
    }
    if (accept('-')) return -atom();
    skip();
    std::size_t j = i_;
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return Poly<K>::constant(K(Integer(s_.substr(j, i_ - j))), sp_);
    }
    auto ident = [&](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; };
    while (i_ < s_.size() && ident(s_[i_])) ++i_;
    std::string name = s_.substr(j, i_ - j);
    if (name.empty()) throw Error("unexpected character in '" + s_ + "'");
    for (std::size_t v = 0; v < sp_->vars.size(); ++v)
      if (sp_->vars[v] == name) return Poly<K>::variable(v, sp_);
    if constexpr (std::is_same_v<K, RatFunc>)
      for (std::size_t k = 0; k < sp_->params.size(); ++k)
        if (sp_->params[k] == name) return Poly<K>::constant(RatFunc::param(k), sp_);
    throw Error("unknown symbol '" + name + "'");
  }

  std::string s_;
  SpacePtr sp_;
  std::size_t i_ = 0;
};

inline IntermediatePoly P(const SpacePtr& space, const std::string& text) {
  return ExprReader<RatFunc>(text, space).read();
}

inline SpacePtr uni_space(const std::string& var = "x") {
  return std::make_shared<const VarSpace>(VarSpace{{var}, {}});
}

/// Univariate polynomial over Q in x.
inline QUniPoly Q(const std::string& text) {
  auto sp = uni_space();
  auto p = ExprReader<Rational>(text, sp).read();
  if (p.is_zero()) return QUniPoly();
  return to_univariate(p, 0, "x");
}

/// Univariate polynomial over the parameters of `space` in variable v.
inline UniPoly<RatFunc> U(const SpacePtr& space, std::size_t v, const std::string& text) {
  return to_univariate(P(space, text), v, space->vars[v]);
}

inline SpacePtr make_test_space(std::vector<std::string> vars, std::vector<std::string> params) {
  return std::make_shared<const VarSpace>(VarSpace{std::move(vars), std::move(params)});
}

}  // namespace qssa::testing

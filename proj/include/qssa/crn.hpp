#pragma once

// Reaction networks: species, complexes, directed reactions with named
// rate constants, plus the line-oriented text format.
//
//   # comment
//   species: A, X, Y            (optional; fixes species order)
//   A -> 2 X @ k1
//   2X <-> 2Y @ k2, k_2
//   X + Y -> B                   (rate constant auto-named)
//   0 -> A                       (inflow)
//   intermediates: X, Y

#include "qssa/core.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string_view>

namespace qssa {

/// Stoichiometry: species index -> positive coefficient.
using Complex = std::map<std::size_t, std::uint32_t>;

struct Reaction {
  Complex reactants;
  Complex products;
  std::string rate;

  friend bool operator==(const Reaction&, const Reaction&) = default;
};

struct Crn {
  std::vector<std::string> species;
  std::vector<Reaction> reactions;

  std::optional<std::size_t> find_species(std::string_view name) const {
    for (std::size_t i = 0; i < species.size(); ++i)
      if (species[i] == name) return i;
    return std::nullopt;
  }
  std::size_t species_index(std::string_view name) const {
    auto i = find_species(name);
    if (!i) throw DomainError("unknown species '" + std::string(name) + "'");
    return *i;
  }

  friend bool operator==(const Crn&, const Crn&) = default;
};

/// Ordered subset of species indices.
using IntermediateSet = std::vector<std::size_t>;

struct ParsedCrn {
  Crn crn;
  IntermediateSet intermediates;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& msg)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg), line_(line), col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  std::size_t line_, col_;
};

namespace detail {

inline std::string normalize_middle_dot(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    // U+00B7 MIDDLE DOT (C2 B7) and U+22C5 DOT OPERATOR (E2 8B 85).
    if (static_cast<unsigned char>(s[i]) == 0xC2 && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0xB7) {
      out += '.';
      ++i;
    } else if (static_cast<unsigned char>(s[i]) == 0xE2 && i + 2 < s.size() &&
               static_cast<unsigned char>(s[i + 1]) == 0x8B && static_cast<unsigned char>(s[i + 2]) == 0x85) {
      out += '.';
      i += 2;
    } else {
      out += s[i];
    }
  }
  return out;
}

class LineLexer {
 public:
  LineLexer(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  std::size_t col() const { return pos_ + 1; }
  bool peek_is(std::string_view tok) {
    skip_ws();
    return s_.substr(pos_, tok.size()) == tok;
  }
  bool accept(std::string_view tok) {
    if (!peek_is(tok)) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col(), msg); }

  bool peek_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  bool peek_ident_start() {
    skip_ws();
    return pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]));
  }

  std::string ident(const char* what) {
    skip_ws();
    if (!peek_ident_start()) fail(std::string("expected ") + what);
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '.'))
      ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

  std::uint32_t integer() {
    skip_ws();
    std::size_t b = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > 0x7FFFFFFFull) {
        pos_ = b;
        fail("stoichiometric coefficient exceeds 2^31-1");
      }
      ++pos_;
    }
    return static_cast<std::uint32_t>(v);
  }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct RawReaction {
  std::vector<std::pair<std::string, std::uint32_t>> lhs, rhs;
  bool reversible = false;
  std::vector<std::string> rates;
  std::size_t line = 0, col = 0;
};

inline std::vector<std::pair<std::string, std::uint32_t>> parse_complex(LineLexer& lx) {
  std::vector<std::pair<std::string, std::uint32_t>> terms;
  if (lx.peek_digit()) {
    // "0" alone is the zero complex; "2X" / "2 X" is a term.
    std::size_t c = lx.col();
    std::uint32_t n = lx.integer();
    if (!lx.peek_ident_start()) {
      if (n != 0) throw ParseError(0, c, "");  // replaced by caller context
      return terms;
    }
    if (n == 0) lx.fail("zero stoichiometric coefficient");
    terms.emplace_back(lx.ident("species name"), n);
  } else {
    terms.emplace_back(lx.ident("species name or 0"), 1);
  }
  while (lx.accept("+")) {
    std::uint32_t n = 1;
    if (lx.peek_digit()) {
      n = lx.integer();
      if (n == 0) lx.fail("zero stoichiometric coefficient");
    }
    terms.emplace_back(lx.ident("species name"), n);
  }
  return terms;
}

inline std::vector<std::string> parse_name_list(LineLexer& lx, const char* what) {
  std::vector<std::string> out;
  if (lx.at_end()) return out;
  out.push_back(lx.ident(what));
  while (lx.accept(",")) out.push_back(lx.ident(what));
  if (!lx.at_end()) lx.fail("unexpected text after list");
  return out;
}

}  // namespace detail

inline ParsedCrn parse_crn(std::string_view input) {
  using namespace detail;
  std::string text = normalize_middle_dot(input);
  std::vector<RawReaction> raw;
  std::optional<std::vector<std::string>> declared_species;
  std::size_t species_line = 0;
  std::vector<std::string> intermediates;
  std::size_t inter_line = 0;

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    LineLexer lx(line, lineno);
    if (lx.at_end()) continue;
    if (lx.accept("intermediates:")) {
      if (inter_line) lx.fail("duplicate intermediates line");
      inter_line = lineno;
      intermediates = parse_name_list(lx, "intermediate species name");
      continue;
    }
    if (lx.accept("species:")) {
      if (declared_species) lx.fail("duplicate species line");
      species_line = lineno;
      declared_species = parse_name_list(lx, "species name");
      continue;
    }
    RawReaction r;
    r.line = lineno;
    r.col = lx.col();
    try {
      r.lhs = parse_complex(lx);
    } catch (const ParseError& e) {
      if (e.line() == 0) throw ParseError(lineno, e.column(), "expected '0' or a species term");
      throw;
    }
    if (lx.accept("<->"))
      r.reversible = true;
    else if (!lx.accept("->"))
      lx.fail("expected '->' or '<->'");
    try {
      r.rhs = parse_complex(lx);
    } catch (const ParseError& e) {
      if (e.line() == 0) throw ParseError(lineno, e.column(), "expected '0' or a species term");
      throw;
    }
    if (lx.accept("@")) {
      r.rates.push_back(lx.ident("rate constant name"));
      if (lx.accept(",")) r.rates.push_back(lx.ident("rate constant name"));
      if (!r.reversible && r.rates.size() == 2) lx.fail("irreversible reaction takes one rate constant");
      if (r.reversible && r.rates.size() == 1) lx.fail("'<->' requires two rate constants or none");
    }
    if (!lx.at_end()) lx.fail("unexpected text after reaction");
    raw.push_back(std::move(r));
  }
  if (raw.empty()) throw ParseError(lineno ? lineno : 1, 1, "no reactions");

  ParsedCrn out;
  Crn& crn = out.crn;
  if (declared_species) {
    std::set<std::string> seen;
    for (auto& s : *declared_species) {
      if (!seen.insert(s).second) throw ParseError(species_line, 1, "duplicate species '" + s + "'");
      crn.species.push_back(s);
    }
  }
  auto species_of = [&](const std::string& name, const RawReaction& r) {
    if (auto i = crn.find_species(name)) return *i;
    if (declared_species) throw ParseError(r.line, r.col, "species '" + name + "' not declared");
    crn.species.push_back(name);
    return crn.species.size() - 1;
  };
  auto to_complex = [&](const std::vector<std::pair<std::string, std::uint32_t>>& terms, const RawReaction& r) {
    Complex c;
    for (auto& [name, n] : terms) {
      auto& slot = c[species_of(name, r)];
      std::uint64_t sum = std::uint64_t(slot) + n;
      if (sum > 0x7FFFFFFFull) throw ParseError(r.line, r.col, "stoichiometric coefficient exceeds 2^31-1");
      slot = static_cast<std::uint32_t>(sum);
    }
    return c;
  };

  std::set<std::string> used;
  for (auto& r : raw)
    for (auto& k : r.rates)
      if (!used.insert(k).second) throw ParseError(r.line, r.col, "duplicate rate constant '" + k + "'");
  std::size_t next_auto = 1;
  auto auto_name = [&]() {
    for (;;) {
      std::string k = "k" + std::to_string(next_auto++);
      if (used.insert(k).second) return k;
    }
  };

  for (auto& r : raw) {
    Complex lhs = to_complex(r.lhs, r), rhs = to_complex(r.rhs, r);
    if (lhs == rhs) throw ParseError(r.line, r.col, "reactants equal products");
    std::string kf = r.rates.empty() ? auto_name() : r.rates[0];
    crn.reactions.push_back({lhs, rhs, kf});
    if (r.reversible) {
      std::string kr = r.rates.empty() ? auto_name() : r.rates[1];
      crn.reactions.push_back({rhs, lhs, kr});
    }
  }

  std::set<std::size_t> seen_q;
  for (auto& name : intermediates) {
    auto i = crn.find_species(name);
    if (!i) throw ParseError(inter_line, 1, "intermediate '" + name + "' is not a species");
    if (!seen_q.insert(*i).second) throw ParseError(inter_line, 1, "duplicate intermediate '" + name + "'");
    out.intermediates.push_back(*i);
  }
  return out;
}

inline std::string complex_to_string(const Crn& crn, const Complex& c) {
  if (c.empty()) return "0";
  std::string out;
  for (auto& [s, n] : c) {
    if (!out.empty()) out += " + ";
    if (n != 1) out += std::to_string(n) + " ";
    out += crn.species[s];
  }
  return out;
}

inline std::string reaction_to_string(const Crn& crn, const Reaction& r) {
  return complex_to_string(crn, r.reactants) + " -> " + complex_to_string(crn, r.products) + " @ " + r.rate;
}

/// Text form accepted by parse_crn; reversible pairs are printed split.
inline std::string print_crn(const Crn& crn, const IntermediateSet& q = {}) {
  std::string out = "species: ";
  for (std::size_t i = 0; i < crn.species.size(); ++i) out += (i ? ", " : "") + crn.species[i];
  out += "\n";
  for (auto& r : crn.reactions) out += reaction_to_string(crn, r) + "\n";
  if (!q.empty()) {
    out += "intermediates: ";
    for (std::size_t i = 0; i < q.size(); ++i) out += (i ? ", " : "") + crn.species[q[i]];
    out += "\n";
  }
  return out;
}

inline std::uint32_t complex_order(const Complex& c) {
  std::uint64_t n = 0;
  for (auto& [s, k] : c) n += k;
  return static_cast<std::uint32_t>(std::min<std::uint64_t>(n, 0xFFFFFFFFu));
}

inline bool involves(const Complex& c, const IntermediateSet& q) {
  for (auto s : q)
    if (c.count(s)) return true;
  return false;
}

/// Every reactant complex has total coefficient at most 2. With
/// `restricted`, only reactions consuming an intermediate are checked.
inline bool is_at_most_bimolecular(const Crn& crn, const IntermediateSet& q = {}, bool restricted = false) {
  for (auto& r : crn.reactions) {
    if (restricted && !involves(r.reactants, q)) continue;
    if (complex_order(r.reactants) > 2) return false;
  }
  return true;
}

inline std::vector<std::string> validate_intermediates(const Crn& crn, const IntermediateSet& q) {
  std::vector<std::string> warnings;
  for (auto s : q) {
    bool produced = false, consumed = false, present = false;
    for (auto& r : crn.reactions) {
      auto a = r.reactants.count(s) ? r.reactants.at(s) : 0u;
      auto b = r.products.count(s) ? r.products.at(s) : 0u;
      if (a || b) present = true;
      if (b > a) produced = true;
      if (a > b) consumed = true;
    }
    const auto& name = crn.species[s];
    if (!present) {
      warnings.push_back(name + " absent from all reactions");
      continue;
    }
    if (!produced) warnings.push_back(name + " never produced");
    if (!consumed) warnings.push_back(name + " never consumed");
  }
  return warnings;
}

}  // namespace qssa

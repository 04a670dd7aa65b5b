#pragma once

// Transitive permutation groups of small degree, generated by closure, with
// their cycle-type distributions. Degrees 1-7 are complete; degree 8 is a
// curated subset (the primitive groups plus a few imprimitive ones).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

namespace qssa {

using Perm = std::vector<std::uint8_t>;
using CycleType = std::vector<int>;  // parts in descending order

inline CycleType cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  CycleType t;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

inline std::string cycle_type_string(const CycleType& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

struct PermGroup {
  std::string name;        // "D4-order8", "S4xC2", ...
  std::string alt_name;  // other common name ("D8", "S4xZ2", ...)
  int degree = 0;
  std::size_t order = 0;
  bool solvable = true;
  std::map<CycleType, std::size_t> cycle_types;  // class sizes

  bool contains_type(const CycleType& t) const { return cycle_types.count(t) > 0; }
  double density(const CycleType& t) const {
    auto it = cycle_types.find(t);
    return it == cycle_types.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(order);
  }
};

namespace detail {

inline Perm compose(const Perm& a, const Perm& b) {  // apply b, then a
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline std::set<Perm> closure(const std::vector<Perm>& gens, int n) {
  Perm id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto& g : frontier)
      for (auto& s : gens) {
        Perm h = compose(s, g);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return seen;
}

/// All permutations of {0..n-1} mapping every block of `blocks` to a block.
inline std::set<Perm> stabilizer_of_blocks(int n, const std::set<std::set<int>>& blocks) {
  std::set<Perm> out;
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  do {
    bool ok = true;
    for (auto& b : blocks) {
      std::set<int> img;
      for (int x : b) img.insert(p[static_cast<std::size_t>(x)]);
      if (!blocks.count(img)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Perm from_map(int n, auto&& f) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(f(i));
  return p;
}

/// Cycle notation on 0-indexed points.
inline Perm cycles(int n, const std::vector<std::vector<int>>& cs) {
  Perm p = from_map(n, [](int i) { return i; });
  for (auto& c : cs)
    for (std::size_t i = 0; i < c.size(); ++i) p[static_cast<std::size_t>(c[i])] = static_cast<std::uint8_t>(c[(i + 1) % c.size()]);
  return p;
}

inline PermGroup make_group(std::string name, std::string alt_name, int n, const std::set<Perm>& elems,
                            bool solvable) {
  PermGroup g;
  g.name = std::move(name);
  g.alt_name = alt_name.empty() ? g.name : std::move(alt_name);
  g.degree = n;
  g.order = elems.size();
  g.solvable = solvable;
  for (auto& e : elems) ++g.cycle_types[cycle_type(e)];
  return g;
}

inline PermGroup gen_group(std::string name, std::string alt_name, int n, const std::vector<Perm>& gens,
                           bool solvable) {
  return make_group(std::move(name), std::move(alt_name), n, closure(gens, n), solvable);
}

inline Perm array_perm(std::initializer_list<int> xs) {
  Perm p;
  for (int x : xs) p.push_back(static_cast<std::uint8_t>(x));
  return p;
}

// F8 = F2[a]/(a^3 + a + 1), elements as 3-bit integers.
inline int f8_mul(int a, int b) {
  int r = 0;
  for (int i = 0; i < 3; ++i)
    if (b >> i & 1) r ^= a << i;
  for (int i = 4; i >= 3; --i)
    if (r >> i & 1) r ^= 0b1011 << (i - 3);
  return r;
}

inline std::vector<PermGroup> build_degree(int n) {
  std::vector<PermGroup> G;
  auto A = [](auto... xs) { return array_perm({xs...}); };
  auto shift = [n](int i) { return (i + 1) % n; };
  switch (n) {
    case 1: G.push_back(gen_group("e", "e", 1, {}, true)); break;
    case 2: G.push_back(gen_group("C2", "Z2", 2, {A(1, 0)}, true)); break;
    case 3:
      G.push_back(gen_group("C3", "Z3", 3, {A(1, 2, 0)}, true));
      G.push_back(gen_group("S3", "S3", 3, {A(1, 2, 0), A(1, 0, 2)}, true));
      break;
    case 4:
      G.push_back(gen_group("C4", "Z4", 4, {A(1, 2, 3, 0)}, true));
      G.push_back(gen_group("V4", "V4", 4, {A(1, 0, 3, 2), A(2, 3, 0, 1)}, true));
      G.push_back(gen_group("D4-order8", "D8", 4, {A(1, 2, 3, 0), A(3, 2, 1, 0)}, true));
      G.push_back(gen_group("A4", "A4", 4, {A(1, 2, 0, 3), A(0, 2, 3, 1)}, true));
      G.push_back(gen_group("S4", "S4", 4, {A(1, 2, 3, 0), A(1, 0, 2, 3)}, true));
      break;
    case 5:
      G.push_back(gen_group("C5", "Z5", 5, {A(1, 2, 3, 4, 0)}, true));
      G.push_back(gen_group("D5", "D10", 5, {A(1, 2, 3, 4, 0), A(4, 3, 2, 1, 0)}, true));
      G.push_back(gen_group("F20", "F20", 5, {A(1, 2, 3, 4, 0), A(0, 2, 4, 1, 3)}, true));
      G.push_back(gen_group("A5", "A5", 5, {A(1, 2, 0, 3, 4), A(1, 2, 3, 4, 0)}, false));
      G.push_back(gen_group("S5", "S5", 5, {A(1, 2, 3, 4, 0), A(1, 0, 2, 3, 4)}, false));
      break;
    case 6:
      G.push_back(gen_group("C6", "Z6", 6, {A(1, 2, 3, 4, 5, 0)}, true));
      G.push_back(gen_group("S3", "S3", 6, {A(1, 2, 0, 4, 5, 3), A(3, 5, 4, 0, 2, 1)}, true));
      G.push_back(gen_group("D6", "D12", 6, {A(1, 2, 3, 4, 5, 0), A(5, 4, 3, 2, 1, 0)}, true));
      G.push_back(gen_group("A4", "A4", 6, {A(4, 3, 1, 2, 5, 0), A(1, 2, 0, 5, 3, 4)}, true));
      G.push_back(gen_group("F18", "F18", 6, {A(1, 2, 0, 3, 4, 5), A(0, 1, 2, 4, 5, 3), A(4, 5, 3, 2, 0, 1)}, true));
      G.push_back(gen_group("A4xC2", "A4xZ2", 6,
                            {A(4, 3, 1, 2, 5, 0), A(1, 2, 0, 5, 3, 4), A(0, 1, 4, 3, 2, 5)}, true));
      G.push_back(gen_group("S4-", "S4-", 6, {A(0, 4, 2, 1, 5, 3), A(4, 5, 3, 2, 0, 1)}, true));
      G.push_back(gen_group("S4+", "S4+", 6, {A(2, 0, 4, 5, 1, 3), A(3, 1, 2, 0, 5, 4)}, true));
      G.push_back(gen_group("F36-", "F36-", 6,
                            {A(1, 2, 0, 3, 4, 5), A(0, 1, 2, 4, 5, 3), A(0, 2, 1, 5, 4, 3), A(4, 5, 3, 2, 0, 1)},
                            true));
      G.push_back(gen_group("F36+", "F36+", 6, {A(1, 2, 0, 3, 4, 5), A(0, 1, 2, 4, 5, 3), A(5, 4, 3, 0, 1, 2)},
                            true));
      G.push_back(gen_group("S4xC2", "S4xZ2", 6,
                            {A(0, 4, 2, 1, 5, 3), A(4, 5, 3, 2, 0, 1), A(0, 4, 2, 5, 1, 3)}, true));
      G.push_back(gen_group("PSL(2,5)", "A5", 6, {A(4, 3, 1, 2, 5, 0), A(4, 5, 2, 1, 3, 0)}, false));
      G.push_back(gen_group("F72", "F72", 6, {A(1, 2, 0, 3, 4, 5), A(4, 3, 5, 0, 1, 2), A(3, 4, 5, 0, 1, 2)}, true));
      G.push_back(gen_group("PGL(2,5)", "S5", 6, {A(1, 2, 3, 4, 0, 5), A(5, 2, 1, 4, 3, 0)}, false));
      G.push_back(gen_group("A6", "A6", 6, {A(1, 2, 0, 3, 4, 5), A(0, 2, 3, 4, 5, 1)}, false));
      G.push_back(gen_group("S6", "S6", 6, {A(1, 2, 3, 4, 5, 0), A(1, 0, 2, 3, 4, 5)}, false));
      break;
    case 7: {
      auto c = from_map(7, shift);
      auto aff = [](int a) { return from_map(7, [a](int i) { return a * i % 7; }); };
      G.push_back(gen_group("C7", "Z7", 7, {c}, true));
      G.push_back(gen_group("D7", "D14", 7, {c, aff(6)}, true));
      G.push_back(gen_group("F21", "F21", 7, {c, aff(2)}, true));
      G.push_back(gen_group("F42", "F42", 7, {c, aff(3)}, true));
      std::set<std::set<int>> fano;
      for (int i = 0; i < 7; ++i) fano.insert({i, (i + 1) % 7, (i + 3) % 7});
      G.push_back(make_group("PSL(3,2)", "PSL(3,2)", 7, stabilizer_of_blocks(7, fano), false));
      G.push_back(gen_group("A7", "A7", 7, {c, cycles(7, {{0, 1, 2}})}, false));
      G.push_back(gen_group("S7", "S7", 7, {c, cycles(7, {{0, 1}})}, false));
      break;
    }
    case 8: {
      auto c = from_map(8, shift);
      G.push_back(gen_group("C8", "Z8", 8, {c}, true));
      G.push_back(gen_group("C4xC2", "Z4xZ2", 8,
                            {from_map(8, [](int i) { return (i % 4 + 1) % 4 + 4 * (i / 4); }),
                             from_map(8, [](int i) { return (i + 4) % 8; })},
                            true));
      G.push_back(gen_group("C2^3", "E8", 8,
                            {from_map(8, [](int i) { return i ^ 1; }), from_map(8, [](int i) { return i ^ 2; }),
                             from_map(8, [](int i) { return i ^ 4; })},
                            true));
      G.push_back(gen_group("D8", "D16", 8, {c, from_map(8, [](int i) { return (8 - i) % 8; })}, true));
      auto tr = from_map(8, [](int i) { return i ^ 1; });
      auto mul = from_map(8, [](int i) { return f8_mul(i, 2); });
      auto frob = from_map(8, [](int i) { return f8_mul(i, i); });
      G.push_back(gen_group("AGL(1,8)", "AGL(1,8)", 8, {tr, mul}, true));
      G.push_back(gen_group("AGammaL(1,8)", "AGammaL(1,8)", 8, {tr, mul, frob}, true));
      // P^1(F7) with infinity as point 7.
      auto inv7 = [](int v) {
        int r = 1;
        while (r * v % 7 != 1) ++r;
        return r;
      };
      auto mob = [&](int a, int b, int cc, int d) {
        return from_map(8, [=](int x) {
          if (x == 7) return cc == 0 ? 7 : a * inv7(cc) % 7;
          int num = (a * x + b) % 7, den = (cc * x + d) % 7;
          return den == 0 ? 7 : num * inv7(den) % 7;
        });
      };
      G.push_back(gen_group("PSL(2,7)", "PSL(2,7)", 8, {mob(1, 1, 0, 1), mob(0, 6, 1, 0)}, false));
      G.push_back(gen_group("PGL(2,7)", "PGL(2,7)", 8, {mob(1, 1, 0, 1), mob(0, 6, 1, 0), mob(3, 0, 0, 1)}, false));
      std::set<std::set<int>> planes;
      for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
          for (int d = b + 1; d < 8; ++d) {
            int e = a ^ b ^ d;
            if (e > d) planes.insert({a, b, d, e});
          }
      G.push_back(make_group("AGL(3,2)", "AGL(3,2)", 8, stabilizer_of_blocks(8, planes), false));
      G.push_back(gen_group("C2wrS4", "C2wrS4", 8,
                            {cycles(8, {{0, 1}}), cycles(8, {{0, 2, 4, 6}, {1, 3, 5, 7}}), cycles(8, {{0, 2}, {1, 3}})},
                            true));
      G.push_back(gen_group("S4wrC2", "S4wrC2", 8,
                            {cycles(8, {{0, 1, 2, 3}}), cycles(8, {{0, 1}}), cycles(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}})},
                            true));
      G.push_back(gen_group("A8", "A8", 8, {cycles(8, {{0, 1, 2}}), cycles(8, {{1, 2, 3, 4, 5, 6, 7}})}, false));
      G.push_back(gen_group("S8", "S8", 8, {c, cycles(8, {{0, 1}})}, false));
      break;
    }
    default: break;
  }
  return G;
}

}  // namespace detail

/// Built-in transitive groups of degree n (empty above 8). Built on first use.
inline const std::vector<PermGroup>& transitive_groups(int n) {
  static std::array<std::vector<PermGroup>, 9> cache;
  static std::array<std::once_flag, 9> once;
  if (n < 1 || n > 8) {
    static const std::vector<PermGroup> none;
    return none;
  }
  std::call_once(once[static_cast<std::size_t>(n)], [n] { cache[static_cast<std::size_t>(n)] = detail::build_degree(n); });
  return cache[static_cast<std::size_t>(n)];
}

inline const PermGroup* find_group(int n, const std::string& name) {
  for (auto& g : transitive_groups(n))
    if (g.name == name || g.alt_name == name) return &g;
  return nullptr;
}

struct GroupMatch {
  const PermGroup* group = nullptr;
  double log_likelihood = 0;
  std::vector<std::string> consistent;  // every group whose types cover the sample
};

/// Maximum-likelihood group among those whose cycle types cover every
/// observed type; ties go to the smaller group.
inline GroupMatch best_match(int n, const std::map<CycleType, int>& observed) {
  GroupMatch out;
  for (auto& g : transitive_groups(n)) {
    bool ok = true;
    double ll = 0;
    for (auto& [t, k] : observed) {
      double d = g.density(t);
      if (d == 0) {
        ok = false;
        break;
      }
      ll += k * std::log(d);
    }
    if (!ok) continue;
    out.consistent.push_back(g.name);
    if (!out.group || ll > out.log_likelihood + 1e-9 ||
        (std::abs(ll - out.log_likelihood) <= 1e-9 && g.order < out.group->order)) {
      out.group = &g;
      out.log_likelihood = ll;
    }
  }
  return out;
}

}  // namespace qssa

#pragma once

// Species-reaction graphs, compatible partitions of the intermediates,
// class reachability and the tree-like decomposition certificate.

#include "qssa/ideal.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace qssa {

struct OsrEdge {
  bool to_reaction = true;  // species -> reaction, else reaction -> species
  std::size_t species = 0;
  std::size_t reaction = 0;
  std::uint32_t weight = 1;
};

struct OsrGraph {
  const Crn* crn = nullptr;
  std::vector<std::size_t> species_nodes;
  std::size_t reaction_count = 0;
  std::vector<OsrEdge> edges;

  bool has_species(std::size_t s) const {
    return std::find(species_nodes.begin(), species_nodes.end(), s) != species_nodes.end();
  }
};

inline OsrGraph build_osr(const Crn& crn) {
  OsrGraph g;
  g.crn = &crn;
  g.species_nodes.resize(crn.species.size());
  std::iota(g.species_nodes.begin(), g.species_nodes.end(), std::size_t{0});
  g.reaction_count = crn.reactions.size();
  for (std::size_t r = 0; r < crn.reactions.size(); ++r) {
    for (auto& [s, c] : crn.reactions[r].reactants) g.edges.push_back({true, s, r, c});
    for (auto& [s, c] : crn.reactions[r].products) g.edges.push_back({false, s, r, c});
  }
  return g;
}

/// Induced subgraph on q; reaction nodes are kept.
inline OsrGraph restrict_qosr(const OsrGraph& g, const IntermediateSet& q) {
  OsrGraph h;
  h.crn = g.crn;
  h.reaction_count = g.reaction_count;
  for (auto s : g.species_nodes)
    if (std::find(q.begin(), q.end(), s) != q.end()) h.species_nodes.push_back(s);
  for (auto& e : g.edges)
    if (h.has_species(e.species)) h.edges.push_back(e);
  return h;
}

struct CompatiblePartition {
  std::vector<std::vector<std::size_t>> species_classes;   // species indices, each sorted
  std::vector<std::vector<std::size_t>> reaction_classes;  // reaction indices

  std::optional<std::size_t> class_of(std::size_t s) const {
    for (std::size_t i = 0; i < species_classes.size(); ++i)
      if (std::find(species_classes[i].begin(), species_classes[i].end(), s) != species_classes[i].end()) return i;
    return std::nullopt;
  }
};

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

/// Reactant species of each reaction within the graph's species set.
inline std::vector<std::vector<std::size_t>> intermediate_reactants(const OsrGraph& g) {
  std::vector<std::vector<std::size_t>> out(g.reaction_count);
  for (auto& e : g.edges)
    if (e.to_reaction) out[e.reaction].push_back(e.species);
  return out;
}

/// Species classes from a union-find over node positions, reaction classes
/// as given.
inline CompatiblePartition assemble(const OsrGraph& g, UnionFind& uf, std::vector<std::vector<std::size_t>> rcls) {
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < g.species_nodes.size(); ++i) groups[uf.find(i)].push_back(g.species_nodes[i]);
  CompatiblePartition p;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    p.species_classes.push_back(members);
  }
  std::sort(p.species_classes.begin(), p.species_classes.end());
  p.reaction_classes = std::move(rcls);
  return p;
}

inline std::size_t node_position(const OsrGraph& g, std::size_t s) {
  return static_cast<std::size_t>(std::find(g.species_nodes.begin(), g.species_nodes.end(), s) - g.species_nodes.begin());
}

/// Union the reactant species of every reaction class until stable.
inline void close(const OsrGraph& g, UnionFind& uf, const std::vector<std::vector<std::size_t>>& rcls) {
  auto reactants = intermediate_reactants(g);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& cls : rcls) {
      std::optional<std::size_t> first;
      for (auto r : cls)
        for (auto s : reactants[r]) {
          auto pos = node_position(g, s);
          if (!first) first = pos;
          else if (uf.unite(*first, pos)) changed = true;
        }
    }
  }
}

}  // namespace detail

/// Finest compatible partition: co-reactants of a reaction share a class;
/// reactions stay in singleton classes.
inline CompatiblePartition finest_compatible_partition(const OsrGraph& g) {
  detail::UnionFind uf(g.species_nodes.size());
  std::vector<std::vector<std::size_t>> rcls;
  for (std::size_t r = 0; r < g.reaction_count; ++r) rcls.push_back({r});
  detail::close(g, uf, rcls);
  return detail::assemble(g, uf, std::move(rcls));
}

/// Merge species classes (each merge lists species names), then re-close.
inline CompatiblePartition coarsen(const OsrGraph& g, const CompatiblePartition& p,
                                   const std::vector<std::vector<std::string>>& merges) {
  detail::UnionFind uf(g.species_nodes.size());
  for (auto& cls : p.species_classes)
    for (std::size_t i = 1; i < cls.size(); ++i)
      uf.unite(detail::node_position(g, cls[0]), detail::node_position(g, cls[i]));
  for (auto& m : merges) {
    std::optional<std::size_t> first;
    for (auto& name : m) {
      auto s = g.crn->find_species(name);
      if (!s || !g.has_species(*s)) throw DomainError("unknown intermediate in merge: " + name);
      auto pos = detail::node_position(g, *s);
      if (!first) first = pos;
      else uf.unite(*first, pos);
    }
  }
  detail::close(g, uf, p.reaction_classes);
  return detail::assemble(g, uf, p.reaction_classes);
}

/// Parse "X,Z|Y" into a partition; species not mentioned become singletons.
inline CompatiblePartition partition_from_spec(const OsrGraph& g, const std::string& spec) {
  std::vector<std::vector<std::string>> merges;
  std::stringstream ss(spec);
  std::string group;
  while (std::getline(ss, group, '|')) {
    std::vector<std::string> names;
    std::stringstream gs(group);
    std::string name;
    while (std::getline(gs, name, ',')) {
      auto b = name.find_first_not_of(" \t"), e = name.find_last_not_of(" \t");
      if (b != std::string::npos) names.push_back(detail::normalize_middle_dot(name.substr(b, e - b + 1)));
    }
    if (!names.empty()) merges.push_back(names);
  }
  return coarsen(g, finest_compatible_partition(g), merges);
}

/// Whether the literal biconditional "s ~ s' iff r ~ r'" holds over all
/// pairs of species-to-reaction edges.
inline bool satisfies_literal_compatibility(const OsrGraph& g, const CompatiblePartition& p) {
  auto rclass = [&](std::size_t r) {
    for (std::size_t i = 0; i < p.reaction_classes.size(); ++i)
      if (std::find(p.reaction_classes[i].begin(), p.reaction_classes[i].end(), r) != p.reaction_classes[i].end())
        return i;
    return p.reaction_classes.size() + r;
  };
  for (auto& e : g.edges)
    for (auto& f : g.edges) {
      if (!e.to_reaction || !f.to_reaction) continue;
      bool ss = p.class_of(e.species) == p.class_of(f.species);
      bool rr = rclass(e.reaction) == rclass(f.reaction);
      if (ss != rr) return false;
    }
  return true;
}

struct ClassReachability {
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // class indices
  std::vector<std::vector<std::size_t>> witnesses;         // reactions realizing each edge
  bool acyclic = true;
  std::vector<std::size_t> cycle;        // class indices along one cycle, if any
  std::vector<std::size_t> topological;  // sources first, when acyclic
};

/// [A] -> [B] for A != B when a reaction consumes a member of A and
/// produces a member of B.
inline ClassReachability class_reachability(const OsrGraph& g, const CompatiblePartition& p) {
  const std::size_t n = p.species_classes.size();
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> E;
  for (auto& in : g.edges) {
    if (!in.to_reaction) continue;
    for (auto& out : g.edges) {
      if (out.to_reaction || out.reaction != in.reaction) continue;
      auto a = p.class_of(in.species), b = p.class_of(out.species);
      if (!a || !b || *a == *b) continue;
      auto& w = E[{*a, *b}];
      if (std::find(w.begin(), w.end(), in.reaction) == w.end()) w.push_back(in.reaction);
    }
  }
  ClassReachability out;
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto& [e, w] : E) {
    out.edges.push_back(e);
    out.witnesses.push_back(w);
    adj[e.first].push_back(e.second);
  }
  // DFS colouring for a cycle; reverse postorder for the topological order.
  std::vector<int> colour(n, 0);
  std::vector<std::size_t> stack, post;
  std::function<bool(std::size_t)> dfs = [&](std::size_t u) {
    colour[u] = 1;
    stack.push_back(u);
    for (auto v : adj[u]) {
      if (colour[v] == 1) {
        auto it = std::find(stack.begin(), stack.end(), v);
        out.cycle.assign(it, stack.end());
        return true;
      }
      if (colour[v] == 0 && dfs(v)) return true;
    }
    colour[u] = 2;
    stack.pop_back();
    post.push_back(u);
    return false;
  };
  for (std::size_t u = 0; u < n && out.acyclic; ++u)
    if (colour[u] == 0 && dfs(u)) out.acyclic = false;
  if (out.acyclic) out.topological.assign(post.rbegin(), post.rend());
  return out;
}

enum class CertificateVerdict { Certified, NotApplicable };

struct ClassReport {
  std::vector<std::size_t> species;
  bool size_ok = false;
  bool bimolecular = false;
  bool hypotheses = false;  // finiteness hypotheses for this class size
  std::vector<std::string> hypothesis_failures;
  std::optional<bool> nonboundary_zero;  // saturated class ideal proper; unset if not reached
};

struct StructuralCertificate {
  CompatiblePartition partition;
  bool lcl_empty = false;
  std::optional<ClassReachability> reachability;
  std::vector<ClassReport> classes;
  bool literal_compatibility = false;
  std::optional<bool> complement_independent;  // no class variable leaks into earlier classes' laws
  CertificateVerdict verdict = CertificateVerdict::NotApplicable;
  std::string reason;
  std::string route = "nonboundary (per-class finiteness hypotheses + nonboundary zero)";
};

inline std::string class_name(const Crn& crn, const std::vector<std::size_t>& cls) {
  std::string s = "{";
  for (std::size_t i = 0; i < cls.size(); ++i) s += (i ? "," : "") + crn.species[cls[i]];
  return s + "}";
}

namespace detail {

inline ClassReport check_class(const Crn& crn, const std::vector<std::size_t>& cls, Budget& budget) {
  ClassReport r;
  r.species = cls;
  r.size_ok = cls.size() <= 2;
  auto I = build_qssa_ideal(crn, cls);
  r.bimolecular = I.restricted_bimolecular;
  if (!r.bimolecular) r.hypothesis_failures.push_back("restriction to the class is not at-most-bimolecular");
  if (!r.size_ok) {
    r.hypothesis_failures.push_back("class has more than two intermediates");
    return r;
  }
  if (cls.size() == 1) {
    r.hypotheses = r.bimolecular && !I.generators[0].is_constant();
    if (I.generators[0].is_constant()) r.hypothesis_failures.push_back("rate law polynomial is constant");
  } else {
    auto h = hypotheses_finitethm(I);
    r.hypotheses = h.theorem_holds();
    for (auto& f : h.failures)
      if (f.find("constant term") == std::string::npos && f.find("bimolecular") == std::string::npos)
        r.hypothesis_failures.push_back(f);
  }
  if (!r.hypotheses) return r;
  auto J = as_ideal(I);
  auto S = saturate(J, product_of_variables(J), budget);
  auto G = buchberger(S.gens, MonomialOrder::identity(J.nvars()), budget);
  r.nonboundary_zero = !G.is_unit();
  return r;
}

/// Variables of a class must not occur in the rate laws of classes earlier
/// in the topological order.
inline bool complement_independent(const Crn& crn, const IntermediateSet& q, const CompatiblePartition& p,
                                   const std::vector<std::size_t>& topo) {
  auto space = make_space(crn, q, 0);
  auto var_of = [&](std::size_t s) {
    return static_cast<std::size_t>(std::find(q.begin(), q.end(), s) - q.begin());
  };
  for (std::size_t i = 0; i < topo.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      for (auto s : p.species_classes[topo[j]]) {
        auto law = rate_law(crn, s, q, space);
        for (auto t : p.species_classes[topo[i]])
          if (law.mentions(var_of(t))) return false;
      }
  return true;
}

}  // namespace detail

/// Checks, in order: no conservation laws, acyclic class reachability, then
/// each class (size, bimolecularity, finiteness hypotheses, nonboundary zero).
inline StructuralCertificate treelike_certificate(const Crn& crn, const IntermediateSet& q,
                                                  const CompatiblePartition& p,
                                                  Budget& budget = Budget::unlimited()) {
  StructuralCertificate c;
  c.partition = p;
  auto g = restrict_qosr(build_osr(crn), q);
  c.literal_compatibility = satisfies_literal_compatibility(g, p);
  c.lcl_empty = find_lcls(crn, q).empty();
  if (!c.lcl_empty) {
    c.reason = "the intermediates admit a linear conservation law";
    return c;
  }
  c.reachability = class_reachability(g, p);
  if (!c.reachability->acyclic) {
    std::string cyc;
    for (auto k : c.reachability->cycle) cyc += class_name(crn, p.species_classes[k]) + " -> ";
    cyc += class_name(crn, p.species_classes[c.reachability->cycle.front()]);
    c.reason = "class reachability has a directed cycle: " + cyc;
    return c;
  }
  for (auto k : c.reachability->topological) {
    auto r = detail::check_class(crn, p.species_classes[k], budget);
    c.classes.push_back(r);
    if (c.reason.empty()) {
      const std::string name = class_name(crn, r.species);
      if (!r.size_ok) c.reason = "class " + name + " has more than two intermediates";
      else if (!r.bimolecular) c.reason = "class " + name + " is not at-most-bimolecular";
      else if (!r.hypotheses)
        c.reason = "class " + name + " fails the finiteness hypotheses" +
                   (r.hypothesis_failures.empty() ? "" : ": " + r.hypothesis_failures.front());
      else if (r.nonboundary_zero && !*r.nonboundary_zero)
        c.reason = "class " + name + " has no nonboundary zero";
    }
  }
  c.complement_independent = detail::complement_independent(crn, q, p, c.reachability->topological);
  if (c.reason.empty()) c.verdict = CertificateVerdict::Certified;
  return c;
}

/// DOT rendering of a (restricted) species-reaction graph with optional
/// class clusters.
inline std::string to_dot(const OsrGraph& g, const CompatiblePartition* p = nullptr) {
  const Crn& crn = *g.crn;
  std::ostringstream o;
  auto sid = [&](std::size_t s) { return "\"s:" + crn.species[s] + "\""; };
  auto rid = [&](std::size_t r) { return "\"r" + std::to_string(r) + "\""; };
  static const char* colours[] = {"lightblue", "orange", "palegreen", "plum", "khaki", "lightpink"};
  o << "digraph osr {\n  rankdir=LR;\n";
  std::vector<bool> placed(crn.species.size(), false);
  if (p) {
    for (std::size_t k = 0; k < p->species_classes.size(); ++k) {
      o << "  subgraph cluster_" << k << " {\n    style=filled; color=" << colours[k % 6] << ";\n";
      for (auto s : p->species_classes[k]) {
        o << "    " << sid(s) << " [shape=ellipse, label=\"" << crn.species[s] << "\"];\n";
        placed[s] = true;
      }
      o << "  }\n";
    }
  }
  for (auto s : g.species_nodes)
    if (!placed[s]) o << "  " << sid(s) << " [shape=ellipse, label=\"" << crn.species[s] << "\"];\n";
  for (std::size_t r = 0; r < g.reaction_count; ++r)
    o << "  " << rid(r) << " [shape=box, label=\"" << crn.reactions[r].rate << "\"];\n";
  for (auto& e : g.edges) {
    o << "  " << (e.to_reaction ? sid(e.species) : rid(e.reaction)) << " -> "
      << (e.to_reaction ? rid(e.reaction) : sid(e.species));
    if (e.weight > 1) o << " [label=\"" << e.weight << "\"]";
    o << ";\n";
  }
  o << "}\n";
  return o.str();
}

}  // namespace qssa

#pragma once

// The full reduction workflow: ideal, conservation laws, per-variable
// elimination, saturation, Galois verdicts, structural certificate,
// boundary strata and the overall verdict, with a JSON report.

#include "qssa/galois.hpp"
#include "qssa/structure.hpp"

#include <json.hpp>

#include <cstdlib>

namespace qssa {

enum class Overall { ReductionPossible, ReductionPossibleNonboundary, ReductionImpossible, Undetermined };

inline const char* to_string(Overall o) {
  switch (o) {
    case Overall::ReductionPossible: return "ReductionPossible";
    case Overall::ReductionPossibleNonboundary: return "ReductionPossibleNonboundary";
    case Overall::ReductionImpossible: return "ReductionImpossible";
    case Overall::Undetermined: return "Undetermined";
  }
  return "?";
}

/// CLI exit code for a verdict.
inline int exit_code(Overall o) {
  switch (o) {
    case Overall::ReductionPossible:
    case Overall::ReductionPossibleNonboundary: return 0;
    case Overall::ReductionImpossible: return 2;
    case Overall::Undetermined: return 3;
  }
  return 1;
}

struct PipelineOptions {
  GaloisOptions galois;
  bool saturate = true;
  int degree_cap = 16;
  double cap_seconds = 600;  // per phase
  std::uint64_t step_cap = 20000000;
  std::optional<std::string> partition;  // "X,Z|Y"
  bool all_strata = false;

  /// Defaults with QSSA_CAP_SECONDS applied when set.
  static PipelineOptions from_environment() {
    PipelineOptions o;
    if (const char* s = std::getenv("QSSA_CAP_SECONDS")) {
      char* end = nullptr;
      double v = std::strtod(s, &end);
      if (end != s && v > 0) o.cap_seconds = v;
    }
    return o;
  }
};

// ---------------------------------------------------------------------------
// Degree guard and closed forms

struct DegreeGuardCertificate {
  std::string reason;
  std::optional<FinitenessHypotheses> hypotheses;
};

/// Solvability by degree: one intermediate, or two meeting the finiteness
/// hypotheses plus a nonzero constant term, with bimolecular kinetics.
inline std::optional<DegreeGuardCertificate> degree_guard_check(const QssaIdeal& I) {
  if (I.q.empty() || I.q.size() > 2 || !I.restricted_bimolecular) return std::nullopt;
  if (I.q.size() == 1) {
    if (I.generators[0].is_constant()) return std::nullopt;
    return DegreeGuardCertificate{"one intermediate with at-most-bimolecular kinetics: degree at most 2", std::nullopt};
  }
  auto h = hypotheses_finitethm(I);
  if (!h.strengthened_holds()) return std::nullopt;
  return DegreeGuardCertificate{"two intermediates meeting the finiteness hypotheses with a nonzero constant term in " +
                                    h.constant_term_in + ": Bezout bound 4",
                                h};
}

struct ClosedForm {
  std::string variable;
  int degree = 0;                 // 1 or 2
  std::string text;               // "x = ..." or "x = (-(b) ± sqrt(...))/(2*(a))"
  std::optional<RatFunc> value;   // linear and free of other variables
  std::optional<RatFunc> radicand;  // quadratic with constant coefficients
  IntermediatePoly defining;      // the basis element solved for the variable
};

/// Explicit solutions when the reduced lex basis is triangular with each
/// variable of degree at most 2.
inline std::optional<std::vector<ClosedForm>> closed_form_solve(const QssaIdeal& I,
                                                                Budget& budget = Budget::unlimited()) {
  const std::size_t n = I.nvars();
  if (n == 0) return std::nullopt;
  auto G = buchberger(I.generators, MonomialOrder::identity(n), budget);
  if (G.is_unit() || G.elements.size() != n) return std::nullopt;
  std::vector<const IntermediatePoly*> by_var(n, nullptr);
  for (auto& g : G.elements) {
    auto lm = leading_exponents(g, G.order);
    std::size_t v = 0;
    while (v < n && exponent_at(lm, v) == 0) ++v;
    if (v == n || total_degree(lm) != exponent_at(lm, v) || by_var[v]) return std::nullopt;
    for (std::size_t u = 0; u < v; ++u)
      if (g.mentions(u)) return std::nullopt;
    if (exponent_at(lm, v) > 2) return std::nullopt;
    by_var[v] = &g;
  }
  std::vector<ClosedForm> out;
  const VarSpace* sp = I.space.get();
  for (std::size_t k = n; k-- > 0;) {
    const auto& g = *by_var[k];
    const int d = g.degree_in(k);
    // Coefficients of x_k^i as polynomials in the later variables.
    std::vector<IntermediatePoly> c(static_cast<std::size_t>(d) + 1, IntermediatePoly(I.space));
    for (auto& t : g.terms()) {
      Exponents rest = t.exp;
      auto i = exponent_at(rest, k);
      if (k < rest.size()) rest[k] = 0;
      trim(rest);
      c[i] += IntermediatePoly::monomial(rest, t.coef, I.space);
    }
    ClosedForm cf;
    cf.variable = sp->vars[k];
    cf.degree = d;
    cf.defining = g;
    auto paren = [&](const IntermediatePoly& p) { return "(" + p.to_string(sp) + ")"; };
    auto constant = [](const IntermediatePoly& p) -> std::optional<RatFunc> {
      if (p.is_zero()) return RatFunc(0);
      if (!p.is_constant()) return std::nullopt;
      return p.constant_term();
    };
    if (d == 1) {
      auto a = constant(c[1]), b = constant(c[0]);
      if (a && b) {
        cf.value = -(*b / *a);
        cf.text = cf.variable + " = " + cf.value->to_string(sp->params);
      } else {
        cf.text = cf.variable + " = -" + paren(c[0]) + "/" + paren(c[1]);
      }
    } else {
      auto a = constant(c[2]), b = constant(c[1]), cc = constant(c[0]);
      if (a && b && cc) {
        RatFunc two_a = RatFunc(2) * *a;
        cf.radicand = (*b * *b - RatFunc(4) * *a * *cc) / (two_a * two_a);
        RatFunc centre = -(*b / two_a);
        cf.text = cf.variable + " = " + (centre.is_zero() ? "" : centre.to_string(sp->params) + " ") + "± sqrt(" +
                  cf.radicand->to_string(sp->params) + ")";
      } else {
        cf.text = cf.variable + " = (-" + paren(c[1]) + " ± sqrt(" + paren(c[1]) + "^2 - 4*" + paren(c[2]) + "*" +
                  paren(c[0]) + "))/(2*" + paren(c[2]) + ")";
      }
    }
    out.push_back(std::move(cf));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Report

struct VariableResult {
  std::string variable;
  std::optional<UniPoly<RatFunc>> eliminated;
  std::optional<SolvabilityVerdict> verdict;
  std::optional<int> positive_real_roots;  // at the first specialization
  std::string note;                        // cap or error text
};

struct QssaReport {
  ParsedCrn input;
  QssaIdeal ideal;
  std::vector<std::string> warnings;
  std::vector<Lcl> all_species_lcls;
  bool zero_dimensional = false;
  std::vector<VariableResult> variables;
  bool saturated_computed = false;
  std::vector<IntermediatePoly> saturated_generators;
  bool saturated_zero_dimensional = false;
  std::vector<VariableResult> saturated_variables;
  std::optional<DegreeGuardCertificate> degree_guard;
  std::optional<StructuralCertificate> structural;
  std::vector<Stratum<RatFunc>> boundary;
  std::optional<std::vector<ClosedForm>> closed_forms;
  Overall overall = Overall::Undetermined;
  std::string reason;
  std::vector<std::string> limits;  // phases cut short by caps
};

namespace detail {

inline std::vector<VariableResult> analyze_variables(const Ideal<RatFunc>& J, const PipelineOptions& o,
                                                     bool& zero_dim, std::vector<std::string>& limits,
                                                     const std::string& phase) {
  std::vector<VariableResult> out;
  zero_dim = true;
  for (std::size_t v = 0; v < J.nvars(); ++v) {
    VariableResult r;
    r.variable = J.space->vars[v];
    try {
      Budget b(o.cap_seconds, o.step_cap);
      r.eliminated = eliminate(J, v, b).poly;
    } catch (const ResourceLimit& e) {
      r.note = std::string("elimination stopped: ") + e.what();
      limits.push_back(phase + " elimination of " + r.variable + ": " + e.what());
      zero_dim = false;
      out.push_back(std::move(r));
      continue;
    }
    if (!r.eliminated) {
      zero_dim = false;
      r.note = "no univariate polynomial in the elimination ideal";
    }
    out.push_back(std::move(r));
  }
  for (auto& r : out) {
    if (!r.eliminated) continue;
    if (r.eliminated->degree() > o.degree_cap) {
      r.note = "degree " + std::to_string(r.eliminated->degree()) + " above the cap";
      limits.push_back(phase + " " + r.variable + ": degree cap");
      continue;
    }
    if (r.eliminated->degree() < 1) continue;
    try {
      r.verdict = solvability_verdict(*r.eliminated, J.space->params, o.galois);
      auto sp = specialize_generic(*r.eliminated, J.space->params, o.galois.seed, o.galois.range);
      r.positive_real_roots = sturm_count(sp.first, RootInterval{Rational(0), std::nullopt});
    } catch (const DomainError& e) {
      r.note = std::string("Galois analysis unavailable: ") + e.what();
    }
  }
  return out;
}

/// Merge the classes on any directed cycle until the class graph is acyclic.
inline CompatiblePartition break_cycles(const OsrGraph& g, CompatiblePartition p, const Crn& crn) {
  for (;;) {
    auto r = class_reachability(g, p);
    if (r.acyclic) return p;
    std::vector<std::string> merge;
    for (auto k : r.cycle)
      for (auto s : p.species_classes[k]) merge.push_back(crn.species[s]);
    p = coarsen(g, p, {merge});
  }
}

}  // namespace detail

inline QssaReport run_algorithm(const ParsedCrn& input, const PipelineOptions& o = {}) {
  QssaReport R;
  R.input = input;
  const Crn& crn = input.crn;
  const auto& q = input.intermediates;
  if (q.empty()) throw DomainError("no intermediates selected");
  R.ideal = build_qssa_ideal(crn, q);
  R.warnings = validate_intermediates(crn, q);
  R.all_species_lcls = find_lcls_all_species(crn);
  R.degree_guard = degree_guard_check(R.ideal);
  auto J = as_ideal(R.ideal);

  R.variables = detail::analyze_variables(J, o, R.zero_dimensional, R.limits, "ideal");

  if (o.saturate) {
    try {
      Budget b(o.cap_seconds, o.step_cap);
      auto S = saturate_by_variables(J, b);
      R.saturated_generators = S.gens;
      R.saturated_computed = true;
      R.saturated_variables = detail::analyze_variables(S, o, R.saturated_zero_dimensional, R.limits, "saturated");
    } catch (const ResourceLimit& e) {
      R.limits.push_back(std::string("saturation: ") + e.what());
    }
  }

  try {
    Budget b(o.cap_seconds, o.step_cap);
    auto g = restrict_qosr(build_osr(crn), q);
    auto p = o.partition ? partition_from_spec(g, *o.partition)
                         : detail::break_cycles(g, finest_compatible_partition(g), crn);
    R.structural = treelike_certificate(crn, q, p, b);
  } catch (const ResourceLimit& e) {
    R.limits.push_back(std::string("structural certificate: ") + e.what());
  }

  try {
    Budget b(o.cap_seconds, o.step_cap);
    R.boundary = boundary_strata(J, o.all_strata, b);
  } catch (const ResourceLimit& e) {
    R.limits.push_back(std::string("boundary strata: ") + e.what());
  }

  if (R.zero_dimensional) {
    try {
      Budget b(o.cap_seconds, o.step_cap);
      R.closed_forms = closed_form_solve(R.ideal, b);
    } catch (const ResourceLimit& e) {
      R.limits.push_back(std::string("closed forms: ") + e.what());
    }
  }

  // Overall verdict.
  bool eliminations_complete = std::all_of(R.variables.begin(), R.variables.end(), [](auto& v) {
    return v.eliminated.has_value() || v.note.rfind("elimination stopped", 0) != 0;
  });
  for (auto& v : R.variables)
    if (v.verdict && v.verdict->status == SolvabilityStatus::InsolvableCertified) {
      R.overall = Overall::ReductionImpossible;
      R.reason = "the eliminated polynomial in " + v.variable + " has an insolvable Galois group (" +
                 v.verdict->certificate->group + ")";
      return R;
    }
  if (eliminations_complete && !R.zero_dimensional) {
    R.overall = Overall::ReductionImpossible;
    std::string which;
    for (auto& v : R.variables)
      if (!v.eliminated) which += (which.empty() ? "" : ", ") + v.variable;
    R.reason = "the QSSA ideal is not zero-dimensional (no univariate polynomial in " + which + ")";
    std::string strata;
    for (auto& s : R.boundary)
      if (s.kind == StratumKind::PositiveDimensional && s.zeroed.size() == 1)
        strata += (strata.empty() ? "" : ", ") + J.space->vars[s.zeroed[0]] + " = 0";
    if (!strata.empty()) R.reason += "; positive-dimensional boundary strata: " + strata;
    return R;
  }
  const bool all_solvable = R.zero_dimensional && std::all_of(R.variables.begin(), R.variables.end(), [](auto& v) {
                              return v.verdict && v.verdict->status == SolvabilityStatus::SolvableCertified;
                            });
  if (all_solvable) {
    R.overall = Overall::ReductionPossible;
    R.reason = "finitely many quasi-steady states, every eliminated polynomial solvable by degree";
  } else if (R.zero_dimensional && R.degree_guard) {
    R.overall = Overall::ReductionPossible;
    R.reason = R.degree_guard->reason;
  } else if (R.structural && R.structural->verdict == CertificateVerdict::Certified) {
    R.overall = Overall::ReductionPossibleNonboundary;
    R.reason = "tree-like decomposition certificate: finitely many nonboundary quasi-steady states, all radical";
  } else {
    R.overall = Overall::Undetermined;
    R.reason = R.limits.empty() ? "Galois evidence inconclusive and no structural certificate"
                                : "resource caps reached: " + R.limits.front();
  }
  return R;
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

using nlohmann::ordered_json;

inline ordered_json verdict_json(const SolvabilityVerdict& v) {
  ordered_json j;
  j["status"] = to_string(v.status);
  if (v.group_label) j["group_label"] = *v.group_label;
  if (!v.degree_argument.empty()) j["degree_argument"] = v.degree_argument;
  j["factors"] = ordered_json::array();
  for (auto& f : v.factors) {
    ordered_json fj;
    fj["degree"] = f.degree;
    fj["multiplicity"] = f.multiplicity;
    if (!f.label.empty()) {
      fj["label"] = f.label;
      fj["label_convention"] = {{"order_annotated", f.label}, {"alternative", f.alt_label}};
      fj["label_source"] = f.label_source;
    }
    if (!f.consistent_groups.empty()) fj["consistent_groups"] = f.consistent_groups;
    fj["cycle_types"] = ordered_json::array();
    for (auto& [t, k] : f.cycle_types) fj["cycle_types"].push_back({{"cycle_type", t}, {"count", k}});
    fj["witnesses"] = ordered_json::array();
    if (v.certificate && v.certificate->degree == f.degree)
      for (auto& w : v.certificate->witnesses)
        fj["witnesses"].push_back({{"prime", w.prime}, {"cycle_type", w.cycle_type}});
    j["factors"].push_back(fj);
  }
  if (v.certificate) {
    auto& c = *v.certificate;
    ordered_json cj;
    cj["group"] = c.group;
    cj["route"] = c.route;
    cj["degree"] = c.degree;
    cj["factor"] = c.factor.to_string();
    cj["irreducibility"] = "exact factorization over Q at the specialization";
    if (c.n_cycle) cj["n_cycle_prime"] = {{"prime", c.n_cycle->prime}, {"cycle_type", c.n_cycle->cycle_type}};
    if (c.primitivity.prime)
      cj["primitivity_prime"] = {{"prime", c.primitivity.prime}, {"cycle_type", c.primitivity.cycle_type}};
    cj["generator_prime"] = {{"prime", c.generator.prime}, {"cycle_type", c.generator.cycle_type}};
    cj["verified"] = c.verified;
    cj["certified_specializations"] = v.certified_specializations;
    j["certificate"] = cj;
  }
  j["seeds"] = v.seeds;
  j["patterns"] = v.patterns;
  j["primes_used"] = v.primes_used;
  j["specialization"] = v.specialization;
  return j;
}

inline ordered_json variables_json(const std::vector<VariableResult>& vs, const VarSpace* sp) {
  ordered_json out = ordered_json::object();
  for (auto& v : vs) {
    ordered_json j;
    if (v.eliminated) {
      j["degree"] = v.eliminated->degree();
      j["polynomial"] = v.eliminated->to_string(sp);
    } else {
      j["degree"] = nullptr;
    }
    if (v.verdict) j["solvability"] = verdict_json(*v.verdict);
    if (v.positive_real_roots) j["positive_real_roots_at_specialization"] = *v.positive_real_roots;
    if (!v.note.empty()) j["note"] = v.note;
    out[v.variable] = j;
  }
  return out;
}

inline ordered_json lcl_json(const std::vector<Lcl>& ls, const std::vector<std::string>& names) {
  ordered_json out = ordered_json::array();
  for (auto& l : ls) {
    ordered_json c = ordered_json::object();
    for (std::size_t i = 0; i < l.coeffs.size(); ++i)
      if (l.coeffs[i] != 0) c[names[i]] = l.coeffs[i].get_str();
    out.push_back({{"constant", l.constant}, {"coefficients", c}});
  }
  return out;
}

inline ordered_json structural_json(const Crn& crn, const StructuralCertificate& c) {
  ordered_json s;
  s["verdict"] = c.verdict == CertificateVerdict::Certified ? "Certified" : "NotApplicable";
  if (!c.reason.empty()) s["reason"] = c.reason;
  s["route"] = c.route;
  ordered_json classes = ordered_json::array();
  for (auto& cls : c.partition.species_classes) classes.push_back(class_name(crn, cls));
  s["species_classes"] = classes;
  s["lcl_empty"] = c.lcl_empty;
  if (c.reachability) {
    s["class_reachability_acyclic"] = c.reachability->acyclic;
    ordered_json edges = ordered_json::array();
    for (std::size_t i = 0; i < c.reachability->edges.size(); ++i) {
      auto [a, b] = c.reachability->edges[i];
      std::vector<std::string> via;
      for (auto r : c.reachability->witnesses[i]) via.push_back(crn.reactions[r].rate);
      edges.push_back({{"from", class_name(crn, c.partition.species_classes[a])},
                       {"to", class_name(crn, c.partition.species_classes[b])},
                       {"via", via}});
    }
    s["class_edges"] = edges;
  }
  ordered_json per = ordered_json::array();
  for (auto& r : c.classes) {
    ordered_json pj{{"class", class_name(crn, r.species)},
                    {"size_ok", r.size_ok},
                    {"bimolecular", r.bimolecular},
                    {"finiteness_hypotheses", r.hypotheses},
                    {"failures", r.hypothesis_failures}};
    if (r.nonboundary_zero) pj["nonboundary_zero"] = *r.nonboundary_zero;
    per.push_back(pj);
  }
  s["classes"] = per;
  s["literal_biconditional_compatibility"] = c.literal_compatibility;
  if (c.complement_independent) s["complement_independent"] = *c.complement_independent;
  return s;
}

}  // namespace detail

inline nlohmann::ordered_json report_json(const QssaReport& R) {
  using detail::ordered_json;
  const Crn& crn = R.input.crn;
  const VarSpace* sp = R.ideal.space.get();
  ordered_json j;
  j["schema"] = "qssa-report/1";
  j["network"] = print_crn(crn, R.input.intermediates);
  std::vector<std::string> inames;
  for (auto s : R.ideal.q) inames.push_back(crn.species[s]);
  j["intermediates"] = inames;
  j["warnings"] = R.warnings;
  j["inventory"] = {{"rate_constants", R.ideal.inventory.rate_constants},
                    {"slow_concentrations", R.ideal.inventory.slow_concentrations},
                    {"lcl_constants", R.ideal.inventory.lcl_constants}};
  j["lcls"] = detail::lcl_json(R.ideal.lcls, sp->vars);
  std::vector<std::string> all_names;
  for (std::size_t i = 0; i < crn.species.size(); ++i) all_names.push_back(variable_name(crn, i));
  j["all_species_lcls"] = detail::lcl_json(R.all_species_lcls, all_names);
  ordered_json ideal;
  ideal["variables"] = sp->vars;
  ideal["parameters"] = sp->params;
  ideal["generators"] = ordered_json::array();
  for (auto& g : R.ideal.generators) ideal["generators"].push_back(g.to_string(sp));
  ideal["restricted_bimolecular"] = R.ideal.restricted_bimolecular;
  j["ideal"] = ideal;
  j["zero_dimensional"] = R.zero_dimensional;
  j["eliminated"] = detail::variables_json(R.variables, sp);
  if (R.saturated_computed) {
    ordered_json s;
    s["generators"] = ordered_json::array();
    for (auto& g : R.saturated_generators) s["generators"].push_back(g.to_string(sp));
    s["zero_dimensional"] = R.saturated_zero_dimensional;
    s["eliminated"] = detail::variables_json(R.saturated_variables, sp);
    j["saturated"] = s;
  }
  if (R.degree_guard) {
    ordered_json d{{"reason", R.degree_guard->reason}};
    j["degree_guard"] = d;
  } else {
    j["degree_guard"] = nullptr;
  }
  if (R.structural) j["structural"] = detail::structural_json(crn, *R.structural);
  ordered_json strata = ordered_json::array();
  for (auto& s : R.boundary) {
    std::vector<std::string> z;
    for (auto k : s.zeroed) z.push_back(sp->vars[k]);
    strata.push_back({{"zeroed", z}, {"kind", to_string(s.kind)}});
  }
  j["boundary"] = strata;
  if (R.closed_forms) {
    ordered_json cf = ordered_json::object();
    for (auto& c : *R.closed_forms) cf[c.variable] = c.text;
    j["closed_forms"] = cf;
  } else {
    j["closed_forms"] = nullptr;
  }
  j["limits"] = R.limits;
  j["overall"] = to_string(R.overall);
  j["reason"] = R.reason;
  return j;
}

}  // namespace qssa

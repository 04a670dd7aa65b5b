// qssa: command-line front end over the qssa library.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qssa/qssa.hpp"

using namespace qssa;
using nlohmann::ordered_json;

namespace {

struct Config {
  std::string input;
  std::string intermediates;
  std::uint64_t seed = 1;
  int primes = 200;
  std::int64_t spec_range = 10000;
  bool no_saturate = false;
  std::string partition;
  std::string format = "json";
  std::string var;
  bool qosr = false;
  bool all_strata = false;
};

ParsedCrn load(const Config& c) {
  std::ifstream in(c.input);
  if (!in) throw Error("cannot open '" + c.input + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  auto p = parse_crn(ss.str());
  if (!c.intermediates.empty()) {
    p.intermediates.clear();
    std::stringstream names(detail::normalize_middle_dot(c.intermediates));
    for (std::string n; std::getline(names, n, ',');) {
      auto b = n.find_first_not_of(" \t"), e = n.find_last_not_of(" \t");
      if (b == std::string::npos) continue;
      auto s = p.crn.species_index(n.substr(b, e - b + 1));
      if (std::find(p.intermediates.begin(), p.intermediates.end(), s) != p.intermediates.end())
        throw Error("duplicate intermediate '" + p.crn.species[s] + "'");
      p.intermediates.push_back(s);
    }
  }
  return p;
}

PipelineOptions pipeline_options(const Config& c) {
  auto o = PipelineOptions::from_environment();
  o.galois.seed = c.seed;
  o.galois.primes = c.primes;
  o.galois.range = c.spec_range;
  o.saturate = !c.no_saturate;
  o.all_strata = c.all_strata;
  if (!c.partition.empty()) o.partition = c.partition;
  return o;
}

Budget budget_for(const Config& c) { return Budget(pipeline_options(c).cap_seconds, pipeline_options(c).step_cap); }

QssaIdeal ideal_for(const ParsedCrn& p) {
  if (p.intermediates.empty()) throw Error("no intermediates selected (use an 'intermediates:' line or --intermediates)");
  return build_qssa_ideal(p.crn, p.intermediates);
}

std::vector<std::size_t> selected_vars(const Config& c, const QssaIdeal& I) {
  std::vector<std::size_t> out;
  if (c.var.empty()) {
    for (std::size_t v = 0; v < I.nvars(); ++v) out.push_back(v);
    return out;
  }
  auto want = detail::normalize_middle_dot(c.var);
  for (std::size_t v = 0; v < I.nvars(); ++v)
    if (I.space->vars[v] == want || I.space->vars[v] == "x_" + want) out.push_back(v);
  if (out.empty()) throw Error("unknown intermediate variable '" + c.var + "'");
  return out;
}

std::vector<std::string> names_of(const Crn& crn, const IntermediateSet& q) {
  std::vector<std::string> out;
  for (auto s : q) out.push_back(crn.species[s]);
  return out;
}

ordered_json polys_json(const std::vector<IntermediatePoly>& ps, const VarSpace* sp) {
  ordered_json a = ordered_json::array();
  for (auto& g : ps) a.push_back(g.to_string(sp));
  return a;
}

void emit(const Config& c, const ordered_json& j, const std::string& text) {
  if (c.format == "text")
    std::cout << text;
  else
    std::cout << j.dump(2) << "\n";
}

std::string lines(const std::vector<IntermediatePoly>& ps, const VarSpace* sp) {
  std::string out;
  for (auto& g : ps) out += "  " + g.to_string(sp) + "\n";
  return out;
}

// ---------------------------------------------------------------------------

int cmd_parse(const Config& c) {
  auto p = load(c);
  ordered_json j;
  j["species"] = p.crn.species;
  ordered_json rs = ordered_json::array();
  for (auto& r : p.crn.reactions)
    rs.push_back({{"reactants", complex_to_string(p.crn, r.reactants)},
                  {"products", complex_to_string(p.crn, r.products)},
                  {"rate", r.rate}});
  j["reactions"] = rs;
  j["intermediates"] = names_of(p.crn, p.intermediates);
  j["warnings"] = validate_intermediates(p.crn, p.intermediates);
  emit(c, j, print_crn(p.crn, p.intermediates));
  return 0;
}

int cmd_ratelaws(const Config& c) {
  auto p = load(c);
  auto I = ideal_for(p);
  const VarSpace* sp = I.space.get();
  ordered_json j = ordered_json::object();
  std::string text;
  for (std::size_t i = 0; i < I.rate_law_count; ++i) {
    auto name = p.crn.species[I.q[i]];
    j[name] = I.generators[i].to_string(sp);
    text += "d" + sp->vars[i] + "/dt = " + I.generators[i].to_string(sp) + "\n";
  }
  emit(c, j, text);
  return 0;
}

int cmd_lcl(const Config& c) {
  auto p = load(c);
  auto I = ideal_for(p);
  const VarSpace* sp = I.space.get();
  std::vector<std::string> all;
  for (std::size_t i = 0; i < p.crn.species.size(); ++i) all.push_back(variable_name(p.crn, i));
  auto whole = find_lcls_all_species(p.crn);
  ordered_json j;
  j["intermediates"] = detail::lcl_json(I.lcls, sp->vars);
  j["all_species"] = detail::lcl_json(whole, all);
  std::string text = "among intermediates: " + std::to_string(I.lcls.size()) + "\n";
  for (std::size_t k = 0; k < I.lcls.size(); ++k)
    text += "  " + I.generators[I.rate_law_count + k].to_string(sp) + " = 0\n";
  text += "among all species: " + std::to_string(whole.size()) + "\n";
  emit(c, j, text);
  return 0;
}

int cmd_ideal(const Config& c) {
  auto p = load(c);
  auto I = ideal_for(p);
  const VarSpace* sp = I.space.get();
  ordered_json j;
  j["variables"] = sp->vars;
  j["parameters"] = sp->params;
  j["inventory"] = {{"rate_constants", I.inventory.rate_constants},
                    {"slow_concentrations", I.inventory.slow_concentrations},
                    {"lcl_constants", I.inventory.lcl_constants}};
  j["generators"] = polys_json(I.generators, sp);
  j["restricted_bimolecular"] = I.restricted_bimolecular;
  emit(c, j, "generators:\n" + lines(I.generators, sp));
  return 0;
}

int cmd_groebner(const Config& c) {
  auto p = load(c);
  auto I = ideal_for(p);
  auto b = budget_for(c);
  auto G = buchberger(I.generators, MonomialOrder::identity(I.nvars()), b);
  const VarSpace* sp = I.space.get();
  ordered_json j;
  j["order"] = sp->vars;
  j["basis"] = polys_json(G.elements, sp);
  j["zero_dimensional"] = basis_is_zero_dimensional(G);
  emit(c, j, "reduced lex basis:\n" + lines(G.elements, sp));
  return 0;
}

int cmd_eliminate(const Config& c) {
  auto p = load(c);
  auto I = ideal_for(p);
  auto b = budget_for(c);
  const VarSpace* sp = I.space.get();
  auto J = as_ideal(I);
  ordered_json j = ordered_json::object();
  std::string text;
  for (auto v : selected_vars(c, I)) {
    auto e = eliminate(J, v, b);
    if (e.poly) {
      j[sp->vars[v]] = {{"degree", e.poly->degree()}, {"polynomial", e.poly->to_string(sp)}};
      text += sp->vars[v] + " (degree " + std::to_string(e.poly->degree()) + "): " + e.poly->to_string(sp) + "\n";
    } else {
      j[sp->vars[v]] = {{"degree", nullptr}};
      text += sp->vars[v] + ": no univariate polynomial (ideal not zero-dimensional)\n";
    }
  }
  emit(c, j, text);
  return 0;
}

int cmd_saturate(const Config& c) {
  auto p = load(c);
  auto I = ideal_for(p);
  auto b = budget_for(c);
  const VarSpace* sp = I.space.get();
  auto S = saturate_by_variables(as_ideal(I), b);
  auto G = buchberger(S.gens, MonomialOrder::identity(I.nvars()), b);
  ordered_json j;
  j["generators"] = polys_json(G.elements, sp);
  j["unit"] = G.is_unit();
  j["zero_dimensional"] = basis_is_zero_dimensional(G);
  emit(c, j, "saturation by the product of the variables:\n" + lines(G.elements, sp));
  return 0;
}

CompatiblePartition partition_for(const Config& c, const OsrGraph& g) {
  return c.partition.empty() ? finest_compatible_partition(g) : partition_from_spec(g, c.partition);
}

int cmd_graph(const Config& c) {
  auto p = load(c);
  auto g = build_osr(p.crn);
  if (c.qosr) {
    if (p.intermediates.empty()) throw Error("--qosr needs intermediates");
    g = restrict_qosr(g, p.intermediates);
  }
  if (c.format == "json") {
    ordered_json j;
    std::vector<std::string> nodes;
    for (auto s : g.species_nodes) nodes.push_back(p.crn.species[s]);
    j["species"] = nodes;
    ordered_json es = ordered_json::array();
    for (auto& e : g.edges)
      es.push_back({{"from", p.crn.species[e.species]},
                    {"reaction", p.crn.reactions[e.reaction].rate},
                    {"to", p.crn.reactions[e.to_reaction].rate},
                    {"weight", e.weight}});
    j["edges"] = es;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (c.qosr && !c.partition.empty()) {
    auto part = partition_from_spec(g, c.partition);
    std::cout << to_dot(g, &part);
  } else {
    std::cout << to_dot(g);
  }
  return 0;
}

int cmd_structure(const Config& c) {
  auto p = load(c);
  if (p.intermediates.empty()) throw Error("no intermediates selected");
  auto g = restrict_qosr(build_osr(p.crn), p.intermediates);
  auto part = partition_for(c, g);
  auto b = budget_for(c);
  auto cert = treelike_certificate(p.crn, p.intermediates, part, b);
  auto j = detail::structural_json(p.crn, cert);
  std::string text = std::string(cert.verdict == CertificateVerdict::Certified ? "Certified" : "NotApplicable");
  if (!cert.reason.empty()) text += ": " + cert.reason;
  text += "\nclasses:";
  for (auto& cls : part.species_classes) text += " " + class_name(p.crn, cls);
  text += "\n";
  if (cert.reachability && !cert.reachability->acyclic) text += "class reachability has a directed cycle\n";
  emit(c, j, text);
  return cert.verdict == CertificateVerdict::Certified ? 0 : 3;
}

int cmd_galois(const Config& c) {
  auto p = load(c);
  auto I = ideal_for(p);
  auto b = budget_for(c);
  auto o = pipeline_options(c);
  const VarSpace* sp = I.space.get();
  auto J = as_ideal(I);
  if (o.saturate) J = saturate_by_variables(J, b);
  ordered_json j = ordered_json::object();
  std::string text;
  bool insolvable = false, all_solvable = true;
  for (auto v : selected_vars(c, I)) {
    auto e = eliminate(J, v, b);
    if (!e.poly) {
      j[sp->vars[v]] = {{"degree", nullptr}};
      text += sp->vars[v] + ": not zero-dimensional\n";
      all_solvable = false;
      continue;
    }
    auto verdict = solvability_verdict(*e.poly, sp->params, o.galois);
    insolvable |= verdict.status == SolvabilityStatus::InsolvableCertified;
    all_solvable &= verdict.status == SolvabilityStatus::SolvableCertified;
    j[sp->vars[v]] = {{"degree", e.poly->degree()}, {"solvability", detail::verdict_json(verdict)}};
    text += sp->vars[v] + " (degree " + std::to_string(e.poly->degree()) + "): " + to_string(verdict.status);
    if (verdict.group_label) text += ", " + *verdict.group_label;
    text += "\n";
  }
  emit(c, j, text);
  return insolvable ? 2 : all_solvable ? 0 : 3;
}

int cmd_reduce(const Config& c) {
  auto p = load(c);
  auto R = run_algorithm(p, pipeline_options(c));
  if (c.format == "text") {
    std::cout << "overall: " << to_string(R.overall) << "\n";
    if (!R.reason.empty()) std::cout << "reason: " << R.reason << "\n";
    auto& vs = R.saturated_computed ? R.saturated_variables : R.variables;
    for (auto& v : vs) {
      std::cout << v.variable << ": ";
      if (!v.eliminated) {
        std::cout << "no univariate polynomial\n";
        continue;
      }
      std::cout << "degree " << v.eliminated->degree();
      if (v.verdict) {
        std::cout << ", " << to_string(v.verdict->status);
        if (v.verdict->group_label) std::cout << " (" << *v.verdict->group_label << ")";
      }
      std::cout << "\n";
    }
    if (R.closed_forms)
      for (auto& f : *R.closed_forms) std::cout << f.text << "\n";
  } else {
    std::cout << report_json(R).dump(2) << "\n";
  }
  return exit_code(R.overall);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether quasi-steady-state reduction of a mass-action network is possible by radicals"};
  app.require_subcommand(1);
  Config cfg;

  auto add = [&](const char* name, const char* desc) {
    auto* s = app.add_subcommand(name, desc);
    s->add_option("input", cfg.input, "network file (.crn)")->required()->check(CLI::ExistingFile);
    s->add_option("--intermediates", cfg.intermediates, "comma-separated intermediates (overrides the file)");
    s->add_option("--seed", cfg.seed, "random seed for specializations");
    s->add_option("--primes", cfg.primes, "primes sampled per specialization")->check(CLI::PositiveNumber);
    s->add_option("--spec-range", cfg.spec_range, "parameters are sampled as p/q with 1 <= p,q <= N")
        ->check(CLI::PositiveNumber);
    s->add_flag("--no-saturate", cfg.no_saturate, "skip saturation by the product of the variables");
    s->add_option("--partition", cfg.partition, "manual class partition, e.g. \"X,Z|Y\"");
    s->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text", "dot"}));
    s->add_option("--var", cfg.var, "restrict to one intermediate");
    return s;
  };
  std::vector<std::pair<CLI::App*, int (*)(const Config&)>> cmds{
      {add("parse", "parse and normalize a network"), cmd_parse},
      {add("ratelaws", "rate laws of the intermediates"), cmd_ratelaws},
      {add("lcl", "linear conservation laws"), cmd_lcl},
      {add("ideal", "the QSSA ideal and its ground field"), cmd_ideal},
      {add("groebner", "reduced lex Groebner basis"), cmd_groebner},
      {add("eliminate", "eliminated univariate polynomials"), cmd_eliminate},
      {add("saturate", "saturation by the product of the variables"), cmd_saturate},
      {add("graph", "species-reaction graph in DOT"), cmd_graph},
      {add("structure", "tree-like structural certificate"), cmd_structure},
      {add("galois", "solvability of the eliminated polynomials"), cmd_galois},
      {add("reduce", "full QSSA reduction analysis"), cmd_reduce},
  };
  cmds[7].first->add_flag("--qosr", cfg.qosr, "restrict to the intermediates");
  cmds[10].first->add_flag("--all-strata", cfg.all_strata, "enumerate every boundary stratum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  if (cmds[7].first->parsed() && !app.get_subcommand("graph")->count("--format")) cfg.format = "dot";
  try {
    for (auto& [sub, fn] : cmds)
      if (sub->parsed()) return fn(cfg);
  } catch (const std::exception& e) {
    std::cerr << "qssa: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

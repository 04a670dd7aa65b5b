// Acceptance checks. `acceptance` runs every criterion; `acceptance N` runs
// one. Prints one PASS/FAIL line per criterion; exit status 0 iff all pass.
#include <chrono>
#include <functional>
#include <iostream>

#include "properties.hpp"
#include "support.hpp"

using namespace qssa;
using namespace qssa::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

std::string pattern_string(const std::vector<int>& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "}";
}

// Cycle types of a squarefree polynomial modulo good primes, reducible or not.
std::vector<CycleType> cycle_types_mod_p(const QUniPoly& f, int count) {
  std::vector<CycleType> out;
  ZPoly z = zp::from_rational(f);
  for (modp::u64 p = 5; static_cast<int>(out.size()) < count; p = modp::next_prime(p + 1)) {
    if (!zp::good_prime(z, p)) continue;
    CycleType t;
    for (auto& g : modp::factor_squarefree(zp::reduce(z, p), p, p)) t.push_back(modp::degree(g));
    std::sort(t.rbegin(), t.rend());
    out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome michaelis_menten() {
  auto R = run_algorithm(load_network("michaelis_menten"));
  if (!R.closed_forms || R.closed_forms->size() != 1) return {false, "no closed form"};
  auto& cf = (*R.closed_forms)[0];
  auto expected = P(R.ideal.space, "k1*c_E*c_S/(k_1 + k2)").constant_term();
  bool ok = cf.value && *cf.value == expected && R.overall == Overall::ReductionPossible;
  return {ok, cf.text};
}

Outcome printed_eliminant() {
  auto sp = make_test_space({"x", "y"}, {"a", "k1", "k2", "k_2", "k3"});
  Ideal<RatFunc> I{sp,
                   {P(sp, "-2*k2*x^2 - k3*x*y + 2*k_2*y^2 + k1*a"), P(sp, "-2*k_2*y^2 - k3*x*y + 2*k2*x^2")}};
  auto e = eliminate(I, 0);
  if (!e.poly) return {false, "no eliminant in x"};
  auto printed = U(sp, 0,
                   "(8*k_2*k2^2 - 3*k2*k3^2)*x^4 + 8*k_2*k2*k3*x^3 + (-8*a*k_2*k1*k2 + a*k1*k3^2 - 4*k_2^2*k2)*x^2"
                   " - 2*k_2*k1*a*k3*x + 2*a^2*k_2*k1^2");
  bool equal = printed.monic() == e.poly->monic();
  std::vector<IntermediatePoly> G = e.basis.elements;
  bool member = reduces_to_zero(from_univariate(printed, 0, sp), G, e.basis.order);
  std::string d = "computed eliminant " + e.poly->to_string(sp.get());
  if (!equal) d += "; printed quartic differs" + std::string(member ? "" : " and is not in the ideal");
  return {equal, d};
}

Outcome dihedral_evidence() {
  auto I = network_ideal("example1_printed");
  auto guard = degree_guard_check(I);
  if (!guard) return {false, "degree guard issued no certificate"};
  auto e = eliminate(as_ideal(I), 0);
  if (!e.poly || e.poly->degree() != 4) return {false, "eliminant is not a quartic"};
  const std::set<CycleType> d8{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {4}};
  std::set<CycleType> seen;
  int seeds = 0;
  for (std::uint64_t seed = 1; seed <= 3; ++seed, ++seeds) {
    auto [f, s] = specialize_generic(*e.poly, I.space->params, seed, 10000);
    for (auto& t : cycle_types_mod_p(f, 200)) seen.insert(t);
  }
  bool ok = std::all_of(seen.begin(), seen.end(), [&](auto& t) { return d8.count(t) > 0; });
  std::vector<std::string> ts;
  for (auto& t : seen) ts.push_back(cycle_type_string(t));
  return {ok, "certificate: " + guard->reason + "; types over " + std::to_string(seeds) + " seeds: " + join(ts)};
}

Outcome pantea() {
  auto R = run_algorithm(load_network("pantea"));
  const VariableResult* z = nullptr;
  for (auto& v : R.variables)
    if (v.variable == "x_Z") z = &v;
  if (!z || !z->eliminated) return {false, "no eliminant in z"};
  std::string d = "deg_z " + std::to_string(z->eliminated->degree());
  bool ok = z->eliminated->degree() == 8;
  if (!z->verdict || !z->verdict->certificate) return {false, d + "; no insolvability certificate"};
  auto& v = *z->verdict;
  auto& c = *v.certificate;
  bool five = c.primitivity.cycle_type == CycleType{5, 3} || std::count(c.primitivity.cycle_type.begin(),
                                                                         c.primitivity.cycle_type.end(), 5) == 1;
  ok &= v.certified_specializations >= 2 && c.n_cycle.has_value() && five && c.route == "transposition" && c.verified;
  ok &= R.overall == Overall::ReductionImpossible;
  d += "; " + std::to_string(v.certified_specializations) + " certified specializations; group " + c.group;
  if (c.n_cycle) d += "; irreducible mod " + std::to_string(c.n_cycle->prime);
  d += "; 5-cycle via " + std::to_string(c.primitivity.prime) + cycle_type_string(c.primitivity.cycle_type);
  d += "; transposition via " + std::to_string(c.generator.prime) + cycle_type_string(c.generator.cycle_type);
  d += "; overall " + std::string(to_string(R.overall));
  return {ok, d};
}

Outcome modified_pantea() {
  auto I = network_ideal("pantea_modified");
  auto sp = I.space;
  auto J = as_ideal(I);
  auto S = saturate_by_variables(J);
  std::vector<IntermediatePoly> printed{
      P(sp, "c_A*k4*x_X + 4*k5*x_Z^2"),
      P(sp, "-c_A*k4*x_X + 2*c_B*k3*x_Z - 2*k_3*x_X^2"),
      P(sp, "c_A*c_B*k3*k4 + 2*c_A*k4*k5*x_Z + 4*k_3*k5*x_X*x_Z"),
      P(sp, "c_A^2*k4^2*k5*x_X + c_A*c_B^2*k3^2*k4 + 4*c_A*k_3*k4*k5*x_X^2 + 4*k_3^2*k5*x_X^3"),
      P(sp, "-c_A*k4*x_X - 2*c_B^2*k_1 + c_B*k2*x_Y + 2*k1*x_Y^2")};
  bool ok = ideals_equal(S.gens, printed, 3);
  std::string d = ok ? "saturation equals the printed generators" : "saturation differs from the printed generators";

  // Expected factor degrees and groups per variable, before and after.
  struct Want {
    std::vector<int> before, after;
    std::map<int, std::string> groups;
  };
  std::vector<Want> want{{{3, 1}, {3}, {{3, "S3"}, {1, "e"}}},
                         {{6, 2}, {6}, {{6, "S4xC2"}, {2, "C2"}}},
                         {{3, 1}, {3}, {{3, "S3"}, {1, "e"}}}};
  GaloisOptions o;
  for (std::size_t v = 0; v < 3; ++v) {
    auto pre = eliminate(J, v).poly, post = eliminate(S, v).poly;
    if (!pre || !post) return {false, d + "; missing eliminant"};
    auto shape = generic_factor_shape(*pre, sp->params, 5, 1);
    auto after = generic_factor_shape(*post, sp->params, 5, 1);
    bool stable = shape.tally.size() == 1 && after.tally.size() == 1;
    auto verdict = solvability_verdict(*pre, sp->params, o);
    bool groups = verdict.factors.size() == want[v].groups.size();
    for (auto& f : verdict.factors) {
      auto it = want[v].groups.find(f.degree);
      bool consistent = it != want[v].groups.end() &&
                        (f.label == it->second ||
                         std::find(f.consistent_groups.begin(), f.consistent_groups.end(), it->second) !=
                             f.consistent_groups.end());
      groups &= consistent;
    }
    bool v_ok = stable && shape.pattern == want[v].before && after.pattern == want[v].after && groups;
    ok &= v_ok;
    d += "; " + sp->vars[v] + " " + pattern_string(shape.pattern) + " -> " + pattern_string(after.pattern);
    std::vector<std::string> labels;
    for (auto& f : verdict.factors) labels.push_back(f.label.empty() ? "?" : f.label);
    d += " [" + join(labels) + "]";
  }
  return {ok, d};
}

Outcome structural() {
  auto m = load_network("pantea_modified");
  auto gm = restrict_qosr(build_osr(m.crn), m.intermediates);
  auto c = treelike_certificate(m.crn, m.intermediates, partition_from_spec(gm, "X,Z|Y"));
  auto p = load_network("pantea");
  auto gp = restrict_qosr(build_osr(p.crn), p.intermediates);
  auto r = class_reachability(gp, finest_compatible_partition(gp));
  bool ok = c.verdict == CertificateVerdict::Certified && !r.acyclic;
  std::string cyc;
  for (auto k : r.cycle) cyc += (cyc.empty() ? "" : " -> ") + std::to_string(k);
  return {ok, std::string("modified: ") + (c.verdict == CertificateVerdict::Certified ? "Certified" : c.reason) +
                  "; original singleton classes " + (r.acyclic ? "acyclic" : "have a directed cycle")};
}

Outcome boundary() {
  auto R = run_algorithm(load_network("boundary_fail"));
  bool z_positive = false;
  for (auto& s : R.boundary)
    if (s.zeroed.size() == 1 && R.ideal.space->vars[s.zeroed[0]] == "x_Z")
      z_positive = s.kind == StratumKind::PositiveDimensional;
  bool ok = z_positive && R.overall == Overall::ReductionImpossible;
  return {ok, std::string("z = 0 stratum ") + (z_positive ? "positive-dimensional" : "not positive-dimensional") +
                  "; overall " + to_string(R.overall)};
}

Outcome properties() {
  std::vector<std::pair<std::string, PropertyResult>> rs{{"buchberger", buchberger_property(100)},
                                                         {"saturation chain", saturation_chain_property(40)},
                                                         {"bezout", bezout_property(100)},
                                                         {"factor round trip", factor_roundtrip_property(100)},
                                                         {"sturm", sturm_property(100)}};
  bool ok = true;
  std::vector<std::string> parts;
  for (auto& [name, r] : rs) {
    ok &= r.ok();
    parts.push_back(name + " " + std::to_string(r.cases - static_cast<int>(r.failures.size())) + "/" +
                    std::to_string(r.cases));
  }
  return {ok, join(parts)};
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all{
      {1, "Michaelis-Menten closed form", 1, michaelis_menten},
      {2, "printed quartic eliminant", 30, printed_eliminant},
      {3, "two-intermediate solvability and dihedral cycle types", 30, dihedral_evidence},
      {4, "Pantea network insolvable", 600, pantea},
      {5, "modified Pantea saturation and factor groups", 600, modified_pantea},
      {6, "structural certificate and cycle detection", 60, structural},
      {7, "boundary example", 10, boundary},
      {8, "property suites", 300, properties},
  };
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_pass = true;
  for (auto& c : all) {
    if (only && c.id != only) continue;
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    double t = seconds_since(t0);
    if (t > c.limit) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    all_pass &= o.pass;
    std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << " (" << c.name << ", " << std::fixed
              << std::setprecision(2) << t << " s): " << o.detail << "\n";
  }
  return all_pass ? 0 : 1;
}

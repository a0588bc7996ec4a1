// Acceptance suite: one PASS/FAIL line per criterion, sub-checks indented below.
#include "procdual/cones.hpp"
#include "procdual/geometry_io.hpp"
#include "procdual/sensitivity.hpp"
#include "procdual/suites.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

using namespace procdual;

namespace {

// Pinned tolerances. Set comparisons are exact; only wall time has a budget.
constexpr double kExampleSeconds = 5.0;
constexpr double kDualitySeconds = 5.0;
constexpr double kScalarSeconds = 2.0;
constexpr double kPropertySeconds = 600.0;
constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kRandomInstances = 200;
constexpr std::size_t kWeakPairs = 1000;
constexpr std::size_t kGeometrySamples = 1000;
constexpr std::size_t kBoxCases = 1000;
constexpr std::size_t kSlabCases = 20;

const std::string kData = PROCDUAL_DATA_DIR;

Vector iv(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Constraint c(std::initializer_list<long> a, Relation rel, long b) { return make_constraint(iv(a), rel, Rational(b)); }

const auto LE = Relation::LessEqual;
const auto LT = Relation::Less;
const auto EQ = Relation::Equal;

PolyhedralProcess load_process(const std::string& rel, std::size_t nz) {
  std::ifstream in(kData + "/" + rel);
  if (!in) throw MalformedInput(rel + ": cannot open");
  return make_process(read_polyhedron(in), nz);
}

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

  void check(const std::string& what, bool ok, const std::string& detail = {}) {
    lines_.push_back(std::string(ok ? "    ok    " : "    FAIL  ") + what + (detail.empty() ? "" : "  [" + detail + "]"));
    passed_ = passed_ && ok;
  }

  void info(const std::string& what) { lines_.push_back("    info  " + what); }

  void guard(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(what, false, std::string("exception: ") + e.what());
    }
  }

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void time_budget(double limit) {
    const double s = seconds();
    check("wall time < " + std::to_string(static_cast<int>(limit)) + " s", s < limit, std::to_string(s) + " s");
  }

  bool print() const {
    std::cout << title_ << ": " << (passed_ ? "PASS" : "FAIL") << '\n';
    for (const auto& l : lines_) std::cout << l << '\n';
    return passed_;
  }

 private:
  std::string title_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> lines_;
  bool passed_ = true;
};

// A = {y2 > 0} ∪ {y1 >= 0, y2 = 0}
PolySet set_a() {
  return PolySet(2, {Polyhedron::from_constraints(2, {c({0, -1}, LT, 0)}),
                     Polyhedron::from_constraints(2, {c({-1, 0}, LE, 0), c({0, 1}, EQ, 0)})});
}

bool criterion_1(const ProgramInstance& ex) {
  Criterion k("criterion 1 (worked example, exact)");
  k.guard("example pipeline", [&] {
    const PolySet s0 = feasible_set(ex, iv({0}));
    const PolySet s0_expected(2, {Polyhedron::from_constraints(2, {c({0, -1}, LT, 0), c({0, 1}, LE, 1)}),
                                  Polyhedron::singleton(iv({0, 0}))});
    k.check("S(0) = {0 < x2 <= 1} ∪ {(0,0)}", s0.same_set(s0_expected));

    const PolySet& graph = value_graph(ex).graph_v_plus;
    const PolySet interval_a(3, {Polyhedron::from_constraints(3, {c({-1, 0, 0}, LE, 1), c({0, 0, -1}, LT, 0)}),
                                 Polyhedron::from_constraints(3, {c({-1, 0, 0}, LE, 1), c({0, -1, 0}, LE, 0),
                                                                  c({0, 0, 1}, EQ, 0)})});
    const bool graph_ok = graph.same_set(interval_a);
    k.check("Graph(V+Y+) = [-1,inf) x A", graph_ok,
            graph_ok ? "" : "computed graph is ({-1} x Y+) ∪ ((-1,inf) x A)");
    const PolySet truth(3, {Polyhedron::from_constraints(3, {c({1, 0, 0}, EQ, -1), c({0, -1, 0}, LE, 0),
                                                             c({0, 0, -1}, LE, 0)}),
                            Polyhedron::from_constraints(3, {c({-1, 0, 0}, LT, 1), c({0, 0, -1}, LT, 0)}),
                            Polyhedron::from_constraints(3, {c({-1, 0, 0}, LT, 1), c({0, -1, 0}, LE, 0),
                                                             c({0, 0, 1}, EQ, 0)})});
    k.info(std::string("Graph(V+Y+) = ({-1} x Y+) ∪ ((-1,inf) x A): ") + (graph.same_set(truth) ? "yes" : "no"));
    k.info(std::string("closures of both sets agree: ") +
           (graph.closure().same_set(interval_a.closure()) ? "yes" : "no"));

    const SeparatorCone s = separator_cone(ex, iv({0, 0}));
    k.check("S_{Y+}((0,0)) = ray (0,0,1)", s.cone.same_set(Polyhedron::cone(3, {iv({0, 0, 1})})));
    k.check("separator formulas agree", s.formulas_agree);

    const PolyhedralProcess pos = load_process("processes/example3_positive_branch.txt", 1);
    const PolySet psi = psi_set(ex, pos);
    const bool psi_ok = psi.same_set(set_a());
    const PolySet open_half_origin(
        2, {Polyhedron::from_constraints(2, {c({0, -1}, LT, 0)}), Polyhedron::singleton(iv({0, 0}))});
    k.check("Psi(Delta) = A for the positive-branch Delta", psi_ok,
            psi_ok ? "" : std::string("computed Psi(Delta) = {y2 > 0} ∪ {(0,0)}: ") +
                              (psi.same_set(open_half_origin) ? "yes" : "no"));
    const Certificate v = verify_lagrange_multiplier(ex, pos, iv({0, 0}));
    const Clause* minimal = v.find("y0 minimal in P[Delta]");
    k.check("(0,0) certified minimal of P[Delta]", minimal && minimal->passed && v.passed());

    const PolyhedralProcess ms = minus_s_process(pick_dual_pair(s));
    const Certificate vm = verify_lagrange_multiplier(ex, ms, iv({0, 0}));
    k.check("Delta = -S certified not a multiplier", vm.precondition_ok() && !vm.passed());
    k.check("Psi(-S) = R x R+", psi_set(ex, ms).same_set(PolySet(Polyhedron::from_constraints(2, {c({0, -1}, LE, 0)}))));
  });
  k.time_budget(kExampleSeconds);
  return k.print();
}

bool criterion_2(const ProgramInstance& ex) {
  Criterion k("criterion 2 (duality example, exact)");
  k.guard("duality pipeline", [&] {
    const std::vector<Vector> nd{iv({0, 0}), iv({-1, 0}), iv({-10, 0})};
    const std::vector<Vector> not_nd{iv({1, 0}), iv({0, 1}), iv({0, -1})};
    for (const auto& y : nd) k.check("(" + format_vector(y, ",") + ") in ND(P(0))", is_nondominated_for_program(ex, y));
    for (const auto& y : not_nd) {
      k.check("(" + format_vector(y, ",") + ") not in ND(P(0))", !is_nondominated_for_program(ex, y));
    }
    std::vector<PolyhedralProcess> deltas;
    for (const auto& y : nd) {
      const StrongDualityResult r = strong_duality_witness(ex, y);
      k.check("strong duality at (" + format_vector(y, ",") + ")", r.certificate.passed() && r.multiplier.has_value());
      if (r.multiplier) deltas.push_back(r.multiplier->process);
    }
    std::size_t pairs = 0, ok = 0;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      for (const auto& y0 : nd) {
        const Certificate w = weak_duality_check(ex, y0, deltas[i], nd[i]);
        ++pairs;
        ok += w.precondition_ok() && w.passed();
      }
    }
    k.check("weak duality on all cross pairs", ok == pairs && pairs == 9,
            std::to_string(ok) + "/" + std::to_string(pairs));
  });
  k.time_budget(kDualitySeconds);
  return k.print();
}

bool criterion_3(const ProgramInstance& ex, const ProgramInstance& sc) {
  Criterion k("criterion 3 (derivative identity, exact)");
  const std::vector<Vector> zs{iv({-1}), iv({0}), iv({1})};
  for (const auto& [inst, y0] : {std::pair{&ex, iv({0, 0})}, std::pair{&sc, iv({1})}}) {
    k.guard(inst->id(), [&] {
      const LagrangeProcess lp = lagrange_process(*inst, y0);
      k.check(inst->id() + ": adjoint route = reflected tangent-cone route", lp.routes_agree);
      const Certificate cert = verify_derivative_identity(*inst, y0, zs);
      const Clause* graph = cert.find("graph level");
      k.check(inst->id() + ": graph level", graph && graph->passed);
      for (const auto& z : zs) {
        const Clause* at = cert.find("z = " + format_vector(z, ","));
        k.check(inst->id() + ": z = " + format_vector(z, ","), at && at->passed);
      }
      k.check(inst->id() + ": certificate", cert.passed(), cert.precondition_error);
    });
  }
  return k.print();
}

bool criterion_4(const ProgramInstance& sc, const ProgramInstance& inactive) {
  Criterion k("criterion 4 (scalar recovery, exact)");
  k.guard("scalar pipeline", [&] {
    const std::vector<Vector> zs{iv({-1}), {Rational(1, 2)}, iv({2})};
    const ScalarRecovery r = scalar_recovery_check(sc, zs);
    k.check("l0 = 1", r.ell0 && *r.ell0 == 1, r.ell0 ? format_rational(*r.ell0) : "none");
    k.check("y0 = 1", r.y0 == iv({1}));
    for (const auto& z : zs) {
      const OracleResult o = marginal_derivative_oracle(sc, r.y0, z);
      k.check("oracle DM(0,1)(" + format_vector(z, ",") + ") = {" + format_vector(negate(z), ",") + "}",
              o.stable && o.limit == std::vector<Vector>{negate(z)});
      const Clause* lag = r.certificate.find("z = " + format_vector(z, ",") + " Lagrange");
      k.check("Min L(-z) matches at z = " + format_vector(z, ","), lag && lag->passed);
    }
    k.check("scalar certificate", r.certificate.passed());
    const ScalarRecovery in = scalar_recovery_check(inactive, zs);
    k.check("inactive constraint: l0 = 0", in.ell0 && *in.ell0 == 0, in.ell0 ? format_rational(*in.ell0) : "none");
    k.check("inactive certificate", in.certificate.passed());
  });
  k.time_budget(kScalarSeconds);
  return k.print();
}

bool criteria_5_and_6(const std::vector<ProgramInstance>& bundled) {
  Criterion k5("criterion 5 (property suites)");
  Criterion k6("criterion 6 (multiplier inclusion exact)");
  std::size_t inc_cases = 0, inc_fail = 0;
  k5.guard("random corpus", [&] {
    const auto results = check_all(random_corpus(kSeed, kRandomInstances), worker_count());
    std::size_t mult = 0, mult_fail = 0, shape = 0, pairs = 0, viol = 0, errors = 0;
    std::string first_bad;
    for (const auto& r : results) {
      mult += r.multipliers;
      mult_fail += r.multiplier_failures;
      shape += r.shape_failures;
      pairs += r.dual_pairs;
      viol += r.weak_violations;
      errors += !r.error.empty();
      inc_cases += r.inclusion_cases;
      inc_fail += r.inclusion_failures;
      if (!r.passed() && first_bad.empty()) first_bad = r.id + (r.error.empty() ? "" : ": " + r.error);
    }
    k5.check("(i) " + std::to_string(results.size()) + " random instances usable", errors == 0 &&
             results.size() == kRandomInstances, std::to_string(errors) + " errors");
    k5.check("(i) built multipliers verified", mult_fail == 0 && mult >= kRandomInstances,
             std::to_string(mult - mult_fail) + "/" + std::to_string(mult));
    k5.check("(ii) weak duality violations = 0 over >= " + std::to_string(kWeakPairs) + " pairs",
             viol == 0 && pairs >= kWeakPairs, std::to_string(viol) + " of " + std::to_string(pairs));
    k5.check("(iii) pointed, full domain, strict containment", shape == 0,
             std::to_string(shape) + " of " + std::to_string(mult));
    if (!first_bad.empty()) k5.info("first failing instance: " + first_bad);
  });
  const std::vector<std::pair<std::string, std::function<SuiteResult()>>> suites{
      {"(iv)", [] { return bipolar_suite(kSeed, kGeometrySamples); }},
      {"(iv)", [] { return dd_round_trip_suite(kSeed, kGeometrySamples); }},
      {"(iv)", [] { return projection_grid_suite(kSeed, kGeometrySamples); }},
      {"(v)", [] { return box_translate_suite(kSeed, kBoxCases); }},
      {"(vi)", [] { return slab_suite(kSeed, kSlabCases); }},
  };
  for (const auto& [tag, run] : suites) {
    k5.guard(tag, [&] {
      const SuiteResult s = run();
      k5.check(tag + " " + s.name + ": 0 mismatches", s.passed(),
               std::to_string(s.failures) + " of " + std::to_string(s.cases) +
                   (s.counterexample.empty() ? "" : "; first: " + s.counterexample));
    });
  }
  k5.time_budget(kPropertySeconds);

  k6.guard("bundled corpus", [&] {
    for (const auto& inst : bundled) {
      for (const auto& y0 : marginal_min_points(inst, zeros(inst.nz()))) {
        const auto x0 = find_preimage(inst, y0);
        if (!x0 || !is_minimal(y0, value_set(inst, zeros(inst.nz())), inst.yplus())) continue;
        const StrongDualityResult r = strong_duality_witness(inst, y0);
        if (!r.multiplier) {
          k6.check(inst.id() + ": multiplier built", false);
          continue;
        }
        const PolySet set = multiplier_inclusion_set(inst, r.multiplier->process, *x0);
        ++inc_cases;
        const bool zero = set.same_set(PolySet(Polyhedron::singleton(zeros(inst.ny()))));
        inc_fail += !zero;
        k6.check(inst.id() + ": Delta(G(x0)+Z+) ∩ (-Y+) = {0} at y0 = (" + format_vector(y0, ",") + ")", zero);
      }
    }
  });
  k6.check("every certified-minimal case, random corpus included", inc_fail == 0 && inc_cases > 0,
           std::to_string(inc_cases - inc_fail) + "/" + std::to_string(inc_cases));
  const bool p5 = k5.print();
  const bool p6 = k6.print();
  return p5 && p6;
}

}  // namespace

int main() {
  bool all = true;
  try {
    const ProgramInstance ex = load_instance_file(kData + "/corpus/example3.json");
    const ProgramInstance sc = load_instance_file(kData + "/corpus/scalar.json");
    const ProgramInstance inactive = load_instance_file(kData + "/corpus/scalar_inactive.json");
    all &= criterion_1(ex);
    all &= criterion_2(ex);
    all &= criterion_3(ex, sc);
    all &= criterion_4(sc, inactive);
    all &= criteria_5_and_6({ex, sc, inactive});
  } catch (const std::exception& e) {
    std::cout << "acceptance aborted: " << e.what() << '\n';
    return 2;
  }
  std::cout << "acceptance: " << (all ? "PASS" : "FAIL") << '\n';
  return all ? 0 : 1;
}

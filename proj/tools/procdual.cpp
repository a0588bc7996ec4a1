#include "procdual/cones.hpp"
#include "procdual/geometry_io.hpp"
#include "procdual/sensitivity.hpp"
#include "procdual/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace procdual;
namespace fs = std::filesystem;

namespace {

struct Options {
  std::string instance, y0, y1, process, out, dir;
  std::vector<std::string> z;
  std::uint64_t seed = 0;
  bool seeded = false;
  std::size_t count = 200;
  bool json = false, timing = false;
};

struct Context {
  explicit Context(const Options& o) : opt(o) {}

  const Options& opt;
  RunReport report;

  const ProgramInstance& instance() {
    if (!inst_) {
      if (opt.instance.empty()) throw MalformedInput("--instance is required");
      inst_ = load_instance_file(opt.instance);
      report.instance_id = inst_->id();
      report.inputs.emplace_back("instance", opt.instance);
    }
    return *inst_;
  }

  Vector point(const std::string& flag, const std::string& text, std::size_t dim) {
    if (text.empty()) throw MalformedInput(flag + " is required");
    Vector v = parse_vector(text);
    if (v.size() != dim) {
      throw MalformedInput(flag + " has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(dim));
    }
    report.inputs.emplace_back(flag.substr(2), format_vector(v, ","));
    return v;
  }

  Vector y0() { return point("--y0", opt.y0, instance().ny()); }
  Vector y1() { return point("--y1", opt.y1, instance().ny()); }

  std::vector<Vector> zs() {
    const std::size_t nz = instance().nz();
    std::vector<Vector> out;
    for (const auto& t : opt.z) out.push_back(point("--z", t, nz));
    if (out.empty()) {
      out.push_back(zeros(nz));
      for (std::size_t i = 0; i < nz; ++i) {
        Vector e = zeros(nz);
        e[i] = 1;
        out.push_back(e);
        out.push_back(negate(e));
      }
    }
    return out;
  }

  PolyhedralProcess process() {
    if (opt.process.empty()) throw MalformedInput("--process is required");
    std::ifstream in(opt.process);
    if (!in) throw MalformedInput(opt.process + ": cannot open");
    try {
      report.inputs.emplace_back("process", opt.process);
      return make_process(read_polyhedron(in), instance().nz());
    } catch (const MalformedInput& e) {
      throw MalformedInput(opt.process + ": " + e.what());
    }
  }

 private:
  std::optional<ProgramInstance> inst_;
};

std::string set_text(const PolySet& s) { return s.is_empty() ? "empty" : to_text(s); }

void cmd_validate(Context& c) {
  Certificate cert;
  cert.title = "instance validation";
  for (const auto& item : validate(c.instance())) {
    if (item.fatal) {
      cert.add(item.check, item.check, item.passed, item.detail);
    } else {
      cert.note(item.check, item.check, item.passed, item.detail);
    }
  }
  const SlaterResult s = slater_check(c.instance());
  cert.note("Slater", "G(x1) ∩ −int Z+ ≠ ∅ for some x1 ∈ Ω", s.holds, s.x1 ? "x1 = (" + format_vector(*s.x1, ",") + ")" : "");
  c.report.certificates.push_back(std::move(cert));
}

void cmd_feasible(Context& c) {
  if (c.opt.z.size() != 1) throw MalformedInput("feasible takes exactly one --z");
  const Vector z = c.point("--z", c.opt.z.front(), c.instance().nz());
  c.report.result("S(z)", set_text(feasible_set(c.instance(), z)));
  c.report.result("P(z)", set_text(value_set(c.instance(), z)));
}

void cmd_value_graph(Context& c) {
  const ValueMaps& v = value_graph(c.instance());
  c.report.result("Graph(V)", set_text(v.graph_v));
  c.report.result("Graph(V+Y+)", set_text(v.graph_v_plus));
}

void cmd_nd_check(Context& c) {
  const Vector y0 = c.y0();
  const bool nd = is_nondominated_for_program(c.instance(), y0);
  c.report.result("nondominated", nd ? "true" : "false");
  c.report.result("minimal", is_minimal(y0, value_set(c.instance(), zeros(c.instance().nz())), c.instance().yplus())
                                 ? "true"
                                 : "false");
  Certificate cert;
  cert.title = "nondominated point of P(0)";
  cert.add("nondominated", "y0 ∈ cl V(0) and V(0) ∩ (y0 − Y+) ⊆ y0 + Y+", nd);
  c.report.certificates.push_back(std::move(cert));
}

void cmd_s_cone(Context& c) {
  const SeparatorCone s = separator_cone(c.instance(), c.y0());
  c.report.result("tangent cone", to_text(s.tangent_cone));
  c.report.result("separator cone", to_text(s.cone));
  Certificate cert;
  cert.title = "separator cone";
  cert.add("formulas agree", "polar of the tangent cone = defining inequalities", s.formulas_agree);
  const DualPair pair = pick_dual_pair(s);
  cert.witness("z*", format_vector(pair.z_star, ","));
  cert.witness("y*", format_vector(pair.y_star, ","));
  c.report.certificates.push_back(std::move(cert));
}

void cmd_build_multiplier(Context& c) {
  const DualPair pair = pick_dual_pair(separator_cone(c.instance(), c.y0()));
  const BuiltMultiplier b = build_multiplier(pair, c.instance().yplus());
  c.report.result("Delta", to_text(b.process.graph));
  Certificate cert;
  cert.title = "built multiplier";
  cert.witness("z*", format_vector(pair.z_star, ","));
  cert.witness("y*", format_vector(pair.y_star, ","));
  cert.witness("t0", format_rational(b.t0));
  cert.witness("delta", format_rational(b.delta));
  cert.add("strict containment", "T(g) > 0 for every nonzero g ∈ Graph(Δ)", b.strict_containment);
  cert.add("pointed", "Graph(Δ) ∩ −Graph(Δ) = {0}", b.process.pointed);
  cert.add("full domain", "Dom(Δ) = Z", b.process.domain_full);
  c.report.certificates.push_back(std::move(cert));
}

void cmd_verify_multiplier(Context& c) {
  const PolyhedralProcess delta = c.process();
  c.report.certificates.push_back(verify_lagrange_multiplier(c.instance(), delta, c.y0()));
}

void cmd_psi(Context& c) { c.report.result("Psi(Delta)", set_text(psi_set(c.instance(), c.process()))); }

void cmd_phi_member(Context& c) {
  const PolyhedralProcess delta = c.process();
  const Vector y = c.y1();
  Certificate cert;
  cert.title = "Phi membership";
  cert.add("y in Phi(Delta)", "y ∈ cl Ψ(Δ) and Ψ(Δ) ∩ (y − Y+) ⊆ y + Y+", phi_member(c.instance(), delta, y));
  c.report.certificates.push_back(std::move(cert));
}

void cmd_weak_dual(Context& c) {
  const PolyhedralProcess delta = c.process();
  const Vector y0 = c.y0(), y1 = c.y1();
  c.report.certificates.push_back(weak_duality_check(c.instance(), y0, delta, y1));
}

void cmd_strong_dual(Context& c) {
  StrongDualityResult r = strong_duality_witness(c.instance(), c.y0());
  c.report.certificates.push_back(std::move(r.certificate));
}

void cmd_lagrange_process(Context& c) {
  const LagrangeProcess lp = lagrange_process(c.instance(), c.y0());
  c.report.result("Graph(L)", to_text(lp.process.graph));
  c.report.result("tangent cone", to_text(lp.tangent_cone));
  Certificate cert;
  cert.title = "Lagrange process";
  cert.add("routes agree", "adjoint of the separator cone = reflected tangent cone", lp.routes_agree);
  cert.note("pointed", "Graph(L) ∩ −Graph(L) = {0}", lp.process.pointed);
  c.report.certificates.push_back(std::move(cert));
}

void cmd_derivative_check(Context& c) {
  const Vector y0 = c.y0();
  c.report.certificates.push_back(verify_derivative_identity(c.instance(), y0, c.zs()));
}

std::string trace_text(const OracleResult& o) {
  std::ostringstream out;
  for (const auto& step : o.trace) {
    out << "h = " << format_rational(step.h) << ":";
    for (const auto& q : step.quotients) out << " (" << format_vector(q, ",") << ")";
    out << '\n';
  }
  out << (o.stable ? "stable" : "inconclusive") << '\n';
  return out.str();
}

void cmd_sensitivity(Context& c) {
  const Vector y0 = c.y0();
  SensitivityReport r = sensitivity_report(c.instance(), y0, c.zs());
  c.report.result("certified by", r.certified_by.empty() ? "none" : r.certified_by);
  for (const auto& [z, o] : r.oracle) c.report.result("oracle z = " + format_vector(z, ","), trace_text(o));
  c.report.certificates.push_back(std::move(r.audit));
  c.report.certificates.push_back(std::move(r.comparison));
}

void cmd_scalar_check(Context& c) {
  ScalarRecovery r = scalar_recovery_check(c.instance(), c.zs());
  c.report.result("y0", format_vector(r.y0, ","));
  c.report.result("l0", r.ell0 ? format_rational(*r.ell0) : "none");
  c.report.certificates.push_back(std::move(r.certificate));
}

void cmd_corpus_run(Context& c) {
  const Options& opt = c.opt;
  std::vector<ProgramInstance> corpus;
  if (!opt.dir.empty()) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(opt.dir)) {
      if (e.path().extension() == ".json") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) corpus.push_back(load_instance_file(f.string()));
    c.report.inputs.emplace_back("dir", opt.dir);
  }
  if (opt.seeded) {
    for (auto& inst : random_corpus(opt.seed, opt.count)) corpus.push_back(std::move(inst));
    c.report.inputs.emplace_back("seed", std::to_string(opt.seed));
    c.report.inputs.emplace_back("count", std::to_string(opt.count));
  }
  if (corpus.empty()) throw MalformedInput("corpus-run needs --dir or --seed");
  c.report.instance_id = "corpus";

  const auto results = check_all(corpus, worker_count());
  std::size_t mult = 0, mult_fail = 0, shape = 0, inc = 0, inc_fail = 0, pairs = 0, viol = 0, errors = 0;
  std::ostringstream matrix;
  for (const auto& r : results) {
    mult += r.multipliers;
    mult_fail += r.multiplier_failures;
    shape += r.shape_failures;
    inc += r.inclusion_cases;
    inc_fail += r.inclusion_failures;
    pairs += r.dual_pairs;
    viol += r.weak_violations;
    errors += !r.error.empty();
    matrix << r.id << "  multipliers " << r.multipliers - r.multiplier_failures << "/" << r.multipliers
           << "  inclusion " << r.inclusion_cases - r.inclusion_failures << "/" << r.inclusion_cases << "  weak "
           << r.dual_pairs - r.weak_violations << "/" << r.dual_pairs << "  "
           << (r.passed() ? "pass" : r.error.empty() ? "FAIL" : "error: " + r.error) << '\n';
  }
  c.report.result("matrix", matrix.str());

  Certificate cert;
  cert.title = "corpus invariants";
  const auto ratio = [](std::size_t bad, std::size_t all) {
    return std::to_string(all - bad) + "/" + std::to_string(all);
  };
  cert.add("multipliers verified", "every built multiplier passes the multiplier clauses", mult_fail == 0,
           ratio(mult_fail, mult));
  cert.add("multiplier shape", "built Δ pointed, closed, full domain, strictly inside Γ", shape == 0, ratio(shape, mult));
  cert.add("multiplier inclusion", "Δ(G(x0) + Z+) ∩ (−Y+) ⊆ Y+ ∩ (−Y+)", inc_fail == 0, ratio(inc_fail, inc));
  cert.add("weak duality", "no y0 < y1 for y1 ∈ Φ(Δ)", viol == 0, ratio(viol, pairs));
  cert.add("instances usable", "every instance validates and satisfies Slater", errors == 0,
           ratio(errors, results.size()));
  for (const auto& r : results) {
    if (r.passed()) continue;
    const auto it = std::find_if(corpus.begin(), corpus.end(), [&](const auto& i) { return i.id() == r.id; });
    const ProgramInstance small = minimize_counterexample(*it, [](const ProgramInstance& t) {
      const InstanceCheck k = check_instance(t);
      return k.error.empty() && !k.passed();
    });
    cert.witness("counterexample", dump_instance(small));
    for (const auto& f : r.failed) cert.witness("failed certificate", f.title);
    break;
  }
  c.report.certificates.push_back(std::move(cert));
}

const std::map<std::string, std::pair<std::string, std::function<void(Context&)>>>& commands() {
  static const std::map<std::string, std::pair<std::string, std::function<void(Context&)>>> table{
      {"validate", {"check the instance hypotheses", cmd_validate}},
      {"feasible", {"feasible set S(z) and values P(z)", cmd_feasible}},
      {"value-graph", {"graphs of V and V + Y+", cmd_value_graph}},
      {"nd-check", {"is y0 nondominated for P(0)", cmd_nd_check}},
      {"s-cone", {"separator cone at y0", cmd_s_cone}},
      {"build-multiplier", {"build a multiplier at y0", cmd_build_multiplier}},
      {"verify-multiplier", {"verify a process as a multiplier at y0", cmd_verify_multiplier}},
      {"psi", {"the set Psi(Delta)", cmd_psi}},
      {"phi-member", {"is y1 in Phi(Delta)", cmd_phi_member}},
      {"weak-dual", {"weak duality for y0 and y1", cmd_weak_dual}},
      {"strong-dual", {"strong duality witness at y0", cmd_strong_dual}},
      {"lagrange-process", {"the Lagrange process at y0", cmd_lagrange_process}},
      {"derivative-check", {"derivative identity at y0", cmd_derivative_check}},
      {"sensitivity", {"sensitivity hypotheses and oracle comparison", cmd_sensitivity}},
      {"scalar-check", {"scalar recovery of the multiplier", cmd_scalar_check}},
      {"corpus-run", {"invariant suite over a corpus", cmd_corpus_run}},
  };
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polyhedral set-valued duality and sensitivity"};
  app.require_subcommand(1);
  Options opt;
  for (const auto& [name, entry] : commands()) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    sub->add_option("--instance", opt.instance, "instance JSON file");
    sub->add_option("--y0", opt.y0, "point, e.g. \"0,0\"");
    sub->add_option("--y1", opt.y1, "dual candidate point");
    sub->add_option("--z", opt.z, "perturbation; repeatable")->allow_extra_args(false);
    sub->add_option("--process", opt.process, "process graph in geometry text format");
    sub->add_option("--dir", opt.dir, "directory of instance files");
    sub->add_option("--seed", opt.seed, "seed for a random corpus")->each([&](const std::string&) { opt.seeded = true; });
    sub->add_option("--count", opt.count, "random corpus size");
    sub->add_option("--out", opt.out, "write the report here instead of stdout");
    sub->add_flag("--json", opt.json, "machine-readable report");
    sub->add_flag("--timing", opt.timing, "include wall time");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  Context ctx(opt);
  ctx.report.command = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    commands().at(name).second(ctx);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  if (opt.timing) ctx.report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string text = opt.json ? render_json(ctx.report) : render_text(ctx.report);
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out);
    if (!(out << text)) {
      std::cerr << "error: cannot write " << opt.out << '\n';
      return 2;
    }
  }
  if (!ctx.report.precondition_ok()) return 2;
  return ctx.report.passed() ? 0 : 1;
}

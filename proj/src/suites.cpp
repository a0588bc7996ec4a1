#include "procdual/suites.hpp"

#include "procdual/cones.hpp"
#include "procdual/geometry_io.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace procdual {

long Rng::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(engine_() % span);
}

Rational Rng::rational(long radius, long max_den) {
  const long q = integer(1, max_den);
  return Rational(integer(-radius * q, radius * q), q);
}

Vector Rng::vector(std::size_t n, long radius, long max_den) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rational(radius, max_den));
  return v;
}

namespace {

Vector unit(std::size_t n, std::size_t i) {
  Vector v = zeros(n);
  v[i] = 1;
  return v;
}

Vector nonzero_vector(Rng& rng, std::size_t n, long radius) {
  for (;;) {
    Vector v = rng.vector(n, radius);
    if (!is_zero(v)) return v;
  }
}

// Orthant, or in the plane a skewed pointed solid cone.
std::vector<Vector> random_ordering_rays(Rng& rng, std::size_t n) {
  std::vector<Vector> rays;
  for (std::size_t i = 0; i < n; ++i) rays.push_back(unit(n, i));
  if (n == 2 && rng.chance(40)) {
    rays[0][1] = Rational(rng.integer(-1, 1), 2);
    rays[1][0] = Rational(rng.integer(-1, 1), 2);
  }
  return rays;
}

Relation random_relation(Rng& rng) {
  const long r = rng.integer(0, 9);
  return r < 6 ? Relation::LessEqual : r < 9 ? Relation::Less : Relation::Equal;
}

Polyhedron random_polyhedron(Rng& rng, std::size_t dim, std::size_t max_constraints) {
  std::vector<Constraint> cs;
  const long count = rng.integer(1, static_cast<long>(max_constraints));
  for (long i = 0; i < count; ++i) {
    cs.push_back(make_constraint(nonzero_vector(rng, dim, 3), random_relation(rng), Rational(rng.integer(-3, 3))));
  }
  return Polyhedron::from_constraints(dim, std::move(cs));
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

std::string describe(const Polyhedron& p) { return to_text(p); }

}  // namespace

ProgramInstance random_instance(Rng& rng, std::string id) {
  InstanceSource src;
  src.id = std::move(id);
  src.nx = static_cast<std::size_t>(rng.integer(1, 2));
  src.ny = static_cast<std::size_t>(rng.integer(1, 2));
  src.nz = static_cast<std::size_t>(rng.integer(1, 2));
  src.yplus_rays = random_ordering_rays(rng, src.ny);
  src.zplus_rays = random_ordering_rays(rng, src.nz);

  // Ω: a box, optionally cut by a halfspace that keeps the centre interior.
  std::vector<Constraint> omega;
  Vector centre;
  for (std::size_t i = 0; i < src.nx; ++i) {
    const long lo = rng.integer(-3, 0), hi = lo + rng.integer(1, 3);
    omega.push_back(make_constraint(negate(unit(src.nx, i)), Relation::LessEqual, Rational(-lo)));
    omega.push_back(make_constraint(unit(src.nx, i), Relation::LessEqual, Rational(hi)));
    centre.push_back(Rational(lo + hi, 2));
  }
  if (src.nx == 2 && rng.chance(50)) {
    const Vector a = nonzero_vector(rng, src.nx, 2);
    omega.push_back(make_constraint(a, Relation::LessEqual, dot(a, centre) + Rational(rng.integer(1, 4), 2)));
  }
  src.omega = SetSource::single(std::move(omega));

  // F(x) = A x + b.
  std::vector<Constraint> f;
  for (std::size_t j = 0; j < src.ny; ++j) {
    Vector row = negate(rng.vector(src.nx, 2));
    row.resize(src.nx + src.ny);
    row[src.nx + j] = 1;
    f.push_back(make_constraint(std::move(row), Relation::Equal, Rational(rng.integer(-2, 2))));
  }
  src.graph_f = SetSource::single(std::move(f));

  // G(x) = C x + d with G(centre) = −(sum of the rays of Z₊).
  Vector zsum = zeros(src.nz);
  for (const auto& r : src.zplus_rays) zsum = add(zsum, r);
  std::vector<Constraint> g;
  for (std::size_t k = 0; k < src.nz; ++k) {
    const Vector c = rng.vector(src.nx, 2);
    Vector row = negate(c);
    row.resize(src.nx + src.nz);
    row[src.nx + k] = 1;
    g.push_back(make_constraint(std::move(row), Relation::Equal, -zsum[k] - dot(c, centre)));
  }
  src.graph_g = SetSource::single(std::move(g));
  return ProgramInstance(std::move(src));
}

std::vector<ProgramInstance> random_corpus(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<ProgramInstance> out;
  const std::size_t width = std::to_string(count).size();
  for (std::size_t i = 0; i < count; ++i) {
    std::string n = std::to_string(i);
    n.insert(0, width - n.size(), '0');
    out.push_back(random_instance(rng, "random-" + std::to_string(seed) + "-" + n));
  }
  return out;
}

InstanceCheck check_instance(const ProgramInstance& inst, std::size_t max_points, std::size_t pairs_wanted) {
  InstanceCheck out;
  out.id = inst.id();
  try {
    if (!validation_passed(validate(inst))) {
      out.error = "instance fails validation";
      return out;
    }
    if (!slater_check(inst).holds) {
      out.error = "Slater condition fails";
      return out;
    }
    out.y0s = marginal_min_points(inst, zeros(inst.nz()));
    if (out.y0s.size() > max_points) out.y0s.resize(max_points);

    std::vector<PolyhedralProcess> candidates;
    for (const auto& y0 : out.y0s) {
      StrongDualityResult sd = strong_duality_witness(inst, y0);
      if (!sd.multiplier) {
        sd.certificate.title += " [" + inst.id() + "]";
        out.failed.push_back(std::move(sd.certificate));
        ++out.multiplier_failures;
        continue;
      }
      const BuiltMultiplier& b = *sd.multiplier;
      ++out.multipliers;
      Certificate v = verify_lagrange_multiplier(inst, b.process, y0);
      const bool ok = v.passed() && sd.certificate.passed();
      if (!ok) ++out.multiplier_failures;
      if (!(b.process.pointed && b.process.domain_full && b.strict_containment && b.process.closed)) {
        ++out.shape_failures;
      }
      if (const Clause* inc = v.find("multiplier inclusion")) {
        ++out.inclusion_cases;
        if (!inc->passed) ++out.inclusion_failures;
      }
      if (!ok) {
        v.title += " [" + inst.id() + "]";
        out.failed.push_back(std::move(v));
      }
      candidates.push_back(b.process);
      const DualPair pair = pick_dual_pair(separator_cone(inst, y0));
      candidates.push_back(minus_s_process(pair));
    }

    // Further candidates from random dual pairs with T(0, y+) > 0.
    Rng rng(fnv1a(inst.id()));
    const Vector yp = inst.yplus().ray_sum();
    for (int tries = 0; tries < 12 && candidates.size() < 7; ++tries) {
      const DualPair pair{rng.vector(inst.nz(), 2), nonzero_vector(rng, inst.ny(), 2)};
      if (dot(pair.y_star, yp) <= 0) continue;
      candidates.push_back(build_multiplier(pair, inst.yplus()).process);
    }

    for (const auto& delta : candidates) {
      if (out.dual_pairs >= pairs_wanted) break;
      const PolySet psi = psi_set(inst, delta);
      for (const auto& y1 : minimal_extreme_points(psi, inst.yplus())) {
        if (!phi_member(psi, inst.yplus(), y1)) continue;
        for (const auto& y0 : out.y0s) {
          if (out.dual_pairs >= pairs_wanted) break;
          Certificate w = weak_duality_check(inst, y0, delta, y1);
          if (!w.precondition_ok()) continue;
          ++out.dual_pairs;
          if (!w.passed()) {
            ++out.weak_violations;
            w.title += " [" + inst.id() + "]";
            out.failed.push_back(std::move(w));
          }
        }
      }
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

unsigned worker_count() {
  if (const char* env = std::getenv("PROCDUAL_WORKERS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<InstanceCheck> check_all(const std::vector<ProgramInstance>& corpus, unsigned workers) {
  std::vector<InstanceCheck> results(corpus.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < corpus.size();) results[i] = check_instance(corpus[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < std::max(1u, workers); ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return results;
}

ProgramInstance minimize_counterexample(const ProgramInstance& inst,
                                        const std::function<bool(const ProgramInstance&)>& still_fails) {
  InstanceSource best = inst.source();
  bool progress = true;
  while (progress) {
    progress = false;
    for (SetSource* set : {&best.omega, &best.graph_f, &best.graph_g}) {
      for (std::size_t p = 0; p < set->pieces.size(); ++p) {
        for (std::size_t c = 0; c < set->pieces[p].size(); ++c) {
          InstanceSource trial = best;
          SetSource* tset = set == &best.omega ? &trial.omega : set == &best.graph_f ? &trial.graph_f : &trial.graph_g;
          tset->pieces[p].erase(tset->pieces[p].begin() + static_cast<long>(c));
          try {
            if (still_fails(ProgramInstance(trial))) {
              best = std::move(trial);
              progress = true;
              break;
            }
          } catch (const std::exception&) {
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  return ProgramInstance(std::move(best));
}

SuiteResult bipolar_suite(std::uint64_t seed, std::size_t n) {
  SuiteResult r{"bipolar", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t dim = static_cast<std::size_t>(rng.integer(1, 3));
    std::vector<Vector> rays, lines;
    for (long k = rng.integer(1, 4); k > 0; --k) rays.push_back(nonzero_vector(rng, dim, 3));
    if (rng.chance(15)) lines.push_back(nonzero_vector(rng, dim, 2));
    const Polyhedron c = Polyhedron::cone(dim, rays, lines);
    ++r.cases;
    if (!polar_positive(polar_positive(c)).same_set(c)) {
      if (r.failures++ == 0) r.counterexample = describe(c);
    }
  }
  return r;
}

SuiteResult dd_round_trip_suite(std::uint64_t seed, std::size_t n) {
  SuiteResult r{"double description round trip", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t dim = static_cast<std::size_t>(rng.integer(1, 3));
    // Keep the raw system for the pointwise oracle.
    std::vector<Constraint> raw;
    for (long k = rng.integer(1, 5); k > 0; --k) {
      raw.push_back(make_constraint(nonzero_vector(rng, dim, 3), random_relation(rng), Rational(rng.integer(-3, 3))));
    }
    const Polyhedron p = Polyhedron::from_constraints(dim, raw);
    const Polyhedron q = Polyhedron::from_generators(dim, p.generators());
    bool ok = q.same_set(p) && Polyhedron::from_constraints(dim, q.constraints()).same_set(p);
    for (int s = 0; s < 20 && ok; ++s) {
      const Vector x = rng.vector(dim, 3, 2);
      const bool inside = std::all_of(raw.begin(), raw.end(), [&](const Constraint& c) { return c.satisfied_by(x); });
      ok = inside == q.contains(x);
    }
    ++r.cases;
    if (!ok && r.failures++ == 0) r.counterexample = describe(p);
  }
  return r;
}

SuiteResult projection_grid_suite(std::uint64_t seed, std::size_t n) {
  SuiteResult r{"projection vs grid oracle", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const Polyhedron p = random_polyhedron(rng, 3, 5);
    const std::size_t drop = static_cast<std::size_t>(rng.integer(0, 2));
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < 3; ++k) {
      if (k != drop) kept.push_back(k);
    }
    const Polyhedron proj = project(p, kept);
    bool ok = true;
    for (long a = -2; a <= 2 && ok; ++a) {
      for (long b = -2; b <= 2 && ok; ++b) {
        const Vector pt{Rational(a), Rational(b)};
        const bool fibre = !p.add_constraints({make_constraint(unit(3, kept[0]), Relation::Equal, pt[0]),
                                               make_constraint(unit(3, kept[1]), Relation::Equal, pt[1])})
                                .is_empty();
        ok = fibre == proj.contains(pt);
      }
    }
    ++r.cases;
    if (!ok && r.failures++ == 0) r.counterexample = describe(p);
  }
  return r;
}

SuiteResult box_translate_suite(std::uint64_t seed, std::size_t n) {
  SuiteResult r{"cone of a box translate", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t dim = static_cast<std::size_t>(rng.integer(1, 3));
    Vector x0 = rng.vector(dim, 3, 2);
    Rational norm = 0;
    for (const auto& v : x0) norm = std::max(norm, Rational(abs(v)));
    if (norm == 0) {
      x0[0] = 1;
      norm = 1;
    }
    const Rational delta = norm * Rational(rng.integer(1, 9), 10);
    const auto b = cone_of_box_translate(x0, delta);
    ++r.cases;
    if (!(b.closed && b.pointed) && r.failures++ == 0) {
      r.counterexample = "x0 = (" + format_vector(x0, ",") + "), delta = " + format_rational(delta);
    }
  }
  return r;
}

SuiteResult slab_suite(std::uint64_t seed, std::size_t n) {
  SuiteResult r{"slab closure", 0, 0, {}};
  Rng rng(seed);
  while (r.cases < n) {
    const std::size_t dim = static_cast<std::size_t>(rng.integer(2, 3));
    std::vector<Vector> functionals;
    Vector t = zeros(dim);
    Rational weight = 0;
    for (long k = rng.integer(1, static_cast<long>(dim) - 1); k > 0; --k) {
      functionals.push_back(nonzero_vector(rng, dim, 2));
      const Rational lambda = rng.integer(1, 2);
      t = subtract(t, scale(functionals.back(), lambda));
      weight += lambda;
    }
    if (is_zero(t)) continue;
    const Rational eps(rng.integer(1, 4), 2);
    Vector x0 = rng.vector(dim, 2);
    const Rational gap = eps * weight - dot(t, x0);
    if (gap >= 0) x0 = add(x0, scale(t, gap / dot(t, t) + 1));
    const auto s = slab_cone_closure(x0, functionals, eps, t);
    ++r.cases;
    if (!(s.subspace_contained && s.decomposition_holds) && r.failures++ == 0) {
      r.counterexample = "x0 = (" + format_vector(x0, ",") + "), T = (" + format_vector(t, ",") + ")";
    }
  }
  return r;
}

}  // namespace procdual

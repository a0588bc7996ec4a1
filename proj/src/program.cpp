#include "procdual/program.hpp"

#include "procdual/lift.hpp"

#include <json.hpp>

#include <fstream>
#include <mutex>
#include <sstream>

namespace procdual {

using nlohmann::json;

namespace {

AffineMap negated(AffineMap m) {
  for (auto& r : m.rows) r = negate(r);
  m.constant = negate(m.constant);
  return m;
}

AffineMap constant_map(std::size_t dim, std::span<const Rational> value) {
  AffineMap m;
  m.rows.assign(value.size(), zeros(dim));
  m.constant.assign(value.begin(), value.end());
  return m;
}

void check_size(std::span<const Rational> v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw MalformedInput(std::string(what) + ": expected " + std::to_string(n) + " coordinates, got " +
                         std::to_string(v.size()));
  }
}

std::vector<Vector> with_zero_prefix(std::size_t prefix, const std::vector<Vector>& vs) {
  std::vector<Vector> out;
  for (const auto& v : vs) {
    Vector w = zeros(prefix);
    w.insert(w.end(), v.begin(), v.end());
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

PolySet SetSource::build(std::size_t dim) const {
  std::vector<Polyhedron> out;
  for (const auto& cs : pieces) {
    for (const auto& c : cs) {
      if (c.coeffs.size() != dim) {
        throw MalformedInput("constraint has " + std::to_string(c.coeffs.size()) + " coefficients, expected " +
                             std::to_string(dim));
      }
    }
    out.push_back(Polyhedron::from_constraints(dim, cs));
  }
  return PolySet(dim, std::move(out));
}

struct ProgramInstance::Cache {
  std::once_flag once;
  std::optional<ValueMaps> maps;
};

ProgramInstance::ProgramInstance(InstanceSource src)
    : src_(std::move(src)),
      yplus_(OrderingCone::from_rays(src_.ny, src_.yplus_rays)),
      zplus_(OrderingCone::from_rays(src_.nz, src_.zplus_rays)),
      omega_(src_.omega.build(src_.nx)),
      graph_f_(src_.graph_f.build(src_.nx + src_.ny)),
      graph_g_(src_.graph_g.build(src_.nx + src_.nz)),
      cache_(std::make_shared<Cache>()) {
  if (src_.nx == 0 || src_.ny == 0 || src_.nz == 0) throw MalformedInput("instance dimensions must be positive");
}

const ValueMaps& ProgramInstance::value_maps() const {
  std::call_once(cache_->once, [&] {
    const std::size_t nx = this->nx(), ny = this->ny(), nz = this->nz();
    const std::size_t dim = nx + 2 * nz + ny;
    const AffineMap x = AffineMap::block(dim, 0, nx);
    const AffineMap g = AffineMap::block(dim, nx, nz);
    const AffineMap z = AffineMap::block(dim, nx + nz, nz);
    const AffineMap y = AffineMap::block(dim, nx + 2 * nz, ny);
    Lift lift(dim);
    lift.require(omega_, x);
    lift.require(graph_f_, AffineMap::stack(x, y));
    lift.require(graph_g_, AffineMap::stack(x, g));
    lift.require(zplus_.cone(), z - g);
    PolySet gv = lift.project_onto(iota_indices(nx + nz, dim));
    const auto& yg = yplus_.cone().generators();
    PolySet gvp = gv.add_rays(with_zero_prefix(nz, yg.rays), with_zero_prefix(nz, yg.lines));
    cache_->maps = ValueMaps{std::move(gv), std::move(gvp)};
  });
  return *cache_->maps;
}

// ---------------------------------------------------------------- JSON

namespace {

Rational rational_of(const json& j) {
  if (!j.is_string()) throw MalformedInput("rationals must be strings \"p/q\", got " + j.dump());
  return parse_rational(j.get<std::string>());
}

Vector vector_of(const json& j) {
  if (!j.is_array()) throw MalformedInput("expected an array of rationals, got " + j.dump());
  Vector v;
  for (const auto& e : j) v.push_back(rational_of(e));
  return v;
}

json json_of(std::span<const Rational> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(format_rational(x));
  return a;
}

std::vector<Constraint> constraints_of(const json& j) {
  if (!j.is_array()) throw MalformedInput("expected a constraint list");
  std::vector<Constraint> cs;
  for (const auto& c : j) {
    if (!c.is_object() || !c.contains("coeffs") || !c.contains("rel") || !c.contains("rhs")) {
      throw MalformedInput("constraint needs coeffs, rel and rhs: " + c.dump());
    }
    if (!c.at("rel").is_string()) throw MalformedInput("relation must be a string");
    cs.push_back(make_constraint(vector_of(c.at("coeffs")), parse_relation(c.at("rel").get<std::string>()),
                                 rational_of(c.at("rhs"))));
  }
  return cs;
}

json json_of(const std::vector<Constraint>& cs) {
  json a = json::array();
  for (const auto& c : cs) {
    a.push_back({{"coeffs", json_of(c.coeffs)}, {"rel", std::string(relation_token(c.rel))}, {"rhs", format_rational(c.rhs)}});
  }
  return a;
}

SetSource set_source_of(const json& j, const char* field) {
  try {
    if (j.is_object()) {
      if (!j.contains("pieces") || !j.at("pieces").is_array()) throw MalformedInput("expected {\"pieces\": [...]}");
      SetSource s;
      s.pieced = true;
      for (const auto& p : j.at("pieces")) s.pieces.push_back(constraints_of(p));
      return s;
    }
    return SetSource::single(constraints_of(j));
  } catch (const MalformedInput& e) {
    throw MalformedInput(std::string(field) + ": " + e.what());
  }
}

json json_of(const SetSource& s) {
  if (!s.pieced && s.pieces.size() == 1) return json_of(s.pieces.front());
  json pieces = json::array();
  for (const auto& p : s.pieces) pieces.push_back(json_of(p));
  return {{"pieces", pieces}};
}

std::vector<Vector> rays_of(const json& j, const char* field) {
  if (!j.is_array()) throw MalformedInput(std::string(field) + ": expected a ray list");
  std::vector<Vector> rays;
  for (const auto& r : j) rays.push_back(vector_of(r));
  return rays;
}

std::size_t dim_of(const json& dims, const char* key) {
  if (!dims.contains(key) || !dims.at(key).is_number_unsigned()) {
    throw MalformedInput(std::string("dims.") + key + " must be a positive integer");
  }
  return dims.at(key).get<std::size_t>();
}

}  // namespace

ProgramInstance load_instance(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("instance is not valid JSON: ") + e.what());
  }
  try {
    InstanceSource src;
    src.id = j.value("id", std::string("instance"));
    const json& dims = j.at("dims");
    src.nx = dim_of(dims, "x");
    src.ny = dim_of(dims, "y");
    src.nz = dim_of(dims, "z");
    src.yplus_rays = rays_of(j.at("cones").at("yplus"), "cones.yplus");
    src.zplus_rays = rays_of(j.at("cones").at("zplus"), "cones.zplus");
    src.omega = set_source_of(j.at("omega"), "omega");
    src.graph_f = set_source_of(j.at("graphF"), "graphF");
    src.graph_g = set_source_of(j.at("graphG"), "graphG");
    return ProgramInstance(std::move(src));
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("instance schema: ") + e.what());
  }
}

ProgramInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read instance file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return load_instance(ss.str());
  } catch (const MalformedInput& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

std::string dump_instance(const ProgramInstance& inst) {
  const auto& s = inst.source();
  json rays_y = json::array(), rays_z = json::array();
  for (const auto& r : s.yplus_rays) rays_y.push_back(json_of(r));
  for (const auto& r : s.zplus_rays) rays_z.push_back(json_of(r));
  json j = {{"id", s.id},
            {"dims", {{"x", s.nx}, {"y", s.ny}, {"z", s.nz}}},
            {"cones", {{"yplus", rays_y}, {"zplus", rays_z}}},
            {"omega", json_of(s.omega)},
            {"graphF", json_of(s.graph_f)},
            {"graphG", json_of(s.graph_g)}};
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------- maps

std::vector<ValidationItem> validate(const ProgramInstance& inst) {
  std::vector<ValidationItem> out;
  auto item = [&](std::string name, bool ok, bool fatal, std::string detail) {
    out.push_back({std::move(name), ok, fatal, ok ? std::string() : std::move(detail)});
  };
  item("omega convex", inst.omega().is_convex(), true, "the union of omega pieces is not convex");
  const auto& yg = inst.yplus().cone().generators();
  const PolySet epi_f = inst.graph_f().add_rays(with_zero_prefix(inst.nx(), yg.rays), with_zero_prefix(inst.nx(), yg.lines));
  item("Epi(F) convex", epi_f.is_convex(), true, "graphF + {0}×Y+ is not convex");
  const auto& zg = inst.zplus().cone().generators();
  const PolySet epi_g = inst.graph_g().add_rays(with_zero_prefix(inst.nx(), zg.rays), with_zero_prefix(inst.nx(), zg.lines));
  item("Epi(G) convex", epi_g.is_convex(), true, "graphG + {0}×Z+ is not convex");
  item("Y+ proper", inst.yplus().proper(), true, "Y+ is {0} or the whole space");
  item("Y+ solid", inst.yplus().solid(), true, "Y+ has empty interior");
  item("Z+ proper", inst.zplus().proper(), true, "Z+ is {0} or the whole space");
  item("Z+ solid", inst.zplus().solid(), true, "Z+ has empty interior");
  item("Y+ pointed", inst.yplus().pointed(), false, "pointedness required for sensitivity features");
  return out;
}

bool validation_passed(const std::vector<ValidationItem>& items) {
  for (const auto& i : items) {
    if (i.fatal && !i.passed) return false;
  }
  return true;
}

PolySet feasible_set(const ProgramInstance& inst, std::span<const Rational> z) {
  check_size(z, inst.nz(), "z");
  const std::size_t nx = inst.nx(), dim = nx + inst.nz();
  const AffineMap x = AffineMap::block(dim, 0, nx);
  const AffineMap g = AffineMap::block(dim, nx, inst.nz());
  Lift lift(dim);
  lift.require(inst.omega(), x);
  lift.require(inst.graph_g(), AffineMap::block(dim, 0, dim));
  lift.require(inst.zplus().cone(), negated(g) + Vector(z.begin(), z.end()));
  return lift.project_onto(iota_indices(0, nx));
}

PolySet value_set(const ProgramInstance& inst, std::span<const Rational> z) {
  check_size(z, inst.nz(), "z");
  const std::size_t nx = inst.nx(), nz = inst.nz(), dim = nx + nz + inst.ny();
  const AffineMap x = AffineMap::block(dim, 0, nx);
  const AffineMap g = AffineMap::block(dim, nx, nz);
  const AffineMap y = AffineMap::block(dim, nx + nz, inst.ny());
  Lift lift(dim);
  lift.require(inst.omega(), x);
  lift.require(inst.graph_f(), AffineMap::stack(x, y));
  lift.require(inst.graph_g(), AffineMap::stack(x, g));
  lift.require(inst.zplus().cone(), negated(g) + Vector(z.begin(), z.end()));
  return lift.project_onto(iota_indices(nx + nz, dim));
}

PolySet slice(const PolySet& graph, std::span<const Rational> z) {
  if (z.size() >= graph.dim()) throw MalformedInput("slice: z has too many coordinates");
  const std::size_t ny = graph.dim() - z.size();
  Lift lift(ny);
  lift.require(graph, AffineMap::stack(constant_map(ny, z), AffineMap::block(ny, 0, ny)));
  return PolySet(ny, lift.polyhedra());
}

const ValueMaps& value_graph(const ProgramInstance& inst) { return inst.value_maps(); }

SlaterResult slater_check(const ProgramInstance& inst) {
  if (!inst.zplus().solid()) throw PreconditionError("Slater check requires a solid Z+");
  const std::size_t nx = inst.nx(), dim = nx + inst.nz();
  Lift lift(dim);
  lift.require(inst.omega(), AffineMap::block(dim, 0, nx));
  lift.require(inst.graph_g(), AffineMap::block(dim, 0, dim));
  lift.require(inst.zplus().interior(), negated(AffineMap::block(dim, nx, inst.nz())));
  SlaterResult out;
  for (const auto& p : lift.polyhedra()) {
    if (p.is_empty()) continue;
    const Vector w = p.some_point();
    out.holds = true;
    out.x1 = Vector(w.begin(), w.begin() + nx);
    out.g1 = Vector(w.begin() + nx, w.end());
    break;
  }
  return out;
}

std::vector<Vector> marginal_min_points(const ProgramInstance& inst, std::span<const Rational> z) {
  return minimal_extreme_points(value_set(inst, z), inst.yplus());
}

std::optional<Vector> find_preimage(const ProgramInstance& inst, std::span<const Rational> y0) {
  check_size(y0, inst.ny(), "y0");
  const std::size_t nx = inst.nx(), dim = nx + inst.nz();
  const AffineMap x = AffineMap::block(dim, 0, nx);
  Lift lift(dim);
  lift.require(inst.omega(), x);
  lift.require(inst.graph_f(), AffineMap::stack(x, constant_map(dim, y0)));
  lift.require(inst.graph_g(), AffineMap::block(dim, 0, dim));
  lift.require(inst.zplus().cone(), negated(AffineMap::block(dim, nx, inst.nz())));
  for (const auto& p : lift.polyhedra()) {
    if (p.is_empty()) continue;
    const Vector w = p.some_point();
    return Vector(w.begin(), w.begin() + nx);
  }
  return std::nullopt;
}

PolySet image_f(const ProgramInstance& inst, std::span<const Rational> x) {
  check_size(x, inst.nx(), "x");
  const std::size_t ny = inst.ny();
  Lift lift(ny);
  lift.require(inst.graph_f(), AffineMap::stack(constant_map(ny, x), AffineMap::block(ny, 0, ny)));
  return PolySet(ny, lift.polyhedra());
}

PolySet image_g_plus(const ProgramInstance& inst, std::span<const Rational> x) {
  check_size(x, inst.nx(), "x");
  const std::size_t nz = inst.nz();
  Lift lift(nz);
  lift.require(inst.graph_g(), AffineMap::stack(constant_map(nz, x), AffineMap::block(nz, 0, nz)));
  const auto& zg = inst.zplus().cone().generators();
  return PolySet(nz, lift.polyhedra()).add_rays(zg.rays, zg.lines);
}

}  // namespace procdual

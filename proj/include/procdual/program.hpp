#pragma once

#include "procdual/order.hpp"

#include <memory>
#include <optional>
#include <string>

namespace procdual {

/// A set as written in an instance file: one constraint list per piece.
struct SetSource {
  std::vector<std::vector<Constraint>> pieces;
  bool pieced = false;  // written as {"pieces": [...]} rather than a bare list

  static SetSource single(std::vector<Constraint> cs) { return {{std::move(cs)}, false}; }
  PolySet build(std::size_t dim) const;
};

/// Raw instance data, kept for exact re-serialization.
struct InstanceSource {
  std::string id;
  std::size_t nx = 0, ny = 0, nz = 0;
  std::vector<Vector> yplus_rays, zplus_rays;
  SetSource omega, graph_f, graph_g;
};

struct ValueMaps {
  PolySet graph_v;       // in Z×Y
  PolySet graph_v_plus;  // graph_v + {0}×Y₊
};

struct ValidationItem {
  std::string check;
  bool passed;
  bool fatal;  // false: warning only
  std::string detail;
};

struct SlaterResult {
  bool holds = false;
  std::optional<Vector> x1;
  std::optional<Vector> g1;  // G-value in -int Z₊
};

/// min F(x) subject to x ∈ Ω, G(x) ∩ (z - Z₊) ≠ ∅, with polyhedral graphs.
/// Variables of graphF are (x, y); of graphG are (x, g).
class ProgramInstance {
 public:
  explicit ProgramInstance(InstanceSource src);

  const InstanceSource& source() const { return src_; }
  const std::string& id() const { return src_.id; }
  std::size_t nx() const { return src_.nx; }
  std::size_t ny() const { return src_.ny; }
  std::size_t nz() const { return src_.nz; }
  const OrderingCone& yplus() const { return yplus_; }
  const OrderingCone& zplus() const { return zplus_; }
  const PolySet& omega() const { return omega_; }
  const PolySet& graph_f() const { return graph_f_; }
  const PolySet& graph_g() const { return graph_g_; }

  /// Computed once per instance; safe for concurrent readers.
  const ValueMaps& value_maps() const;

 private:
  InstanceSource src_;
  OrderingCone yplus_, zplus_;
  PolySet omega_, graph_f_, graph_g_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

ProgramInstance load_instance(const std::string& json_text);
ProgramInstance load_instance_file(const std::string& path);
std::string dump_instance(const ProgramInstance& inst);

std::vector<ValidationItem> validate(const ProgramInstance& inst);
bool validation_passed(const std::vector<ValidationItem>& items);

/// S(z) ⊂ X.
PolySet feasible_set(const ProgramInstance& inst, std::span<const Rational> z);
/// V(z) = F(S(z)) ⊂ Y.
PolySet value_set(const ProgramInstance& inst, std::span<const Rational> z);
/// Slice {y : (z, y) ∈ graph}.
PolySet slice(const PolySet& graph, std::span<const Rational> z);
const ValueMaps& value_graph(const ProgramInstance& inst);

SlaterResult slater_check(const ProgramInstance& inst);

/// Minimal extreme points of V(z).
std::vector<Vector> marginal_min_points(const ProgramInstance& inst, std::span<const Rational> z);

/// Some x0 ∈ S(0) with y0 ∈ F(x0), if one exists.
std::optional<Vector> find_preimage(const ProgramInstance& inst, std::span<const Rational> y0);

/// F(x) for a single x, and G(x) + Z₊.
PolySet image_f(const ProgramInstance& inst, std::span<const Rational> x);
PolySet image_g_plus(const ProgramInstance& inst, std::span<const Rational> x);

}  // namespace procdual

#include "procdual/double_description.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>

namespace procdual::dd {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  Vector v;
  Bits sat;  // processed inequalities that vanish on v
};

class Builder {
 public:
  explicit Builder(std::size_t dim) : dim_(dim) {
    for (std::size_t i = 0; i < dim; ++i) {
      Vector e = zeros(dim);
      e[i] = 1;
      lines_.push_back(std::move(e));
    }
  }

  void insert(const Vector& a, bool equality) {
    if (is_zero(a)) return;
    if (absorb_with_line(a, equality)) return;
    if (equality) {
      intersect_hyperplane(a);
    } else {
      intersect_halfspace(a);
    }
  }

  ConeGenerators result() && {
    ConeGenerators out;
    for (auto& l : lines_) out.lines.push_back(primitive(l));
    for (auto& r : rays_) out.rays.push_back(primitive(r.v));
    std::sort(out.rays.begin(), out.rays.end(),
              [](const Vector& x, const Vector& y) { return lex_less(x, y); });
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
  }

 private:
  // A line not orthogonal to `a` is turned into a ray (or dropped for an
  // equality); every other generator is made orthogonal to `a` along it.
  bool absorb_with_line(const Vector& a, bool equality) {
    auto it = std::find_if(lines_.begin(), lines_.end(), [&](const Vector& l) { return dot(a, l) != 0; });
    if (it == lines_.end()) return false;
    Vector pivot = *it;
    lines_.erase(it);
    Rational s = dot(a, pivot);
    if (s < 0) {
      pivot = negate(pivot);
      s = -s;
    }
    for (auto& l : lines_) {
      const Rational v = dot(a, l);
      if (v != 0) l = primitive(subtract(l, scale(pivot, v / s)));
    }
    for (auto& r : rays_) {
      const Rational v = dot(a, r.v);
      if (v != 0) r.v = primitive(subtract(r.v, scale(pivot, v / s)));
    }
    const std::size_t idx = processed_;
    if (!equality) {
      ++processed_;
      for (auto& r : rays_) {
        r.sat.resize(processed_);
        r.sat[idx] = true;
      }
      Ray fresh{primitive(pivot), Bits(processed_)};
      // The pivot saturates every earlier constraint but not `a`.
      for (std::size_t i = 0; i < idx; ++i) fresh.sat[i] = true;
      rays_.push_back(std::move(fresh));
    }
    return true;
  }

  void intersect_hyperplane(const Vector& a) { combine(a, true); }
  void intersect_halfspace(const Vector& a) { combine(a, false); }

  void combine(const Vector& a, bool equality) {
    std::vector<std::size_t> pos, neg, zero;
    std::vector<Rational> val(rays_.size());
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      val[i] = dot(a, rays_[i].v);
      if (val[i] > 0) {
        pos.push_back(i);
      } else if (val[i] < 0) {
        neg.push_back(i);
      } else {
        zero.push_back(i);
      }
    }
    const std::size_t idx = processed_;
    if (!equality) ++processed_;

    std::vector<Ray> next;
    auto keep = [&](std::size_t i, bool saturates) {
      Ray r = rays_[i];
      if (!equality) {
        r.sat.resize(processed_);
        r.sat[idx] = saturates;
      }
      next.push_back(std::move(r));
    };
    for (std::size_t i : zero) keep(i, true);
    if (!equality) {
      for (std::size_t i : pos) keep(i, false);
    }
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        if (!adjacent(p, n)) continue;
        Vector v = add(scale(rays_[n].v, val[p]), scale(rays_[p].v, -val[n]));
        Ray r{primitive(v), rays_[p].sat & rays_[n].sat};
        if (!equality) {
          r.sat.resize(processed_);
          r.sat[idx] = true;
        }
        next.push_back(std::move(r));
      }
    }
    rays_ = std::move(next);
  }

  bool adjacent(std::size_t p, std::size_t n) const {
    const Bits common = rays_[p].sat & rays_[n].sat;
    for (std::size_t k = 0; k < rays_.size(); ++k) {
      if (k == p || k == n) continue;
      if (common.is_subset_of(rays_[k].sat)) return false;
    }
    return true;
  }

  std::size_t dim_;
  std::size_t processed_ = 0;
  std::vector<Vector> lines_;
  std::vector<Ray> rays_;
};

}  // namespace

ConeGenerators generators_of(std::size_t dim, const ConeConstraints& constraints) {
  Builder b(dim);
  for (const auto& e : constraints.equalities) {
    if (e.size() != dim) throw MalformedInput("constraint dimension mismatch");
    b.insert(e, true);
  }
  for (const auto& a : constraints.inequalities) {
    if (a.size() != dim) throw MalformedInput("constraint dimension mismatch");
    b.insert(a, false);
  }
  return std::move(b).result();
}

ConeConstraints constraints_of(std::size_t dim, const ConeGenerators& gens) {
  ConeConstraints dual;
  dual.equalities = gens.lines;
  dual.inequalities = gens.rays;
  ConeGenerators g = generators_of(dim, dual);
  return ConeConstraints{std::move(g.lines), std::move(g.rays)};
}

}  // namespace procdual::dd

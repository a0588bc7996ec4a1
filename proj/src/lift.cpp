#include "procdual/lift.hpp"

namespace procdual {

AffineMap AffineMap::block(std::size_t dim, std::size_t first, std::size_t count) {
  if (first + count > dim) throw MalformedInput("AffineMap::block out of range");
  AffineMap m;
  for (std::size_t i = 0; i < count; ++i) {
    Vector r = zeros(dim);
    r[first + i] = 1;
    m.rows.push_back(std::move(r));
  }
  m.constant = zeros(count);
  return m;
}

AffineMap AffineMap::stack(const AffineMap& a, const AffineMap& b) {
  AffineMap m = a;
  m.rows.insert(m.rows.end(), b.rows.begin(), b.rows.end());
  m.constant.insert(m.constant.end(), b.constant.begin(), b.constant.end());
  return m;
}

AffineMap AffineMap::operator-(const AffineMap& other) const {
  if (rows.size() != other.rows.size()) throw MalformedInput("AffineMap: size mismatch");
  AffineMap m;
  for (std::size_t i = 0; i < rows.size(); ++i) m.rows.push_back(subtract(rows[i], other.rows[i]));
  m.constant = subtract(constant, other.constant);
  return m;
}

AffineMap AffineMap::operator+(const Vector& shift) const {
  if (shift.size() != rows.size()) throw MalformedInput("AffineMap: shift size mismatch");
  AffineMap m = *this;
  m.constant = add(constant, shift);
  return m;
}

std::vector<Constraint> pull_back(const Polyhedron& s, const AffineMap& m) {
  if (s.dim() != m.rows.size()) throw MalformedInput("pull_back: dimension mismatch");
  const std::size_t dim = m.rows.empty() ? 0 : m.rows.front().size();
  std::vector<Constraint> out;
  if (s.is_empty()) {
    out.push_back(make_constraint(zeros(dim), Relation::LessEqual, Rational(-1)));
    return out;
  }
  for (const auto& c : s.constraints()) {
    Vector a = zeros(dim);
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      if (c.coeffs[r] != 0) a = add(a, scale(m.rows[r], c.coeffs[r]));
    }
    out.push_back(make_constraint(std::move(a), c.rel, c.rhs - dot(c.coeffs, m.constant)));
  }
  return out;
}

void Lift::require(const Polyhedron& s, const AffineMap& m) {
  const auto cs = pull_back(s, m);
  for (auto& alt : alternatives_) alt.insert(alt.end(), cs.begin(), cs.end());
}

void Lift::require(const PolySet& s, const AffineMap& m) {
  std::vector<std::vector<Constraint>> next;
  for (const auto& piece : s.pieces()) {
    const auto cs = pull_back(piece, m);
    for (const auto& alt : alternatives_) {
      auto grown = alt;
      grown.insert(grown.end(), cs.begin(), cs.end());
      next.push_back(std::move(grown));
    }
  }
  alternatives_ = std::move(next);
}

void Lift::require(const Constraint& c) {
  for (auto& alt : alternatives_) alt.push_back(c);
}

std::vector<Polyhedron> Lift::polyhedra() const {
  std::vector<Polyhedron> out;
  for (const auto& alt : alternatives_) out.push_back(Polyhedron::from_constraints(dim_, alt));
  return out;
}

PolySet Lift::project_onto(const std::vector<std::size_t>& kept) const {
  std::vector<Polyhedron> out;
  for (const auto& p : polyhedra()) out.push_back(project(p, kept));
  return PolySet(kept.size(), std::move(out));
}

}  // namespace procdual

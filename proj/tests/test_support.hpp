#pragma once

#include "procdual/polyhedron.hpp"

#include <initializer_list>
#include <random>
#include <string>

namespace procdual::testing {

inline Vector vec(std::initializer_list<const char*> xs) {
  Vector v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

inline Vector ivec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Constraint le(std::initializer_list<long> a, long b) {
  return make_constraint(ivec(a), Relation::LessEqual, Rational(b));
}
inline Constraint lt(std::initializer_list<long> a, long b) {
  return make_constraint(ivec(a), Relation::Less, Rational(b));
}
inline Constraint eq(std::initializer_list<long> a, long b) {
  return make_constraint(ivec(a), Relation::Equal, Rational(b));
}

#ifdef PROCDUAL_DATA_DIR
inline std::string data_path(const std::string& rel) { return std::string(PROCDUAL_DATA_DIR) + "/" + rel; }
#endif

/// Small rationals p/q with |p/q| <= radius and q <= max_den.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rational next(long radius, long max_den) {
    std::uniform_int_distribution<long> den(1, max_den);
    const long q = den(rng_);
    std::uniform_int_distribution<long> num(-radius * q, radius * q);
    return Rational(num(rng_), q);
  }

  Vector vector(std::size_t n, long radius, long max_den) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(next(radius, max_den));
    return v;
  }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace procdual::testing

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace procdual {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Vector = std::vector<Rational>;

/// Input could not be parsed or has inconsistent dimensions.
class MalformedInput : public std::runtime_error {
 public:
  explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its domain (e.g. apex outside the closure).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses "p", "-p" or "p/q". Throws MalformedInput on anything else.
Rational parse_rational(std::string_view text);

/// Parses a comma- or whitespace-separated list of rationals.
Vector parse_vector(std::string_view text);

/// "p/q" in lowest terms, or "p" when q == 1.
std::string format_rational(const Rational& value);
std::string format_vector(std::span<const Rational> v, std::string_view sep = " ");

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(std::span<const Rational> v);
Vector zeros(std::size_t n);
Vector negate(std::span<const Rational> v);
Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector subtract(std::span<const Rational> a, std::span<const Rational> b);
Vector scale(std::span<const Rational> v, const Rational& s);

/// Positive rescaling of v to a primitive integer vector (gcd of entries 1).
/// The zero vector is returned unchanged.
Vector primitive(std::span<const Rational> v);

/// Lexicographic comparison, usable as a strict weak order.
bool lex_less(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace procdual

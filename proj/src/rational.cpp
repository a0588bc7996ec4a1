#include "procdual/rational.hpp"

#include <algorithm>
#include <cctype>

namespace procdual {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
    throw MalformedInput("not a rational: '" + std::string(text) + "'");
  }
  Integer p(std::string(num[0] == '+' ? num.substr(1) : num));
  if (slash == std::string_view::npos) return Rational(p);
  Integer q(std::string(den[0] == '+' ? den.substr(1) : den));
  if (q == 0) throw MalformedInput("zero denominator: '" + std::string(text) + "'");
  return Rational(p, q);
}

Vector parse_vector(std::string_view text) {
  Vector out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      out.push_back(parse_rational(token));
      token.clear();
    }
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return out;
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string format_vector(std::span<const Rational> v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += format_rational(v[i]);
  }
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Vector zeros(std::size_t n) { return Vector(n, Rational(0)); }

Vector negate(std::span<const Rational> v) {
  Vector out(v.begin(), v.end());
  for (auto& x : out) x = -x;
  return out;
}

Vector add(std::span<const Rational> a, std::span<const Rational> b) {
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vector subtract(std::span<const Rational> a, std::span<const Rational> b) {
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(std::span<const Rational> v, const Rational& s) {
  Vector out(v.begin(), v.end());
  for (auto& x : out) x *= s;
  return out;
}

Vector primitive(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) {
    if (x != 0) l = boost::multiprecision::lcm(l, Integer(denominator(x)));
  }
  Integer g = 0;
  std::vector<Integer> ints;
  ints.reserve(v.size());
  for (const auto& x : v) {
    Integer n = numerator(x) * (l / denominator(x));
    g = boost::multiprecision::gcd(g, n);
    ints.push_back(std::move(n));
  }
  Vector out;
  out.reserve(v.size());
  if (g == 0) return Vector(v.begin(), v.end());
  if (g < 0) g = -g;
  for (auto& n : ints) out.emplace_back(n / g);
  return out;
}

bool lex_less(std::span<const Rational> a, std::span<const Rational> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace procdual

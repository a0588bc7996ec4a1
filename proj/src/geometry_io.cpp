#include "procdual/geometry_io.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace procdual {

namespace {

void write_vector_line(std::ostream& out, std::string_view label, const Vector& v) {
  out << label;
  for (const auto& x : v) out << ' ' << format_rational(x);
  out << '\n';
}

// Next non-blank, non-comment line split into tokens.
std::optional<std::vector<std::string>> next_tokens(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);
    if (!toks.empty()) return toks;
  }
  return std::nullopt;
}

std::size_t parse_count(const std::string& s, std::string_view what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || s[0] == '-') {
    throw MalformedInput("geometry text: bad " + std::string(what) + " '" + s + "'");
  }
  return v;
}

Vector parse_coords(const std::vector<std::string>& toks, std::size_t from, std::size_t dim) {
  if (toks.size() != from + dim) {
    throw MalformedInput("geometry text: expected " + std::to_string(dim) + " coordinates in '" + toks[0] + "' line");
  }
  Vector v;
  for (std::size_t i = from; i < toks.size(); ++i) v.push_back(parse_rational(toks[i]));
  return v;
}

Polyhedron read_block(std::istream& in, std::size_t dim) {
  std::vector<Constraint> cs;
  Generators g;
  while (true) {
    auto toks = next_tokens(in);
    if (!toks) throw MalformedInput("geometry text: missing 'end'");
    const std::string& kind = (*toks)[0];
    if (kind == "end") break;
    if (kind == "constraint") {
      if (toks->size() != dim + 3) throw MalformedInput("geometry text: malformed constraint line");
      Vector a = parse_coords(std::vector<std::string>(toks->begin(), toks->begin() + 1 + dim), 1, dim);
      cs.push_back(make_constraint(std::move(a), parse_relation((*toks)[dim + 1]), parse_rational((*toks)[dim + 2])));
    } else if (kind == "point") {
      g.points.push_back(parse_coords(*toks, 1, dim));
    } else if (kind == "closure_point") {
      g.closure_points.push_back(parse_coords(*toks, 1, dim));
    } else if (kind == "ray") {
      g.rays.push_back(parse_coords(*toks, 1, dim));
    } else {
      throw MalformedInput("geometry text: unknown line kind '" + kind + "'");
    }
  }
  const bool has_gens = !g.points.empty() || !g.closure_points.empty() || !g.rays.empty();
  if (cs.empty()) {
    if (g.points.empty()) return Polyhedron::empty(dim);
    return Polyhedron::from_generators(dim, std::move(g));
  }
  Polyhedron p = Polyhedron::from_constraints(dim, std::move(cs));
  if (has_gens) {
    const Polyhedron q = g.points.empty() ? Polyhedron::empty(dim) : Polyhedron::from_generators(dim, std::move(g));
    if (!p.same_set(q)) throw MalformedInput("geometry text: constraints and generators disagree");
  }
  return p;
}

}  // namespace

void write_polyhedron(std::ostream& out, const Polyhedron& p) {
  out << "polyhedron " << p.dim() << '\n';
  for (const auto& c : p.constraints()) {
    out << "constraint";
    for (const auto& x : c.coeffs) out << ' ' << format_rational(x);
    out << ' ' << relation_token(c.rel) << ' ' << format_rational(c.rhs) << '\n';
  }
  const auto& g = p.generators();
  for (const auto& v : g.points) write_vector_line(out, "point", v);
  for (const auto& v : g.closure_points) write_vector_line(out, "closure_point", v);
  for (const auto& v : g.rays) write_vector_line(out, "ray", v);
  for (const auto& v : g.lines) {
    write_vector_line(out, "ray", v);
    write_vector_line(out, "ray", negate(v));
  }
  out << "end\n";
}

void write_set(std::ostream& out, const PolySet& s) {
  out << "set " << s.dim() << ' ' << s.pieces().size() << '\n';
  for (const auto& p : s.pieces()) write_polyhedron(out, p);
}

std::string to_text(const Polyhedron& p) {
  std::ostringstream ss;
  write_polyhedron(ss, p);
  return ss.str();
}

std::string to_text(const PolySet& s) {
  std::ostringstream ss;
  write_set(ss, s);
  return ss.str();
}

Polyhedron read_polyhedron(std::istream& in) {
  auto toks = next_tokens(in);
  if (!toks || (*toks)[0] != "polyhedron" || toks->size() != 2) {
    throw MalformedInput("geometry text: expected 'polyhedron <dim>'");
  }
  return read_block(in, parse_count((*toks)[1], "dimension"));
}

PolySet read_set(std::istream& in) {
  auto toks = next_tokens(in);
  if (!toks || toks->empty()) throw MalformedInput("geometry text: empty input");
  if ((*toks)[0] == "polyhedron" && toks->size() == 2) {
    return PolySet(read_block(in, parse_count((*toks)[1], "dimension")));
  }
  if ((*toks)[0] != "set" || toks->size() != 3) throw MalformedInput("geometry text: expected 'set <dim> <pieces>'");
  const std::size_t dim = parse_count((*toks)[1], "dimension");
  const std::size_t n = parse_count((*toks)[2], "piece count");
  std::vector<Polyhedron> pieces;
  for (std::size_t i = 0; i < n; ++i) {
    Polyhedron p = read_polyhedron(in);
    if (p.dim() != dim) throw MalformedInput("geometry text: piece dimension mismatch");
    pieces.push_back(std::move(p));
  }
  return PolySet(dim, std::move(pieces));
}

Polyhedron polyhedron_from_text(const std::string& text) {
  std::istringstream ss(text);
  return read_polyhedron(ss);
}

PolySet set_from_text(const std::string& text) {
  std::istringstream ss(text);
  return read_set(ss);
}

}  // namespace procdual

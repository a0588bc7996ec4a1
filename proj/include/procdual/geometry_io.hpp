#pragma once

#include "procdual/poly_set.hpp"

#include <iosfwd>
#include <string>

namespace procdual {

// Text format, one item per line, '#' starts a comment:
//
//   polyhedron <dim>
//   constraint <c_1> ... <c_dim> <rel> <rhs>     rel in {<=, <, =}
//   point <x_1> ... <x_dim>
//   closure_point <x_1> ... <x_dim>
//   ray <r_1> ... <r_dim>
//   end
//
//   set <dim> <pieces>        followed by <pieces> polyhedron blocks
//
// Lines of the generator system are written as a pair of opposite rays.
// On reading, a block with constraint lines is built from them; otherwise
// it is built from its generators (no point line means the empty set).
// When both are present they must describe the same set.

void write_polyhedron(std::ostream& out, const Polyhedron& p);
void write_set(std::ostream& out, const PolySet& s);
std::string to_text(const Polyhedron& p);
std::string to_text(const PolySet& s);

Polyhedron read_polyhedron(std::istream& in);
PolySet read_set(std::istream& in);
Polyhedron polyhedron_from_text(const std::string& text);
PolySet set_from_text(const std::string& text);

}  // namespace procdual

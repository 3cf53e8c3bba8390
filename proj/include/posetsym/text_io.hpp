#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "posetsym/poset.hpp"

namespace posetsym {

// Plain-text input. A record is
//
//   poset <n>        (or: digraph <n>)
//   <i> <j>          one relation per line, 1-based, i below j
//   end
//
// Blank lines and text after '#' are ignored. Poset relations are closed
// transitively; digraph edges are kept as given.
using Structure = std::variant<Poset, Digraph>;

// All records of a stream in order. Throws ParseError (with a line number)
// on malformed input and CycleError/IndexError from poset construction.
std::vector<Structure> read_structures(std::istream& in);
std::vector<Structure> read_structures_file(const std::string& path);
// Exactly one record; the digraph form is rejected.
Poset read_poset(std::istream& in);

// Writes the cover relations of `p` (or every edge of `d`).
void write_poset(std::ostream& out, const Poset& p);
void write_digraph(std::ostream& out, const Digraph& d);

std::string format_listing(const Listing& w);

}  // namespace posetsym

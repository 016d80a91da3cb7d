#pragma once

#include <iosfwd>
#include <string>

#include "ecl/multigraph.hpp"

namespace ecl {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Text format: line 1 "n <count>", then "e <v> <w> <mult>" lines.
// '#' starts a comment; duplicate e-lines accumulate.
Multigraph read_graph_text(std::istream& in);
Multigraph read_graph_file(const std::string& path);  // .g6 suffix selects graph6
void write_graph_text(std::ostream& out, const Multigraph& g);

// graph6 strings cover simple graphs only (every multiplicity 1).
Multigraph from_graph6(const std::string& s);
std::string to_graph6(const Multigraph& g);

}  // namespace ecl

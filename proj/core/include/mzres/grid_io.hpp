#pragma once

#include <iosfwd>
#include <string>

#include "mzres/grid.hpp"

namespace mzres {

/// Plain-text grid format:
///
///   NNODES NTRIA NQUAD
///   x y                  one line per node, 17 significant digits
///   n1 n2 n3             one line per triangle, 1-based, counterclockwise
///   n1 n2 n3 n4          one line per quad, 1-based, counterclockwise
///   NBOUND
///   condition NBNODES    one header per boundary segment
///   n                    one node index per line, 1-based, chain order
///
/// Reading a file written by write_grid and writing it again reproduces the
/// bytes exactly.
Grid read_grid(std::istream& in);
Grid read_grid_file(const std::string& path);

void write_grid(const Grid& g, std::ostream& out);
void write_grid_file(const Grid& g, const std::string& path);

} // namespace mzres

#pragma once

#include <string>

#include "ramkill/coloring.hpp"

namespace ramkill {

// Graphviz rendering of the colored dual graph: one node per vertex labeled
// with its color index and kind, one edge per 2-face. Output ordering is
// fixed by vertex index, so equal inputs give byte-identical output.
std::string to_dot(const ColoredComplex& cc);

}  // namespace ramkill

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "ramkill/snc_complex.hpp"

namespace ramkill {

struct parse_error : std::runtime_error {
    int line = 0;
    parse_error(int line_number, const std::string& message);
};

// Line-oriented arrangement format:
//
//   dim <n>
//   vertex <name>
//   face <name1> <name2> ... <namek>
//
// '#' starts a comment, names are arbitrary non-whitespace tokens, and only
// maximal faces need be listed (downward closure is implied).
SncComplex read_arrangement(std::istream& in, std::optional<int> dimension_override = {});
SncComplex read_arrangement(const std::string& text, std::optional<int> dimension_override = {});
SncComplex read_arrangement_file(const std::string& path,
                                 std::optional<int> dimension_override = {});

void write_arrangement(std::ostream& out, const SncComplex& c);
std::string write_arrangement(const SncComplex& c);

}  // namespace ramkill

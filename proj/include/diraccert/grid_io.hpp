#pragma once

#include <iosfwd>
#include <string>

#include "diraccert/enclosure.hpp"

namespace diraccert {

// Plain-text grid file.  '#' header lines carry the command, m, norms,
// grid spec and tool version; then one row per cell,
//
//   re im f thm1_lhs thm2_lhs certified
//
// separated by single spaces, 17 significant digits, infinities as "inf",
// an absent thm2 column as "nan", certified as 0/1.  Row order: im outer
// ascending, re inner ascending.  Byte output is deterministic for a
// fixed grid.
void write_grid(std::ostream& os, const RegionGrid& grid,
                const std::string& command_echo = {});

// Inverse of write_grid; numeric fields round-trip exactly.
// Throws std::runtime_error on malformed input.
RegionGrid parse_grid(std::istream& is);

}  // namespace diraccert

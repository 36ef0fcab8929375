#pragma once

#include <string>
#include <vector>

#include "dyckfact/paths.hpp"

namespace dyckfact {

/// ASCII picture of one Dyck path: grid dots, the path drawn with 'o'
/// vertices and '|' / '_' edges, the line m*y = n*x marked with '*'.
/// Presentation only; no contract beyond showing every path point.
std::string render_path(const DyckPath& d);

/// One block per path, blank line between blocks.
std::string render_paths(const std::vector<DyckPath>& ds);

/// Cylindrical configurations on the strip [0, m] x [l_min, l_max]; each
/// path's points marked with its 1-based index digit, overlaps with '#'.
std::string render_cylinder(const std::vector<CylPath>& cs);

} // namespace dyckfact

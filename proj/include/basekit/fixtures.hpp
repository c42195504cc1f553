#pragma once

#include <string>
#include <vector>

#include "basekit/group.hpp"

namespace basekit {

/// Names of the shipped fixture groups (symmetric/alternating/cyclic/
/// dihedral families, S4 on unordered pairs, PSL(2,7) on 7 and 8 points,
/// and the Mathieu groups).
std::vector<std::string> fixture_names();

/// Builds a fixture by name ("s4", "a5", "c6", "d4", "s4_pairs",
/// "psl27_7", "psl27_8", "m11", "m11_12", "m12", "m22", "m23", "m24").
/// The group order is validated against the known value at construction;
/// throws std::invalid_argument for unknown names.
Group fixture_group(const std::string& name);

}  // namespace basekit

#pragma once

#include <string>

#include <json.hpp>

#include "basekit/bounds.hpp"
#include "basekit/classes.hpp"
#include "basekit/greedy.hpp"
#include "basekit/group.hpp"
#include "basekit/orbits.hpp"
#include "basekit/search.hpp"

namespace basekit {

using Json = nlohmann::ordered_json;

/// Parses cycle notation such as "(0,1)(2,3,4)" or "()" into a
/// permutation of the stated degree.
Permutation parse_cycles(const std::string& text, std::size_t degree);

/// Group file: {"name": str, "degree": n, "generators": [[...], ...]}.
/// Generators may be image lists or cycle-notation strings.
Group group_from_json(const Json& j);
Group load_group_file(const std::string& path);
Json group_to_json(const Group& g);

/// Class-data file (version 1); orders and sizes are decimal strings.
ClassData class_data_from_json(const Json& j);
ClassData load_class_data_file(const std::string& path);
Json class_data_to_json(const ClassData& d);

Json rational_to_json(const Rational& r);  // {"num": str, "den": str}
Rational rational_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);
Json fpr_table_to_json(const FprTable& table);
Json greedy_trace_to_json(const GreedyTrace& trace);
Json suborbit_profile_to_json(const SuborbitProfile& profile);
Json search_outcome_to_json(const SearchOutcome& outcome, bool verbose);

}  // namespace basekit

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "basekit/group.hpp"
#include "basekit/orbits.hpp"

namespace basekit {

/// One run of the greedy base algorithm.
struct GreedyTrace {
  std::vector<Point> base;
  std::vector<std::size_t> orbit_sizes;  // size of the orbit each point was drawn from
  std::vector<std::size_t> choices;      // distinct largest orbits available per step
};

enum class GreedyPolicy { Deterministic, SeededRandom };

/// A search result that distinguishes "computed" from "budget exceeded".
struct SearchCount {
  std::optional<std::size_t> value;
  std::uint64_t nodes = 0;
  bool exceeded() const { return !value.has_value(); }
};

bool is_base(const Group& g, std::span<const Point> points);

/// Runs the greedy algorithm once. Deterministic policy takes the minimum
/// point of the canonical largest orbit; seeded-random picks uniformly
/// among all points lying in any largest orbit.
GreedyTrace greedy_base(const Group& g, GreedyPolicy policy = GreedyPolicy::Deterministic,
                        std::uint64_t seed = 0);

/// Exact maximum greedy base length, by backtrack over one representative
/// point per distinct largest orbit at each node.
SearchCount greedy_size_max(const Group& g, std::uint64_t node_budget = 1'000'000);

/// Oracle variant: branches over every point of every largest orbit.
SearchCount greedy_size_max_naive(const Group& g, std::uint64_t node_budget = 1'000'000);

/// Exact minimum base length b(G), by iterative deepening over orbit
/// representatives with stabilizer-order pruning.
SearchCount base_size_exact(const Group& g, std::uint64_t node_budget = 1'000'000);

}  // namespace basekit

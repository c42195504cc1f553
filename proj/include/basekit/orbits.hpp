#pragma once

#include <optional>
#include <vector>

#include "basekit/group.hpp"

namespace basekit {

/// Orbit of alpha under the group's generators, sorted ascending.
std::vector<Point> orbit(const Group& g, Point alpha);

/// All orbits on {0,...,degree-1}, each sorted ascending, ordered by
/// (size descending, minimum element ascending). This is the canonical
/// order used by the greedy machinery.
std::vector<std::vector<Point>> orbit_partition(const Group& g);

/// Orbits of the point stabilizer G_alpha on the whole domain.
struct SuborbitProfile {
  Point base_point = 0;
  std::vector<std::vector<Point>> suborbits;  // canonical order
  std::vector<std::size_t> subdegrees;        // sorted descending
  std::size_t rank = 0;
  std::size_t largest_subdegree = 0;
  std::size_t largest_count = 0;
  bool unique_largest = false;
};

/// Requires g transitive; throws std::invalid_argument otherwise.
SuborbitProfile suborbit_profile(const Group& g, Point alpha);

/// True iff some G_alpha-orbit has size |G_alpha|. For a transitive group
/// with nontrivial point stabilizer this certifies b(G) = 2.
bool has_regular_suborbit(const Group& g, Point alpha);

/// True iff every point of o1 shares its stabilizer with some point of
/// o2. Both inputs must be orbits of g.
bool suborbits_equivalent(const Group& g, const std::vector<Point>& o1,
                          const std::vector<Point>& o2);

/// (index - 1)/(rank - 1): a lower bound on the largest subdegree of any
/// transitive action with these parameters. Requires index >= 2, rank >= 2.
Rational rank_subdegree_lower_bound(const BigInt& index, const BigInt& rank);

/// Rank by Burnside's lemma: averages fixed-point counts over G_alpha.
/// Requires g transitive and |G_alpha| <= cap.
std::size_t rank_burnside(const Group& g, Point alpha,
                          std::uint64_t cap = 10'000'000);

struct CosetAction {
  Group image;                       // degree |G:H|, acting on right cosets of H
  std::vector<Permutation> coset_reps;  // canonical representative per point
  BigInt kernel_order;               // |G| / |image|
  bool faithful = false;
};

/// Permutation action of g on the right cosets of h. Point 0 is the coset
/// H itself. Requires h <= g and |G:H| within `index_cap`.
CosetAction coset_action(const Group& g, const Group& h,
                         std::uint64_t index_cap = 1'000'000);

/// Index of the coset H*x among the points of a coset_action result.
Point coset_point(const CosetAction& action, const Group& h, const Permutation& x);

}  // namespace basekit

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "basekit/group.hpp"

namespace basekit {

struct ConjClass {
  std::string name;
  std::uint64_t element_order = 0;
  BigInt size = 0;
  std::optional<Permutation> representative;  // present iff computed live
};

/// Class-size table for a group, optionally with a subgroup and the
/// fusion of its classes. `complete` marks the prime-order class list as
/// exhaustive; certificates refuse tables without it.
struct ClassData {
  std::string group_name;
  BigInt group_order = 1;
  std::vector<ConjClass> group_classes;
  std::optional<std::string> subgroup_name;
  std::optional<BigInt> subgroup_order;
  std::vector<ConjClass> subgroup_classes;
  std::vector<std::size_t> fusion;  // subgroup class index -> group class index
  bool has_subgroup = false;
  bool complete = false;
};

/// Conjugacy class of x in g by closure under conjugation by generators.
ConjClass conjugacy_class(const Group& g, const Permutation& x,
                          std::uint64_t budget = 10'000'000);

enum class ClassSearchMode { Exhaustive, Randomized };

/// Representatives of all classes of prime-order elements. Exhaustive
/// mode enumerates the whole group (requires |G| <= cap) and is certified
/// complete; randomized mode stops after `stall` consecutive non-novel
/// samples and is not.
struct ClassList {
  std::vector<ConjClass> classes;
  bool certified_complete = false;
};
ClassList prime_order_class_reps(const Group& g,
                                 ClassSearchMode mode = ClassSearchMode::Exhaustive,
                                 std::uint64_t cap = 10'000'000,
                                 std::uint64_t stall = 200, std::uint64_t seed = 1);

/// Validates all ClassData invariants; throws std::invalid_argument
/// naming the failing field.
void validate_class_data(const ClassData& d);

/// Sum of subgroup class sizes fusing to the given group class.
BigInt fused_intersection_size(const ClassData& d, std::size_t group_class);

/// |x^G ∩ H| by enumerating the class of cls.representative and counting
/// membership in h.
BigInt live_intersection_size(const Group& g, const Group& h, const ConjClass& cls,
                              std::uint64_t budget = 10'000'000);

/// Builds ClassData from live groups, including the fusion of h-classes
/// into g-classes.
ClassData class_data_from_groups(const Group& g, const Group& h,
                                 std::uint64_t cap = 10'000'000);

}  // namespace basekit

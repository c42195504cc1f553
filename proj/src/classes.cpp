#include "basekit/classes.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace basekit {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using PermSet = std::unordered_set<Permutation, PermutationHash>;

/// Closes {x} under conjugation by the generators; inserts into `out`.
/// Returns false if the budget was hit.
bool close_class(const Group& g, const Permutation& x, PermSet& out,
                 std::uint64_t budget,
                 const std::function<void(const Permutation&)>& visit = nullptr) {
  std::vector<Permutation> queue{x};
  out.insert(x);
  if (visit) visit(x);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : g.generators()) {
      Permutation y = conjugate(queue[head], s);
      if (out.insert(y).second) {
        if (out.size() > budget) return false;
        if (visit) visit(y);
        queue.push_back(std::move(y));
      }
    }
  }
  return true;
}

std::string class_name(std::uint64_t order, std::size_t rank_within_order) {
  std::string suffix;
  std::size_t r = rank_within_order;
  do {
    suffix.insert(suffix.begin(), static_cast<char>('a' + r % 26));
    r /= 26;
  } while (r > 0);
  return std::to_string(order) + suffix;
}

void assign_names(std::vector<ConjClass>& classes) {
  std::stable_sort(classes.begin(), classes.end(),
                   [](const ConjClass& a, const ConjClass& b) {
                     if (a.element_order != b.element_order)
                       return a.element_order < b.element_order;
                     return a.size < b.size;
                   });
  std::uint64_t prev_order = 0;
  std::size_t rank = 0;
  for (auto& c : classes) {
    rank = (c.element_order == prev_order) ? rank + 1 : 0;
    prev_order = c.element_order;
    c.name = class_name(c.element_order, rank);
  }
}

}  // namespace

ConjClass conjugacy_class(const Group& g, const Permutation& x, std::uint64_t budget) {
  if (!g.contains(x))
    throw std::invalid_argument("conjugacy_class: element not in group");
  PermSet members;
  if (!close_class(g, x, members, budget))
    throw std::runtime_error("conjugacy_class: budget exceeded");
  ConjClass out;
  out.element_order = element_order(x).convert_to<std::uint64_t>();
  out.size = BigInt(static_cast<std::uint64_t>(members.size()));
  out.representative = x;
  out.name = std::to_string(out.element_order);
  return out;
}

ClassList prime_order_class_reps(const Group& g, ClassSearchMode mode,
                                 std::uint64_t cap, std::uint64_t stall,
                                 std::uint64_t seed) {
  ClassList out;
  PermSet classified;
  auto discover = [&](const Permutation& x) {
    if (!has_prime_order(x) || classified.contains(x)) return false;
    const std::size_t before = classified.size();
    if (!close_class(g, x, classified, before + cap))
      throw std::runtime_error("prime_order_class_reps: class budget exceeded");
    ConjClass cls;
    cls.element_order = element_order(x).convert_to<std::uint64_t>();
    cls.size = BigInt(static_cast<std::uint64_t>(classified.size() - before));
    cls.representative = x;
    out.classes.push_back(std::move(cls));
    return true;
  };

  if (mode == ClassSearchMode::Exhaustive) {
    if (g.order() > cap)
      throw std::runtime_error("prime_order_class_reps: group exceeds enumeration cap");
    g.for_each_element([&](const Permutation& x) { discover(x); }, cap);
    out.certified_complete = true;
  } else {
    Rng rng(seed);
    std::uint64_t misses = 0;
    while (misses < stall) {
      if (discover(g.random_element(rng)))
        misses = 0;
      else
        ++misses;
    }
    out.certified_complete = false;
  }
  assign_names(out.classes);
  return out;
}

void validate_class_data(const ClassData& d) {
  auto check_classes = [](const std::vector<ConjClass>& classes, const BigInt& order,
                          const std::string& which) {
    for (const auto& c : classes) {
      if (!is_prime(c.element_order))
        throw std::invalid_argument(which + " class " + c.name +
                                    ": element_order is not prime");
      if (c.size < 1 || order % c.size != 0)
        throw std::invalid_argument(which + " class " + c.name +
                                    ": size does not divide the group order");
    }
  };
  if (d.group_order < 1) throw std::invalid_argument("group.order: must be positive");
  check_classes(d.group_classes, d.group_order, "group");
  if (d.has_subgroup) {
    if (!d.subgroup_order)
      throw std::invalid_argument("subgroup.order: missing");
    if (d.group_order % *d.subgroup_order != 0)
      throw std::invalid_argument("subgroup.order: does not divide group.order");
    check_classes(d.subgroup_classes, *d.subgroup_order, "subgroup");
    if (d.fusion.size() != d.subgroup_classes.size())
      throw std::invalid_argument("fusion: length differs from subgroup class count");
    std::vector<BigInt> fused(d.group_classes.size(), 0);
    for (std::size_t i = 0; i < d.fusion.size(); ++i) {
      const std::size_t target = d.fusion[i];
      if (target >= d.group_classes.size())
        throw std::invalid_argument("fusion: index out of range");
      if (d.subgroup_classes[i].element_order != d.group_classes[target].element_order)
        throw std::invalid_argument("fusion: element order not preserved at index " +
                                    std::to_string(i));
      fused[target] += d.subgroup_classes[i].size;
    }
    for (std::size_t j = 0; j < fused.size(); ++j)
      if (fused[j] > d.group_classes[j].size)
        throw std::invalid_argument("fusion: fused sizes exceed class " +
                                    d.group_classes[j].name);
  }
}

BigInt fused_intersection_size(const ClassData& d, std::size_t group_class) {
  if (!d.has_subgroup)
    throw std::invalid_argument("fused_intersection_size: no fusion data");
  if (group_class >= d.group_classes.size())
    throw std::out_of_range("fused_intersection_size: class index out of range");
  BigInt sum = 0;
  for (std::size_t i = 0; i < d.fusion.size(); ++i)
    if (d.fusion[i] == group_class) sum += d.subgroup_classes[i].size;
  return sum;
}

BigInt live_intersection_size(const Group& g, const Group& h, const ConjClass& cls,
                              std::uint64_t budget) {
  if (!cls.representative)
    throw std::invalid_argument("live_intersection_size: class has no representative");
  for (const auto& x : h.generators())
    if (!g.contains(x))
      throw std::invalid_argument("live_intersection_size: h is not a subgroup of g");
  BigInt count = 0;
  PermSet members;
  const bool ok = close_class(g, *cls.representative, members, budget,
                              [&](const Permutation& y) {
                                if (h.contains(y)) ++count;
                              });
  if (!ok) throw std::runtime_error("live_intersection_size: budget exceeded");
  return count;
}

ClassData class_data_from_groups(const Group& g, const Group& h, std::uint64_t cap) {
  for (const auto& x : h.generators())
    if (!g.contains(x))
      throw std::invalid_argument("class_data_from_groups: h is not a subgroup of g");
  ClassData out;
  out.group_name = g.label();
  out.group_order = g.order();
  const ClassList gl = prime_order_class_reps(g, ClassSearchMode::Exhaustive, cap);
  out.group_classes = gl.classes;
  out.has_subgroup = true;
  out.subgroup_name = h.label();
  out.subgroup_order = h.order();
  const ClassList hl = prime_order_class_reps(h, ClassSearchMode::Exhaustive, cap);
  out.subgroup_classes = hl.classes;

  // Locate each subgroup class inside a group class by membership in the
  // closed class set.
  std::unordered_map<Permutation, std::size_t, PermutationHash> element_to_class;
  for (std::size_t j = 0; j < out.group_classes.size(); ++j) {
    PermSet members;
    if (!close_class(g, *out.group_classes[j].representative, members, cap))
      throw std::runtime_error("class_data_from_groups: class budget exceeded");
    for (const auto& y : members) element_to_class.emplace(y, j);
  }
  for (const auto& hc : out.subgroup_classes) {
    auto it = element_to_class.find(*hc.representative);
    if (it == element_to_class.end())
      throw std::logic_error("class_data_from_groups: fusion target not found");
    out.fusion.push_back(it->second);
  }
  out.complete = true;
  validate_class_data(out);
  return out;
}

}  // namespace basekit

#include "basekit/greedy.hpp"

#include <algorithm>

namespace basekit {

namespace {

struct Budget {
  std::uint64_t used = 0;
  std::uint64_t cap = 0;
  bool blown = false;
  bool tick() {
    if (++used > cap) blown = true;
    return !blown;
  }
};

std::size_t rec_greedy_max(const Group& stab, std::size_t depth, Budget& budget,
                           bool naive) {
  if (!budget.tick()) return 0;
  if (stab.is_trivial()) return depth;
  const auto orbits = orbit_partition(stab);
  const std::size_t largest = orbits.front().size();
  std::size_t best = 0;
  for (const auto& o : orbits) {
    if (o.size() != largest) break;  // canonical order: largest orbits first
    if (naive) {
      for (Point beta : o)
        best = std::max(best,
                        rec_greedy_max(stab.point_stabilizer(beta), depth + 1, budget, naive));
    } else {
      best = std::max(best,
                      rec_greedy_max(stab.point_stabilizer(o.front()), depth + 1, budget, naive));
    }
    if (budget.blown) break;
  }
  return best;
}

SearchCount run_greedy_max(const Group& g, std::uint64_t node_budget, bool naive) {
  Budget budget{0, node_budget};
  const std::size_t value = rec_greedy_max(g, 0, budget, naive);
  SearchCount out;
  out.nodes = budget.used;
  if (!budget.blown) out.value = value;
  return out;
}

bool dfs_min_base(const Group& stab, std::size_t remaining, Budget& budget) {
  if (!budget.tick()) return false;
  if (stab.is_trivial()) return true;
  if (remaining == 0) return false;
  const auto orbits = orbit_partition(stab);
  const std::size_t largest = orbits.front().size();
  // Each further point cuts the order by at most the largest orbit size.
  BigInt best_possible = 1;
  for (std::size_t i = 0; i < remaining; ++i) best_possible *= largest;
  if (stab.order() > best_possible) return false;
  for (const auto& o : orbits) {
    if (o.size() < 2) break;  // fixed points never shrink the stabilizer
    if (dfs_min_base(stab.point_stabilizer(o.front()), remaining - 1, budget)) return true;
    if (budget.blown) return false;
  }
  return false;
}

}  // namespace

bool is_base(const Group& g, std::span<const Point> points) {
  return g.pointwise_stabilizer_order(points) == 1;
}

GreedyTrace greedy_base(const Group& g, GreedyPolicy policy, std::uint64_t seed) {
  GreedyTrace trace;
  Rng rng(seed);
  Group stab = g;
  while (!stab.is_trivial()) {
    const auto orbits = orbit_partition(stab);
    const std::size_t largest = orbits.front().size();
    std::size_t count = 0;
    while (count < orbits.size() && orbits[count].size() == largest) ++count;
    Point beta;
    if (policy == GreedyPolicy::Deterministic) {
      beta = orbits.front().front();
    } else {
      std::vector<Point> pool;
      for (std::size_t i = 0; i < count; ++i)
        pool.insert(pool.end(), orbits[i].begin(), orbits[i].end());
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      beta = pool[pick(rng)];
    }
    trace.base.push_back(beta);
    trace.orbit_sizes.push_back(largest);
    trace.choices.push_back(count);
    stab = stab.point_stabilizer(beta);
  }
  return trace;
}

SearchCount greedy_size_max(const Group& g, std::uint64_t node_budget) {
  return run_greedy_max(g, node_budget, /*naive=*/false);
}

SearchCount greedy_size_max_naive(const Group& g, std::uint64_t node_budget) {
  return run_greedy_max(g, node_budget, /*naive=*/true);
}

SearchCount base_size_exact(const Group& g, std::uint64_t node_budget) {
  Budget budget{0, node_budget};
  SearchCount out;
  for (std::size_t len = 0; len <= g.degree(); ++len) {
    if (dfs_min_base(g, len, budget)) {
      out.value = len;
      break;
    }
    if (budget.blown) break;
  }
  out.nodes = budget.used;
  if (budget.blown) out.value.reset();
  return out;
}

}  // namespace basekit

#include "basekit/search.hpp"

#include <stdexcept>

namespace basekit {

BigInt conjugate_intersection_order(const CosetAction& action, const Group& h,
                                    const Permutation& x) {
  const Point moved = coset_point(action, h, x);
  const Point pair[2] = {0, moved};
  const BigInt stab = action.image.pointwise_stabilizer_order(pair);
  // Elements acting trivially on the cosets sit inside every conjugate of H.
  return stab * action.kernel_order;
}

BigInt conjugate_intersection_order(const Group& g, const Group& h,
                                    const Permutation& x, std::uint64_t index_cap) {
  if (!g.contains(x))
    throw std::invalid_argument("conjugate_intersection_order: x not in g");
  const CosetAction action = coset_action(g, h, index_cap);
  return conjugate_intersection_order(action, h, x);
}

SearchOutcome search_until_below(const Group& g, const Group& h,
                                 const BigInt& threshold, std::uint64_t max_iters,
                                 Rng& rng, bool keep_trace,
                                 std::uint64_t index_cap) {
  if (threshold < 1) throw std::invalid_argument("search_until_below: threshold < 1");
  if (max_iters < 1) throw std::invalid_argument("search_until_below: max_iters < 1");
  const CosetAction action = coset_action(g, h, index_cap);
  SearchOutcome best;
  best.threshold = threshold;
  for (std::uint64_t it = 1; it <= max_iters; ++it) {
    const Permutation x = g.random_element(rng);
    const BigInt order = conjugate_intersection_order(action, h, x);
    if (keep_trace) best.trace.push_back({it, order});
    if (it == 1 || order < best.intersection_order) {
      best.conjugator = x;
      best.intersection_order = order;
    }
    best.iterations_used = it;
    if (best.intersection_order < threshold) {
      best.success = true;
      break;
    }
  }
  return best;
}

}  // namespace basekit

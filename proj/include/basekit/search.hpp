#pragma once

#include <vector>

#include "basekit/group.hpp"
#include "basekit/orbits.hpp"

namespace basekit {

struct SearchSample {
  std::uint64_t iteration = 0;
  BigInt intersection_order;
};

struct SearchOutcome {
  Permutation conjugator;
  BigInt intersection_order;
  std::uint64_t iterations_used = 0;
  BigInt threshold;
  bool success = false;
  std::vector<SearchSample> trace;  // filled when requested
};

/// |H cap H^x|: the pointwise stabilizer of the pair (coset H, coset H*x)
/// in the coset action, scaled by the action's kernel.
BigInt conjugate_intersection_order(const CosetAction& action, const Group& h,
                                    const Permutation& x);

/// Convenience overload that builds the coset action itself.
BigInt conjugate_intersection_order(const Group& g, const Group& h,
                                    const Permutation& x,
                                    std::uint64_t index_cap = 1'000'000);

/// Samples x = random_element(g) until |H cap H^x| < threshold or
/// max_iters is hit; always reports the best observed conjugate.
SearchOutcome search_until_below(const Group& g, const Group& h,
                                 const BigInt& threshold, std::uint64_t max_iters,
                                 Rng& rng, bool keep_trace = false,
                                 std::uint64_t index_cap = 1'000'000);

}  // namespace basekit

#include "basekit/orbits.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace basekit {

namespace {

std::vector<Point> orbit_of(const std::vector<Permutation>& gens, std::size_t degree,
                            Point alpha) {
  std::vector<bool> seen(degree, false);
  std::vector<Point> queue{alpha};
  seen[alpha] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& g : gens) {
      const Point q = g(queue[head]);
      if (!seen[q]) {
        seen[q] = true;
        queue.push_back(q);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

void canonical_order(std::vector<std::vector<Point>>& orbits) {
  std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
}

/// Canonical representative of the right coset H*x, minimizing the images
/// of H's base points greedily down the chain.
Permutation canonical_coset_rep(const StabilizerChain& hchain, Permutation x) {
  for (std::size_t l = 0; l < hchain.depth(); ++l) {
    const ChainLevel& lvl = hchain.levels()[l];
    std::size_t best_slot = 0;
    Point best = x(lvl.orbit[0]);
    for (std::size_t s = 1; s < lvl.orbit.size(); ++s) {
      const Point img = x(lvl.orbit[s]);
      if (img < best) {
        best = img;
        best_slot = s;
      }
    }
    if (best_slot != 0)
      x = compose(hchain.transversal_element(l, best_slot), x);
  }
  return x;
}

}  // namespace

std::vector<Point> orbit(const Group& g, Point alpha) {
  if (alpha >= g.degree()) throw std::out_of_range("orbit: point out of range");
  return orbit_of(g.generators(), g.degree(), alpha);
}

std::vector<std::vector<Point>> orbit_partition(const Group& g) {
  std::vector<std::vector<Point>> orbits;
  std::vector<bool> seen(g.degree(), false);
  for (Point p = 0; p < g.degree(); ++p) {
    if (seen[p]) continue;
    auto orb = orbit_of(g.generators(), g.degree(), p);
    for (Point q : orb) seen[q] = true;
    orbits.push_back(std::move(orb));
  }
  canonical_order(orbits);
  return orbits;
}

SuborbitProfile suborbit_profile(const Group& g, Point alpha) {
  if (alpha >= g.degree()) throw std::out_of_range("suborbit_profile: point out of range");
  if (!g.is_transitive())
    throw std::invalid_argument("suborbit_profile: group is not transitive");
  SuborbitProfile out;
  out.base_point = alpha;
  out.suborbits = orbit_partition(g.point_stabilizer(alpha));
  out.rank = out.suborbits.size();
  for (const auto& o : out.suborbits) out.subdegrees.push_back(o.size());
  out.largest_subdegree = out.subdegrees.front();
  out.largest_count = static_cast<std::size_t>(
      std::count(out.subdegrees.begin(), out.subdegrees.end(), out.largest_subdegree));
  out.unique_largest = out.largest_count == 1;
  return out;
}

bool has_regular_suborbit(const Group& g, Point alpha) {
  if (!g.is_transitive())
    throw std::invalid_argument("has_regular_suborbit: group is not transitive");
  const Group stab = g.point_stabilizer(alpha);
  const BigInt stab_order = stab.order();
  for (const auto& o : orbit_partition(stab))
    if (BigInt(static_cast<std::uint64_t>(o.size())) == stab_order) return true;
  return false;
}

bool suborbits_equivalent(const Group& g, const std::vector<Point>& o1,
                          const std::vector<Point>& o2) {
  auto check_is_orbit = [&](const std::vector<Point>& o) {
    if (o.empty()) throw std::invalid_argument("suborbits_equivalent: empty orbit");
    std::vector<Point> sorted = o;
    std::sort(sorted.begin(), sorted.end());
    if (orbit(g, o.front()) != sorted)
      throw std::invalid_argument("suborbits_equivalent: input is not an orbit");
  };
  check_is_orbit(o1);
  check_is_orbit(o2);
  if (o1.size() != o2.size()) return false;  // stabilizer orders already differ
  std::vector<Group> stabs2;
  stabs2.reserve(o2.size());
  for (Point b : o2) stabs2.push_back(g.point_stabilizer(b));
  for (Point a : o1) {
    const Group sa = g.point_stabilizer(a);
    bool found = false;
    for (const Group& sb : stabs2) {
      if (sa.order() != sb.order()) continue;
      bool equal = true;
      for (const auto& x : sa.generators())
        if (!sb.contains(x)) {
          equal = false;
          break;
        }
      if (equal)
        for (const auto& x : sb.generators())
          if (!sa.contains(x)) {
            equal = false;
            break;
          }
      if (equal) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Rational rank_subdegree_lower_bound(const BigInt& index, const BigInt& rank) {
  if (index < 2) throw std::invalid_argument("rank_subdegree_lower_bound: index < 2");
  if (rank < 2) throw std::invalid_argument("rank_subdegree_lower_bound: rank < 2");
  return Rational(index - 1, rank - 1);
}

std::size_t rank_burnside(const Group& g, Point alpha, std::uint64_t cap) {
  if (!g.is_transitive())
    throw std::invalid_argument("rank_burnside: group is not transitive");
  const Group stab = g.point_stabilizer(alpha);
  if (stab.order() > cap)
    throw std::runtime_error("rank_burnside: stabilizer too large to enumerate");
  BigInt fixed_sum = 0;
  stab.for_each_element(
      [&](const Permutation& p) {
        fixed_sum += BigInt(static_cast<std::uint64_t>(p.fixed_point_count()));
      },
      cap);
  const BigInt rank = fixed_sum / stab.order();
  if (rank * stab.order() != fixed_sum)
    throw std::logic_error("rank_burnside: non-integral average");
  return rank.convert_to<std::size_t>();
}

CosetAction coset_action(const Group& g, const Group& h, std::uint64_t index_cap) {
  if (h.degree() != g.degree())
    throw std::invalid_argument("coset_action: degree mismatch");
  for (const auto& x : h.generators())
    if (!g.contains(x))
      throw std::invalid_argument("coset_action: h is not a subgroup of g");
  const BigInt index = g.order() / h.order();
  if (index > index_cap) throw std::runtime_error("coset_action: index cap exceeded");

  const StabilizerChain& hchain = h.chain();
  CosetAction out;
  std::unordered_map<Permutation, Point, PermutationHash> where;
  out.coset_reps.push_back(canonical_coset_rep(hchain, Permutation(g.degree())));
  where.emplace(out.coset_reps[0], 0);
  std::vector<std::vector<Point>> images(g.generators().size());

  for (std::size_t head = 0; head < out.coset_reps.size(); ++head) {
    const Permutation rep = out.coset_reps[head];
    for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
      const Permutation moved =
          canonical_coset_rep(hchain, compose(rep, g.generators()[gi]));
      auto it = where.find(moved);
      Point target;
      if (it == where.end()) {
        target = static_cast<Point>(out.coset_reps.size());
        where.emplace(moved, target);
        out.coset_reps.push_back(moved);
      } else {
        target = it->second;
      }
      images[gi].push_back(target);
    }
  }

  const std::size_t n = out.coset_reps.size();
  if (BigInt(static_cast<std::uint64_t>(n)) != index)
    throw std::logic_error("coset_action: coset count disagrees with index");
  std::vector<Permutation> image_gens;
  for (auto& img : images) {
    img.resize(n);  // already full; resize is a no-op guard
    image_gens.push_back(Permutation(img));
  }
  out.image = Group(n, std::move(image_gens),
                    g.label().empty() ? "" : g.label() + "/" + h.label());
  out.kernel_order = g.order() / out.image.order();
  out.faithful = out.kernel_order == 1;
  return out;
}

Point coset_point(const CosetAction& action, const Group& h, const Permutation& x) {
  const Permutation canon = canonical_coset_rep(h.chain(), x);
  for (Point i = 0; i < action.coset_reps.size(); ++i)
    if (action.coset_reps[i] == canon) return i;
  throw std::invalid_argument("coset_point: element not matched to any coset");
}

}  // namespace basekit

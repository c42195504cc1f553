#include "basekit/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace basekit {

namespace {

// Number of leading base points fixed by g (stops at the first one moved).
std::size_t leading_fixed(const Permutation& g, const std::vector<ChainLevel>& levels) {
  std::size_t k = 0;
  for (const auto& lvl : levels) {
    if (g(lvl.base_point) != lvl.base_point) break;
    ++k;
  }
  return k;
}

}  // namespace

StabilizerChain StabilizerChain::build(std::size_t degree,
                                       const std::vector<Permutation>& generators,
                                       std::span<const Point> base_prefix) {
  StabilizerChain chain;
  chain.degree_ = degree;
  for (Point p : base_prefix) {
    if (p >= degree) throw std::out_of_range("base point out of range");
    ChainLevel lvl;
    lvl.base_point = p;
    chain.levels_.push_back(std::move(lvl));
  }
  chain.prefix_len_ = base_prefix.size();
  for (const auto& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
    if (g.is_identity()) continue;
    if (std::find(chain.strong_gens_.begin(), chain.strong_gens_.end(), g) ==
        chain.strong_gens_.end())
      chain.strong_gens_.push_back(g);
  }
  chain.run_schreier_sims();
  if (!chain.verify())
    throw std::logic_error("stabilizer chain failed verification");
  return chain;
}

void StabilizerChain::recompute_level_orbit(std::size_t level) {
  ChainLevel& lvl = levels_[level];
  lvl.orbit.clear();
  lvl.slot.assign(degree_, -1);
  lvl.parent_slot.clear();
  lvl.via_gen.clear();
  lvl.orbit.push_back(lvl.base_point);
  lvl.slot[lvl.base_point] = 0;
  lvl.parent_slot.push_back(-1);
  lvl.via_gen.push_back(0);
  for (std::size_t head = 0; head < lvl.orbit.size(); ++head) {
    const Point p = lvl.orbit[head];
    for (std::size_t gi : lvl.gen_indices) {
      const Point q = strong_gens_[gi](p);
      if (lvl.slot[q] < 0) {
        lvl.slot[q] = static_cast<std::int64_t>(lvl.orbit.size());
        lvl.orbit.push_back(q);
        lvl.parent_slot.push_back(static_cast<std::int64_t>(head));
        lvl.via_gen.push_back(gi);
      }
    }
  }
}

Permutation StabilizerChain::transversal_element(std::size_t level,
                                                 std::size_t slot) const {
  const ChainLevel& lvl = levels_[level];
  std::vector<std::size_t> path;
  std::int64_t s = static_cast<std::int64_t>(slot);
  while (lvl.parent_slot[s] >= 0) {
    path.push_back(lvl.via_gen[s]);
    s = lvl.parent_slot[s];
  }
  Permutation rep(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    rep = compose(rep, strong_gens_[*it]);
  return rep;
}

StabilizerChain::SiftResult StabilizerChain::sift(const Permutation& p,
                                                  std::size_t from_level) const {
  Permutation residue = p;
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const ChainLevel& lvl = levels_[l];
    const Point image = residue(lvl.base_point);
    if (image == lvl.base_point) continue;
    const std::int64_t s = lvl.slot[image];
    if (s < 0) return {std::move(residue), l};
    residue = compose(residue, transversal_element(l, static_cast<std::size_t>(s)).inverse());
  }
  return {std::move(residue), levels_.size()};
}

void StabilizerChain::run_schreier_sims() {
  // Give every generator a home level; generators fixing the whole base
  // so far open a new level at their smallest moved point.
  auto ensure_home = [&](const Permutation& g) {
    while (leading_fixed(g, levels_) == levels_.size()) {
      ChainLevel lvl;
      lvl.base_point = g.smallest_moved_point();
      levels_.push_back(std::move(lvl));
    }
  };
  for (const auto& g : strong_gens_) ensure_home(g);
  for (std::size_t gi = 0; gi < strong_gens_.size(); ++gi) {
    const std::size_t t = leading_fixed(strong_gens_[gi], levels_);
    for (std::size_t l = 0; l <= t && l < levels_.size(); ++l)
      levels_[l].gen_indices.push_back(gi);
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) recompute_level_orbit(l);

  if (!levels_.empty()) {
    std::int64_t cur = static_cast<std::int64_t>(levels_.size()) - 1;
    while (cur >= 0) {
      const std::size_t l = static_cast<std::size_t>(cur);
      bool level_complete = true;
      // Test all Schreier generators of this level against the deeper chain.
      for (std::size_t si = 0; si < levels_[l].orbit.size() && level_complete; ++si) {
        const Permutation rep = transversal_element(l, si);
        for (std::size_t k = 0; k < levels_[l].gen_indices.size(); ++k) {
          const std::size_t gi = levels_[l].gen_indices[k];
          const Point image = strong_gens_[gi](levels_[l].orbit[si]);
          const std::int64_t target = levels_[l].slot[image];
          const Permutation schreier = compose(
              compose(rep, strong_gens_[gi]),
              transversal_element(l, static_cast<std::size_t>(target)).inverse());
          auto [residue, fail_level] = sift(schreier, l + 1);
          if (residue.is_identity()) continue;
          // New strong generator; it fixes base points 0..fail_level-1.
          ensure_home(residue);
          const std::size_t t = leading_fixed(residue, levels_);
          const std::size_t new_gi = strong_gens_.size();
          strong_gens_.push_back(residue);
          for (std::size_t j = l + 1; j <= t && j < levels_.size(); ++j) {
            levels_[j].gen_indices.push_back(new_gi);
            recompute_level_orbit(j);
          }
          cur = static_cast<std::int64_t>(std::min(t, levels_.size() - 1));
          level_complete = false;
          break;
        }
      }
      if (level_complete) --cur;
    }
  }

  order_ = 1;
  for (const auto& lvl : levels_)
    order_ *= BigInt(static_cast<std::uint64_t>(lvl.orbit.size()));
}

std::vector<Point> StabilizerChain::base_points() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (const auto& lvl : levels_) out.push_back(lvl.base_point);
  return out;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("contains: degree mismatch");
  auto [residue, level] = sift(p, 0);
  return level == levels_.size() && residue.is_identity();
}

BigInt StabilizerChain::stabilizer_order(std::size_t k) const {
  BigInt out = 1;
  for (std::size_t l = k; l < levels_.size(); ++l)
    out *= BigInt(static_cast<std::uint64_t>(levels_[l].orbit.size()));
  return out;
}

std::vector<Permutation> StabilizerChain::stabilizer_generators(std::size_t k) const {
  if (k >= levels_.size()) return {};
  std::vector<Permutation> out;
  out.reserve(levels_[k].gen_indices.size());
  for (std::size_t gi : levels_[k].gen_indices) out.push_back(strong_gens_[gi]);
  return out;
}

bool StabilizerChain::verify() const {
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const ChainLevel& lvl = levels_[l];
    if (lvl.orbit.empty() || lvl.orbit[0] != lvl.base_point) return false;
    for (std::size_t si = 0; si < lvl.orbit.size(); ++si) {
      const Permutation rep = transversal_element(l, si);
      if (rep(lvl.base_point) != lvl.orbit[si]) return false;
      for (std::size_t gi : lvl.gen_indices) {
        const Point image = strong_gens_[gi](lvl.orbit[si]);
        const std::int64_t target = lvl.slot[image];
        if (target < 0) return false;
        const Permutation schreier = compose(
            compose(rep, strong_gens_[gi]),
            transversal_element(l, static_cast<std::size_t>(target)).inverse());
        auto [residue, level] = sift(schreier, l + 1);
        if (level != levels_.size() || !residue.is_identity()) return false;
      }
    }
  }
  return true;
}

Permutation StabilizerChain::uniform_element(Rng& rng) const {
  Permutation out(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const std::size_t n = levels_[l].orbit.size();
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    out = compose(out, transversal_element(l, pick(rng)));
  }
  return out;
}

bool StabilizerChain::for_each_element(
    const std::function<void(const Permutation&)>& fn, std::uint64_t cap) const {
  std::uint64_t count = 0;
  bool ok = true;
  std::function<void(std::size_t, const Permutation&)> rec =
      [&](std::size_t level, const Permutation& tail) {
        if (!ok) return;
        if (level == levels_.size()) {
          if (count >= cap) {
            ok = false;
            return;
          }
          ++count;
          fn(tail);
          return;
        }
        for (std::size_t si = 0; si < levels_[level].orbit.size() && ok; ++si)
          rec(level + 1, compose(transversal_element(level, si), tail));
      };
  rec(0, Permutation(degree_));
  return ok;
}

ProductReplacer::ProductReplacer(const std::vector<Permutation>& generators,
                                 std::size_t degree, std::uint64_t seed,
                                 std::size_t burn_in)
    : rng_(seed) {
  for (const auto& g : generators)
    if (!g.is_identity()) slots_.push_back(g);
  if (slots_.empty()) {
    slots_.push_back(Permutation(degree));
    return;
  }
  while (slots_.size() < 10) slots_.push_back(slots_[slots_.size() % generators.size()]);
  for (std::size_t i = 0; i < burn_in; ++i) next();
}

Permutation ProductReplacer::next() {
  if (slots_.size() < 2) return slots_[0];
  std::uniform_int_distribution<std::size_t> pick(0, slots_.size() - 1);
  std::size_t i = pick(rng_);
  std::size_t j = pick(rng_);
  while (j == i) j = pick(rng_);
  if (rng_() & 1)
    slots_[i] = compose(slots_[i], slots_[j]);
  else
    slots_[i] = compose(slots_[j], slots_[i]);
  return slots_[i];
}

Group::Group(std::size_t degree, std::vector<Permutation> generators, std::string label)
    : degree_(degree), generators_(std::move(generators)), label_(std::move(label)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");
}

const StabilizerChain& Group::chain() const {
  if (!chain_)
    chain_ = std::make_shared<const StabilizerChain>(
        StabilizerChain::build(degree_, generators_));
  return *chain_;
}

bool Group::contains(const Permutation& p) const { return chain().contains(p); }

StabilizerChain Group::chain_with_base(std::span<const Point> prefix) const {
  return StabilizerChain::build(degree_, generators_, prefix);
}

Group Group::point_stabilizer(Point alpha) const {
  const Point pts[1] = {alpha};
  return pointwise_stabilizer(pts);
}

Group Group::pointwise_stabilizer(std::span<const Point> points) const {
  auto chain = chain_with_base(points);
  Group out(degree_, chain.stabilizer_generators(points.size()));
  // The tail of the prefixed chain is already a chain for the stabilizer.
  StabilizerChain tail;
  tail.degree_ = degree_;
  std::vector<std::size_t> remap(chain.strong_gens_.size(), SIZE_MAX);
  for (std::size_t l = points.size(); l < chain.levels_.size(); ++l) {
    ChainLevel lvl = chain.levels_[l];
    for (auto& gi : lvl.gen_indices) {
      if (remap[gi] == SIZE_MAX) {
        remap[gi] = tail.strong_gens_.size();
        tail.strong_gens_.push_back(chain.strong_gens_[gi]);
      }
      gi = remap[gi];
    }
    for (auto& gi : lvl.via_gen) gi = (remap[gi] == SIZE_MAX) ? 0 : remap[gi];
    tail.levels_.push_back(std::move(lvl));
  }
  tail.order_ = chain.stabilizer_order(points.size());
  out.chain_ = std::make_shared<const StabilizerChain>(std::move(tail));
  return out;
}

BigInt Group::pointwise_stabilizer_order(std::span<const Point> points) const {
  return chain_with_base(points).stabilizer_order(points.size());
}

bool Group::is_transitive() const {
  if (degree_ == 0) return true;
  std::vector<bool> seen(degree_, false);
  std::vector<Point> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : generators_) {
      const Point q = g(queue[head]);
      if (!seen[q]) {
        seen[q] = true;
        ++count;
        queue.push_back(q);
      }
    }
  }
  return count == degree_;
}

Permutation Group::random_element(Rng& rng) const {
  return chain().uniform_element(rng);
}

bool Group::for_each_element(const std::function<void(const Permutation&)>& fn,
                             std::uint64_t cap) const {
  return chain().for_each_element(fn, cap);
}

Group Group::trivial(std::size_t degree) { return Group(degree, {}); }

}  // namespace basekit

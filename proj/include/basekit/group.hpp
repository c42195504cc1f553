#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "basekit/numeric.hpp"
#include "basekit/permutation.hpp"

namespace basekit {

using Rng = std::mt19937_64;

/// One level of a stabilizer chain: the orbit of base_point under the
/// generators fixing all earlier base points, as a Schreier tree.
struct ChainLevel {
  Point base_point = 0;
  std::vector<std::size_t> gen_indices;  // into StabilizerChain::strong_generators
  std::vector<Point> orbit;              // BFS order; orbit[0] == base_point
  std::vector<std::int64_t> slot;        // point -> index into orbit, -1 if absent
  std::vector<std::int64_t> parent_slot; // per orbit index; -1 for the root
  std::vector<std::size_t> via_gen;      // per orbit index; generator that reached it
};

/// Base and strong generating set, built by deterministic Schreier-Sims
/// and checked by an independent verification pass over all Schreier
/// generators.
class StabilizerChain {
 public:
  /// `base_prefix` points get dedicated leading levels even when their
  /// orbits are trivial, so the stabilizer of the prefix can be read off
  /// the chain directly.
  static StabilizerChain build(std::size_t degree,
                               const std::vector<Permutation>& generators,
                               std::span<const Point> base_prefix = {});

  std::size_t degree() const { return degree_; }
  const BigInt& order() const { return order_; }
  std::size_t depth() const { return levels_.size(); }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  const std::vector<Permutation>& strong_generators() const { return strong_gens_; }

  std::vector<Point> base_points() const;

  /// Transversal element u with base_point^u = orbit[slot].
  Permutation transversal_element(std::size_t level, std::size_t slot) const;

  bool contains(const Permutation& p) const;

  /// Order of the subgroup fixing the first `k` base points.
  BigInt stabilizer_order(std::size_t k) const;

  /// Strong generators fixing the first `k` base points; generates that
  /// stabilizer.
  std::vector<Permutation> stabilizer_generators(std::size_t k) const;

  /// Re-checks strong generation: every Schreier generator of every level
  /// must sift to the identity.
  bool verify() const;

  /// Uniform element via independent uniform transversal picks.
  Permutation uniform_element(Rng& rng) const;

  /// Enumerates all elements; returns false if `cap` was hit first.
  bool for_each_element(const std::function<void(const Permutation&)>& fn,
                        std::uint64_t cap) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> strong_gens_;
  std::vector<ChainLevel> levels_;
  BigInt order_ = 1;
  std::size_t prefix_len_ = 0;

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // first level that failed, or depth() if none
  };
  SiftResult sift(const Permutation& p, std::size_t from_level) const;

  void recompute_level_orbit(std::size_t level);
  void run_schreier_sims();
  friend class Group;
};

/// Product-replacement random walk over a generating set. Fast,
/// non-uniform; callers needing exact uniformity use
/// Group::random_element instead.
class ProductReplacer {
 public:
  ProductReplacer(const std::vector<Permutation>& generators, std::size_t degree,
                  std::uint64_t seed, std::size_t burn_in = 64);
  Permutation next();

 private:
  std::vector<Permutation> slots_;
  Rng rng_;
};

/// A permutation group given by generators, with a lazily built
/// stabilizer chain. Immutable once the chain exists; chain construction
/// is build-once and must be externally serialized.
class Group {
 public:
  Group() = default;
  Group(std::size_t degree, std::vector<Permutation> generators,
        std::string label = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::string& label() const { return label_; }

  const StabilizerChain& chain() const;
  const BigInt& order() const { return chain().order(); }
  bool is_trivial() const { return order() == 1; }

  bool contains(const Permutation& p) const;

  /// Fresh chain whose base starts with `prefix`.
  StabilizerChain chain_with_base(std::span<const Point> prefix) const;

  Group point_stabilizer(Point alpha) const;
  Group pointwise_stabilizer(std::span<const Point> points) const;

  BigInt pointwise_stabilizer_order(std::span<const Point> points) const;

  bool is_transitive() const;

  /// Exact-uniform draw via the chain's transversals.
  Permutation random_element(Rng& rng) const;

  bool for_each_element(const std::function<void(const Permutation&)>& fn,
                        std::uint64_t cap) const;

  static Group trivial(std::size_t degree);

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::string label_;
  mutable std::shared_ptr<const StabilizerChain> chain_;
};

}  // namespace basekit

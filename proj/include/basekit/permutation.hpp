#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "basekit/numeric.hpp"

namespace basekit {

using Point = std::uint32_t;

/// A permutation of {0,...,n-1} stored as an image list. The action is on
/// the right throughout: alpha^g = g(alpha), and compose(p,q) acts as
/// "p first, then q".
class Permutation {
 public:
  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree = 0);

  /// Takes ownership of an image list; throws std::invalid_argument if it
  /// is not a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Point smallest_moved_point() const;  // degree() if identity
  std::size_t fixed_point_count() const;

  Permutation inverse() const;

  /// Nontrivial cycles, each rotated to start at its minimum, sorted by
  /// that minimum.
  std::vector<std::vector<Point>> cycles() const;
  std::string cycle_string() const;  // "()" for the identity

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// p then q: result(i) = q(p(i)). Degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

/// g^-1 * x * g. Degrees must match.
Permutation conjugate(const Permutation& x, const Permutation& g);

/// lcm of the cycle lengths.
BigInt element_order(const Permutation& p);

/// True iff element_order(p) is prime.
bool has_prime_order(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace basekit

#include "basekit/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace basekit {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v])
      throw std::invalid_argument("image list is not a bijection");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Point Permutation::smallest_moved_point() const {
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return static_cast<Point>(images_.size());
}

std::size_t Permutation::fixed_point_count() const {
  std::size_t k = 0;
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] == i) ++k;
  return k;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cyc;
    Point j = i;
    do {
      cyc.push_back(j);
      seen[j] = true;
      j = images_[j];
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ',';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<Point> img(p.degree());
  for (Point i = 0; i < p.degree(); ++i) img[i] = q(p(i));
  return Permutation(std::move(img));
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  if (x.degree() != g.degree())
    throw std::invalid_argument("conjugate: degree mismatch");
  // g^-1 x g maps alpha^g -> (alpha^x)^g.
  std::vector<Point> img(x.degree());
  for (Point i = 0; i < x.degree(); ++i) img[g(i)] = g(x(i));
  return Permutation(std::move(img));
}

BigInt element_order(const Permutation& p) {
  BigInt ord = 1;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    BigInt len = 0;
    Point j = i;
    do {
      seen[j] = true;
      ++len;
      j = p(j);
    } while (j != i);
    ord = lcm(ord, len);
  }
  return ord;
}

bool has_prime_order(const Permutation& p) {
  const BigInt ord = element_order(p);
  if (ord < 2) return false;
  for (BigInt d = 2; d * d <= ord; ++d)
    if (ord % d == 0) return false;
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace basekit

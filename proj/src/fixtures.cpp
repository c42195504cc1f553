#include "basekit/fixtures.hpp"

#include <array>
#include <stdexcept>

namespace basekit {

namespace {

Permutation from_images(std::vector<Point> v) { return Permutation(std::move(v)); }

Group make(std::size_t degree, std::vector<Permutation> gens, const std::string& name,
           const BigInt& expected_order) {
  Group g(degree, std::move(gens), name);
  if (g.order() != expected_order)
    throw std::logic_error("fixture " + name + ": order check failed, got " +
                           g.order().str());
  return g;
}

BigInt factorial(std::uint64_t n) {
  BigInt f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

Group symmetric(std::uint64_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Point> t(n);
    for (Point i = 0; i < n; ++i) t[i] = i;
    std::swap(t[0], t[1]);
    gens.push_back(from_images(t));
    std::vector<Point> c(n);
    for (Point i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.push_back(from_images(c));
  }
  return make(n, std::move(gens), "s" + std::to_string(n), factorial(n));
}

Group alternating(std::uint64_t n) {
  std::vector<Permutation> gens;
  if (n >= 3) {
    std::vector<Point> t(n);
    for (Point i = 0; i < n; ++i) t[i] = i;
    t[0] = 1;
    t[1] = 2;
    t[2] = 0;
    gens.push_back(from_images(t));
    std::vector<Point> c(n);
    if (n % 2 == 1) {
      for (Point i = 0; i < n; ++i) c[i] = (i + 1) % n;
    } else {
      c[0] = 0;
      for (Point i = 1; i < n; ++i) c[i] = 1 + (i % (n - 1));
    }
    gens.push_back(from_images(c));
  }
  return make(n, std::move(gens), "a" + std::to_string(n),
              n < 2 ? BigInt(1) : factorial(n) / 2);
}

Group cyclic(std::uint64_t n) {
  std::vector<Point> c(n);
  for (Point i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return make(n, {from_images(c)}, "c" + std::to_string(n), BigInt(n));
}

Group dihedral(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("dihedral fixture needs n >= 3");
  std::vector<Point> rot(n), refl(n);
  for (Point i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return make(n, {from_images(rot), from_images(refl)}, "d" + std::to_string(n),
              BigInt(2 * n));
}

Group s4_on_pairs() {
  // S4 acting on the 6 unordered pairs from {0,1,2,3}.
  const std::array<std::pair<Point, Point>, 6> pairs = {
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  auto pair_index = [&](Point a, Point b) -> Point {
    if (a > b) std::swap(a, b);
    for (Point i = 0; i < 6; ++i)
      if (pairs[i].first == a && pairs[i].second == b) return i;
    throw std::logic_error("bad pair");
  };
  const Group s4 = symmetric(4);
  std::vector<Permutation> gens;
  for (const auto& g : s4.generators()) {
    std::vector<Point> img(6);
    for (Point i = 0; i < 6; ++i)
      img[i] = pair_index(g(pairs[i].first), g(pairs[i].second));
    gens.push_back(from_images(img));
  }
  return make(6, std::move(gens), "s4_pairs", 24);
}

Group from_table(const std::string& name, std::size_t degree,
                 std::vector<std::vector<Point>> images, const BigInt& expected) {
  std::vector<Permutation> gens;
  for (auto& v : images) gens.push_back(from_images(std::move(v)));
  return make(degree, std::move(gens), name, expected);
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (int n = 3; n <= 8; ++n) names.push_back("s" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) names.push_back("a" + std::to_string(n));
  for (int n : {2, 3, 4, 5, 6, 7, 10}) names.push_back("c" + std::to_string(n));
  for (int n : {4, 5, 6, 8}) names.push_back("d" + std::to_string(n));
  names.push_back("s4_pairs");
  names.push_back("psl27_7");
  names.push_back("psl27_8");
  names.push_back("m11");
  names.push_back("m11_12");
  names.push_back("m12");
  names.push_back("m22");
  names.push_back("m23");
  names.push_back("m24");
  return names;
}

Group fixture_group(const std::string& name) {
  if (name == "s4_pairs") return s4_on_pairs();
  if (name == "psl27_7")
    return from_table("psl27_7", 7,
                      {{1, 2, 3, 4, 5, 6, 0}, {1, 5, 0, 6, 4, 2, 3}}, 168);
  if (name == "psl27_8")
    return from_table("psl27_8", 8,
                      {{1, 2, 3, 4, 5, 6, 0, 7}, {7, 6, 3, 2, 5, 4, 1, 0}}, 168);
  if (name == "m11")
    return from_table("m11", 11,
                      {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0},
                       {0, 1, 6, 9, 5, 3, 10, 2, 8, 4, 7}},
                      7920);
  if (name == "m11_12")
    return from_table("m11_12", 12,
                      {{4, 11, 0, 8, 1, 6, 7, 2, 10, 9, 5, 3},
                       {3, 8, 10, 4, 11, 9, 1, 6, 7, 5, 2, 0}},
                      7920);
  if (name == "m12")
    return from_table("m12", 12,
                      {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0, 11},
                       {0, 1, 6, 9, 5, 3, 10, 2, 8, 4, 7, 11},
                       {11, 10, 5, 7, 8, 2, 9, 3, 4, 6, 1, 0}},
                      95040);
  if (name == "m22")
    return from_table("m22", 22,
                      {{0, 21, 18, 20, 13, 19, 17, 3, 16, 10, 1, 15, 2, 8, 9, 14, 7,
                        12, 5, 6, 4, 11},
                       {2, 18, 9, 7, 17, 15, 13, 14, 10, 3, 5, 4, 16, 1, 19, 11, 21,
                        8, 12, 0, 20, 6}},
                      443520);
  if (name == "m23")
    return from_table("m23", 23,
                      {{1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12,
                        13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 0},
                       {0, 1, 16, 12, 3, 5, 8, 17, 2, 6, 11, 22, 13, 18, 19, 14, 9,
                        10, 4, 21, 15, 20, 7}},
                      10200960);
  if (name == "m24")
    return from_table(
        "m24", 24,
        {{1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12,
          13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 0,  23},
         {0,  1,  16, 12, 3,  5, 8,  17, 2,  6,  11, 22,
          13, 18, 19, 14, 9,  10, 4, 21, 15, 20, 7,  23},
         {23, 22, 11, 15, 17, 9,  19, 13, 20, 5,  16, 2,
          21, 7,  18, 3,  10, 4,  14, 6,  8,  12, 1,  0}},
        244823040);
  if (name.size() >= 2) {
    const char kind = name[0];
    bool numeric = true;
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) numeric = false;
    if (numeric) {
      const std::uint64_t n = std::stoull(name.substr(1));
      if (kind == 's') return symmetric(n);
      if (kind == 'a') return alternating(n);
      if (kind == 'c') return cyclic(n);
      if (kind == 'd') return dihedral(n);
    }
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace basekit

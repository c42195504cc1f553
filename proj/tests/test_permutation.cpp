#include <doctest.h>

#include "basekit/permutation.hpp"
#include "oracles.hpp"

using namespace basekit;

namespace {
Permutation perm(std::vector<Point> v) { return Permutation(std::move(v)); }
}  // namespace

TEST_CASE("construction validates bijections") {
  CHECK(Permutation(4).is_identity());
  CHECK(Permutation::identity(0).degree() == 0);
  CHECK_THROWS_AS(perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(perm({0, 3}), std::invalid_argument);
}

TEST_CASE("right action composition: p then q") {
  const Permutation p = perm({1, 0, 2});   // (0 1)
  const Permutation q = perm({0, 2, 1});   // (1 2)
  const Permutation pq = compose(p, q);
  // 0^(pq) = (0^p)^q = 1^q = 2
  CHECK(pq(0) == 2);
  CHECK(pq(1) == 0);
  CHECK(pq(2) == 1);
  CHECK(compose(p, p.inverse()).is_identity());
  for (Point a = 0; a < 3; ++a) CHECK(pq(a) == q(p(a)));
}

TEST_CASE("conjugate is g^-1 x g and preserves order") {
  const Permutation x = perm({1, 0, 2, 3});      // (0 1)
  const Permutation g = perm({1, 2, 3, 0});      // (0 1 2 3)
  const Permutation c = conjugate(x, g);
  CHECK(c == compose(compose(g.inverse(), x), g));
  CHECK(c == perm({0, 2, 1, 3}));  // (0 1)^(0 1 2 3) = (1 2)
  CHECK(element_order(c) == element_order(x));
  // Conjugation maps points through g: (alpha^x)^g = (alpha^g)^c.
  for (Point a = 0; a < 4; ++a) CHECK(g(x(a)) == c(g(a)));
}

TEST_CASE("element_order is the lcm of cycle lengths") {
  CHECK(element_order(Permutation(5)) == 1);
  CHECK(element_order(perm({1, 0, 3, 4, 2})) == 6);  // (0 1)(2 3 4)
  CHECK(element_order(perm({1, 0, 2})) == 2);
  CHECK(element_order(perm({1, 2, 3, 4, 5, 6, 0})) == 7);
}

TEST_CASE("has_prime_order") {
  CHECK_FALSE(has_prime_order(Permutation(3)));
  CHECK(has_prime_order(perm({1, 0, 2})));
  CHECK_FALSE(has_prime_order(perm({1, 0, 3, 4, 2})));        // order 6
  CHECK(has_prime_order(perm({1, 2, 0, 4, 5, 3})));           // order 3
}

TEST_CASE("cycles are canonical and printable") {
  const Permutation p = perm({1, 0, 2, 4, 3});
  const auto cyc = p.cycles();
  REQUIRE(cyc.size() == 2);
  CHECK(cyc[0] == std::vector<Point>{0, 1});
  CHECK(cyc[1] == std::vector<Point>{3, 4});
  CHECK(p.cycle_string() == "(0,1)(3,4)");
  CHECK(Permutation(4).cycle_string() == "()");
}

TEST_CASE("fixed points and smallest moved point") {
  const Permutation p = perm({0, 1, 3, 2});
  CHECK(p.fixed_point_count() == 2);
  CHECK(p.smallest_moved_point() == 2);
  CHECK(Permutation(6).smallest_moved_point() == 6);
  CHECK(Permutation(6).fixed_point_count() == 6);
}

TEST_CASE("conjugation preserves order for random pairs in S5") {
  const auto elems = oracle::closure_elements(
      5, {perm({1, 0, 2, 3, 4}), perm({1, 2, 3, 4, 0})});
  REQUIRE(elems.size() == 120);
  Rng rng(42);
  for (int i = 0; i < 50; ++i) {
    const auto& x = elems[rng() % elems.size()];
    const auto& g = elems[rng() % elems.size()];
    CHECK(element_order(conjugate(x, g)) == element_order(x));
  }
}

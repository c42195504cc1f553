#include <doctest.h>

#include <algorithm>
#include <map>

#include "basekit/fixtures.hpp"
#include "basekit/group.hpp"
#include "basekit/orbits.hpp"
#include "oracles.hpp"

using namespace basekit;

namespace {

Permutation perm(std::vector<Point> v) { return Permutation(std::move(v)); }

// Corpus of groups small enough for full closure enumeration.
const std::vector<std::string> kSmallCorpus = {
    "s3", "s4", "s5", "s6", "a4", "a5", "a6",      "c2",      "c3", "c5",
    "c6", "c7", "c10", "d4", "d5", "d6", "d8", "s4_pairs", "psl27_7", "psl27_8"};

}  // namespace

TEST_CASE("chain order matches brute-force closure on the small corpus") {
  for (const auto& name : kSmallCorpus) {
    CAPTURE(name);
    const Group g = fixture_group(name);
    const auto elems = oracle::closure_elements(g.degree(), g.generators());
    CHECK(g.order() == BigInt(static_cast<std::uint64_t>(elems.size())));
  }
}

TEST_CASE("chain construction examples") {
  const Group g(4, {perm({1, 0, 2, 3}), perm({1, 2, 3, 0})});
  CHECK(g.order() == 24);

  const Group trivial(5, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.chain().base_points().empty());

  const Group c5(5, {perm({1, 2, 3, 4, 0})});
  CHECK(c5.order() == 5);
  CHECK(c5.chain().base_points().size() == 1);
}

TEST_CASE("chain verification pass accepts every corpus chain") {
  for (const auto& name : kSmallCorpus) {
    CAPTURE(name);
    CHECK(fixture_group(name).chain().verify());
  }
  CHECK(fixture_group("m12").chain().verify());
}

TEST_CASE("membership: sifting soundness against closure, order <= 5000") {
  for (const auto& name : {"s4", "a5", "d6", "s4_pairs", "psl27_7", "c10", "s6"}) {
    CAPTURE(name);
    const Group g = fixture_group(name);
    const auto all = oracle::closure_elements(g.degree(), g.generators());
    const auto members = oracle::PermSet(all.begin(), all.end());
    for (const auto& x : all) CHECK(g.contains(x));
    // Every permutation of the symmetric group on the same points is
    // classified correctly (spot-check by random sampling).
    Rng rng(7);
    std::vector<Point> img(g.degree());
    for (int trial = 0; trial < 200; ++trial) {
      for (Point i = 0; i < g.degree(); ++i) img[i] = i;
      std::shuffle(img.begin(), img.end(), rng);
      const Permutation p(img);
      CHECK(g.contains(p) == members.contains(p));
    }
  }
}

TEST_CASE("membership basics") {
  const Group g = fixture_group("s4");
  CHECK(g.contains(Permutation(4)));
  const Group c5(5, {perm({1, 2, 3, 4, 0})});
  CHECK_FALSE(c5.contains(perm({1, 0, 2, 3, 4})));
  const Group a4 = fixture_group("a4");
  CHECK(a4.contains(perm({1, 2, 0, 3})));
  CHECK(a4.contains(perm({0, 2, 3, 1})));
  CHECK_FALSE(a4.contains(perm({1, 0, 2, 3})));
  CHECK_THROWS_AS(g.contains(Permutation(5)), std::invalid_argument);
}

TEST_CASE("orbit-stabilizer holds at every point of every corpus group") {
  for (const auto& name : kSmallCorpus) {
    CAPTURE(name);
    const Group g = fixture_group(name);
    for (Point a = 0; a < g.degree(); ++a) {
      const BigInt orbit_size(static_cast<std::uint64_t>(orbit(g, a).size()));
      CHECK(orbit_size * g.point_stabilizer(a).order() == g.order());
    }
  }
}

TEST_CASE("point stabilizer of S4 at 3 is S3 on the first three points") {
  const Group g = fixture_group("s4");
  const Group h = g.point_stabilizer(3);
  CHECK(h.order() == 6);
  for (const auto& x : oracle::closure_elements(h.degree(), h.generators())) {
    CHECK(x(3) == 3);
  }
  CHECK_THROWS_AS(g.point_stabilizer(4), std::out_of_range);
}

TEST_CASE("stabilizer of a fixed point is the whole group") {
  const Group g(4, {perm({0, 3, 2, 1})});  // <(1 3)>, fixes 0 and 2
  CHECK(g.point_stabilizer(0).order() == g.order());
  CHECK(g.point_stabilizer(2).order() == g.order());
  CHECK(g.point_stabilizer(1).order() == 1);
}

TEST_CASE("pointwise stabilizer examples") {
  const Group g = fixture_group("s4");
  const std::vector<Point> b3 = {0, 1, 2};
  const std::vector<Point> b2 = {0, 1};
  CHECK(g.pointwise_stabilizer(b3).order() == 1);
  CHECK(g.pointwise_stabilizer(b2).order() == 2);
  CHECK(g.pointwise_stabilizer({}).order() == 24);
  CHECK(g.pointwise_stabilizer_order(b2) == 2);
}

TEST_CASE("pointwise stabilizer agrees with closure filtering") {
  for (const auto& name : {"s5", "d6", "s4_pairs", "psl27_7"}) {
    CAPTURE(name);
    const Group g = fixture_group(name);
    const auto elems = oracle::closure_elements(g.degree(), g.generators());
    Rng rng(11);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Point> pts;
      for (int k = 0; k < 2; ++k)
        pts.push_back(static_cast<Point>(rng() % g.degree()));
      std::uint64_t expect = 0;
      for (const auto& x : elems) {
        bool fixes = true;
        for (Point p : pts) fixes = fixes && x(p) == p;
        if (fixes) ++expect;
      }
      CAPTURE(pts[0]);
      CAPTURE(pts[1]);
      CHECK(g.pointwise_stabilizer(pts).order() == expect);
      CHECK(g.pointwise_stabilizer_order(pts) == expect);
    }
  }
}

TEST_CASE("conjugates of members are members") {
  const Group g = fixture_group("psl27_7");
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    const Permutation x = g.random_element(rng);
    const Permutation h = g.random_element(rng);
    CHECK(g.contains(conjugate(x, h)));
  }
}

TEST_CASE("exact-uniform sampling: frequencies on C6 and closure membership") {
  const Group c6 = fixture_group("c6");
  Rng rng(12345);
  std::map<std::string, int> counts;
  const int trials = 6000;
  for (int i = 0; i < trials; ++i) ++counts[c6.random_element(rng).cycle_string()];
  CHECK(counts.size() == 6);
  for (const auto& [k, n] : counts) {
    CAPTURE(k);
    // Expected 1000 per element; +-20% is > 6 sigma for a binomial(6000, 1/6).
    CHECK(n > 800);
    CHECK(n < 1200);
  }

  const Group g = fixture_group("m11");
  for (int i = 0; i < 25; ++i) CHECK(g.contains(g.random_element(rng)));

  const Group trivial = Group::trivial(4);
  CHECK(trivial.random_element(rng).is_identity());
}

TEST_CASE("for_each_element enumerates exactly the closure") {
  const Group g = fixture_group("d5");
  const auto expect = oracle::closure_set(g.degree(), g.generators());
  oracle::PermSet seen;
  CHECK(g.for_each_element([&](const Permutation& p) { seen.insert(p); }, 1000));
  CHECK(seen == expect);
  // Cap is honored.
  std::uint64_t visited = 0;
  CHECK_FALSE(fixture_group("s5").for_each_element(
      [&](const Permutation&) { ++visited; }, 10));
  CHECK(visited <= 10);
}

TEST_CASE("stabilizer_order walks down the chain") {
  const Group g = fixture_group("s5");
  const auto& chain = g.chain();
  BigInt expect = 120;
  CHECK(chain.stabilizer_order(0) == expect);
  const auto base = chain.base_points();
  for (std::size_t k = 1; k <= base.size(); ++k) {
    std::vector<Point> prefix(base.begin(), base.begin() + k);
    CHECK(chain.stabilizer_order(k) == g.pointwise_stabilizer_order(prefix));
  }
}

TEST_CASE("Mathieu fixture orders") {
  CHECK(fixture_group("m11").order() == 7920);
  CHECK(fixture_group("m11_12").order() == 7920);
  CHECK(fixture_group("m12").order() == 95040);
  CHECK(fixture_group("m22").order() == 443520);
  CHECK(fixture_group("m23").order() == 10200960);
  CHECK(fixture_group("m24").order() == BigInt("244823040"));
  CHECK_THROWS_AS(fixture_group("nope"), std::invalid_argument);
}

TEST_CASE("product replacement yields members") {
  const Group g = fixture_group("a6");
  ProductReplacer pr(g.generators(), g.degree(), 99);
  for (int i = 0; i < 50; ++i) CHECK(g.contains(pr.next()));
}
